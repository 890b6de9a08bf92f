// SPDX-License-Identifier: Apache-2.0
//
// itsce: channel-parameter estimation for ITS-assisted high-speed-rail links
// Copyright (C) 2026 The itsce authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ITSCE_CONFIG_IO_HPP
#define ITSCE_CONFIG_IO_HPP

#include "itsce/channel_model.hpp"
#include "itsce/system_config.hpp"

#include <iosfwd>
#include <string>

namespace itsce
{
    struct Scenario
    {
        SystemConfig config;
        ChannelParams params;
    };

    // N = 25, I = 40, T = 10 us, 5x6 ITS, f_d = 901 / 900 Hz,
    // beta1 = 1@pi/4, beta2 = 1@pi/5, phi = 0.08 pi / 0.06 pi, SNR 0..30 dB.
    Scenario reference_scenario();

    // Flat `key = value` text, one entry per line, `#` starts a comment.
    // Keys not present keep their reference_scenario() value; unknown keys are
    // rejected. Real values accept an optional `pi` factor ("0.08pi", "pi"),
    // complex values are `magnitude@phase`, snr_grid is a comma list.
    Scenario parse_scenario(std::istream &in, const std::string &source = "<stream>");
    Scenario load_scenario(const std::string &path);

    // Writes every key in full precision; parsing the result reproduces s
    // (complex gains up to polar round-off).
    std::string format_scenario(const Scenario &s);
}

#endif
