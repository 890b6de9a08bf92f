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

#ifndef ITSCE_PLOT_SCRIPT_HPP
#define ITSCE_PLOT_SCRIPT_HPP

#include <string>

namespace itsce
{
    // Self-contained gnuplot script that reads the sweep CSV and renders four
    // log-scale MSE/CRLB-vs-SNR figures (xi, Doppler, path gains, phase
    // differences) as <image_prefix>_{xi,fd,beta,phi}.png.
    std::string plot_script(const std::string &csv_path, const std::string &image_prefix);

    void write_plot_script(const std::string &script_path, const std::string &csv_path);
}

#endif
