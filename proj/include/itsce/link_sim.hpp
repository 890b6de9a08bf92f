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

#ifndef ITSCE_LINK_SIM_HPP
#define ITSCE_LINK_SIM_HPP

#include "itsce/channel_model.hpp"
#include "itsce/pilot_design.hpp"
#include "itsce/types.hpp"

#include <cstdint>
#include <random>

namespace itsce
{
    // 10^(-snr_db / 10); +inf dB gives exactly 0 (noiseless diagnostic mode).
    double sigma_from_snr(double snr_db);

    // Identifies one independent random stream. Streams are keyed, not
    // sequenced, so a trial's draws do not depend on which thread runs it.
    struct StreamId
    {
        std::uint64_t seed = 0;
        std::uint64_t snr_index = 0;
        std::uint64_t trial = 0;
        std::uint64_t domain = 0;
    };

    inline constexpr std::uint64_t noise_domain = 1;

    class RngStream
    {
    public:
        explicit RngStream(const StreamId &id);

        // CN(0, variance): real and imaginary parts each N(0, variance / 2).
        cplx complex_gaussian(double variance);

    private:
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
    };

    struct ReceivedFrame
    {
        // column i of block[k] is y_{k,i} (length N)
        CMat block[2];
        double noise_variance = 0.0;

        int n_pilots() const noexcept { return static_cast<int>(block[0].rows()); }
        int n_subblocks() const noexcept { return static_cast<int>(block[0].cols()); }

        // Y_i = [y_{0,i}, y_{1,i}], N x 2
        CMat subblock(int i) const;
    };

    // y[k,i,n] = g_{k,i} + psi[n] h_{k,i}
    ReceivedFrame noiseless_frame(const ChannelParams &params, const PilotDesign &design, const SystemConfig &config);

    // Adds i.i.d. CN(0, noise_variance) in (k, i, n) order, real part first.
    void add_noise(ReceivedFrame &frame, double noise_variance, RngStream &rng);

    ReceivedFrame synthesize_frame(const ChannelParams &params, const PilotDesign &design,
                                   const SystemConfig &config, double snr_db, RngStream &rng);
}

#endif
