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

#include "itsce/link_sim.hpp"

#include <cmath>

namespace itsce
{
    double sigma_from_snr(double snr_db)
    {
        return std::pow(10.0, -snr_db / 10.0);
    }

    RngStream::RngStream(const StreamId &id)
    {
        auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
        auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
        std::seed_seq seq{lo(id.seed), hi(id.seed), lo(id.snr_index), hi(id.snr_index),
                          lo(id.trial), hi(id.trial), lo(id.domain), hi(id.domain)};
        engine_.seed(seq);
    }

    cplx RngStream::complex_gaussian(double variance)
    {
        const double s = std::sqrt(0.5 * variance);
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {s * re, s * im};
    }

    CMat ReceivedFrame::subblock(int i) const
    {
        if (i < 0 || i >= n_subblocks())
            throw Error(ErrorKind::index_out_of_range, "subblock " + std::to_string(i));
        CMat y(n_pilots(), 2);
        y.col(0) = block[0].col(i);
        y.col(1) = block[1].col(i);
        return y;
    }

    ReceivedFrame noiseless_frame(const ChannelParams &params, const PilotDesign &design, const SystemConfig &config)
    {
        if (design.n_pilots() != config.n_pilots || design.n_subblocks() != config.n_subblocks ||
            design.elements() != config.elements())
            throw Error(ErrorKind::invalid_design, "pilot design dimensions do not match the system config");

        const int n_pilots = config.n_pilots;
        const int n_sub = config.n_subblocks;
        ReceivedFrame frame;
        for (int k = 0; k < 2; ++k)
        {
            frame.block[k].resize(n_pilots, n_sub);
            for (int i = 0; i < n_sub; ++i)
            {
                const cplx g = direct_channel(params, k, i, config);
                const CVec phi_bar_i = design.phi_bar.row(i).transpose();
                const cplx h = initial_cascaded_channel(params, config.geom, phi_bar_i, k, i, config);
                frame.block[k].col(i) = (g + design.psi.array() * h).matrix();
            }
        }
        return frame;
    }

    void add_noise(ReceivedFrame &frame, double noise_variance, RngStream &rng)
    {
        if (noise_variance < 0.0 || !std::isfinite(noise_variance))
            throw Error(ErrorKind::invalid_input, "noise variance must be finite and nonnegative");
        frame.noise_variance = noise_variance;
        if (noise_variance == 0.0)
            return;
        for (auto &blk : frame.block)
            for (Eigen::Index i = 0; i < blk.cols(); ++i)
                for (Eigen::Index n = 0; n < blk.rows(); ++n)
                    blk(n, i) += rng.complex_gaussian(noise_variance);
    }

    ReceivedFrame synthesize_frame(const ChannelParams &params, const PilotDesign &design,
                                   const SystemConfig &config, double snr_db, RngStream &rng)
    {
        ReceivedFrame frame = noiseless_frame(params, design, config);
        add_noise(frame, sigma_from_snr(snr_db), rng);
        return frame;
    }
}
