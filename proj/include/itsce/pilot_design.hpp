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

#ifndef ITSCE_PILOT_DESIGN_HPP
#define ITSCE_PILOT_DESIGN_HPP

#include "itsce/channel_model.hpp"
#include "itsce/system_config.hpp"
#include "itsce/types.hpp"

#include <string>
#include <vector>

namespace itsce
{
    // Training vector psi (second column of Psi = [1_N, psi]) and the initial
    // refraction matrix Phi_bar (I x M). Both pilot blocks reuse the same design.
    struct PilotDesign
    {
        CVec psi;
        CMat phi_bar;

        int n_pilots() const noexcept { return static_cast<int>(psi.size()); }
        int n_subblocks() const noexcept { return static_cast<int>(phi_bar.rows()); }
        int elements() const noexcept { return static_cast<int>(phi_bar.cols()); }

        // Psi = [1_N, psi], N x 2
        CMat training_matrix() const;
    };

    // psi[n] = exp(-j 2 pi n / N), the DFT column with index 1.
    CVec design_training_vector(int n_pilots);

    // [Phi_bar]_{i,m} = exp(-j 2 pi i m / I), first M columns of the I-point DFT.
    CMat design_refraction_matrix(const SystemConfig &config);

    PilotDesign make_pilot_design(const SystemConfig &config);

    enum class Constraint
    {
        direct_doppler_aliasing,
        cascaded_doppler_aliasing,
        pilot_minimum,
        refraction_rank,
        c_argument_range,
        geometry,
        subblock_duration,
        trials,
        snr_grid
    };

    struct Violation
    {
        Constraint constraint;
        std::string message;
    };

    struct ValidationReport
    {
        std::vector<Violation> violations;

        bool ok() const noexcept { return violations.empty(); }
        bool violates(Constraint c) const noexcept;
        std::string to_string() const;
    };

    ValidationReport validate_config(const SystemConfig &config, const ChannelParams &params);
}

#endif
