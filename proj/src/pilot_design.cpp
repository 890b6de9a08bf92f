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

#include "itsce/pilot_design.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace itsce
{
    CMat PilotDesign::training_matrix() const
    {
        CMat psi_mat(psi.size(), 2);
        psi_mat.col(0).setOnes();
        psi_mat.col(1) = psi;
        return psi_mat;
    }

    CVec design_training_vector(int n_pilots)
    {
        if (n_pilots < 2)
            throw Error(ErrorKind::infeasible_design,
                        "at least two pilots per subblock are required, got N = " + std::to_string(n_pilots));
        CVec psi(n_pilots);
        for (int n = 0; n < n_pilots; ++n)
            psi(n) = unit_phasor(-2.0 * pi * n / n_pilots);
        return psi;
    }

    CMat design_refraction_matrix(const SystemConfig &config)
    {
        const int n_sub = config.n_subblocks;
        const int n_elem = config.elements();
        if (n_elem < 1 || n_sub < n_elem)
            throw Error(ErrorKind::infeasible_design,
                        "refraction design needs I >= M, got I = " + std::to_string(n_sub) +
                            ", M = " + std::to_string(n_elem));
        CMat phi_bar(n_sub, n_elem);
        for (int i = 0; i < n_sub; ++i)
            for (int m = 0; m < n_elem; ++m)
            {
                // reduce i*m modulo I before scaling so large products stay exact
                const int r = (i * m) % n_sub;
                phi_bar(i, m) = unit_phasor(-2.0 * pi * r / n_sub);
            }
        return phi_bar;
    }

    PilotDesign make_pilot_design(const SystemConfig &config)
    {
        return PilotDesign{design_training_vector(config.n_pilots), design_refraction_matrix(config)};
    }

    bool ValidationReport::violates(Constraint c) const noexcept
    {
        return std::any_of(violations.begin(), violations.end(),
                           [c](const Violation &v) { return v.constraint == c; });
    }

    std::string ValidationReport::to_string() const
    {
        if (ok())
            return "all constraints satisfied\n";
        std::ostringstream os;
        os << violations.size() << " constraint(s) violated:\n";
        for (const auto &v : violations)
            os << "  - " << v.message << '\n';
        return os.str();
    }

    namespace
    {
        // (-pi, pi] up to rounding in the products that form the argument
        constexpr double range_tol = 1e-12;
        bool in_principal_range(double a) { return a > -pi + range_tol && a <= pi + range_tol; }

        std::string fmt(double x)
        {
            std::ostringstream os;
            os.precision(6);
            os << x;
            return os.str();
        }
    }

    ValidationReport validate_config(const SystemConfig &config, const ChannelParams &params)
    {
        ValidationReport report;
        auto fail = [&report](Constraint c, std::string msg) { report.violations.push_back({c, std::move(msg)}); };

        const bool duration_ok = config.subblock_duration > 0.0 && std::isfinite(config.subblock_duration);
        if (!duration_ok)
            fail(Constraint::subblock_duration, "subblock duration T must be positive, got " + fmt(config.subblock_duration));

        if (config.n_subblocks >= 1 && duration_ok)
        {
            const double block = config.block_duration();
            const double alpha1 = 2.0 * pi * params.f_d1 * block;
            const double alpha2 = 2.0 * pi * params.f_d2 * block;
            if (!in_principal_range(alpha1))
                fail(Constraint::direct_doppler_aliasing,
                     "direct-link Doppler aliases: 2 pi f_d1 I T = " + fmt(alpha1 / pi) + " pi is outside (-pi, pi]");
            if (!in_principal_range(alpha2))
                fail(Constraint::cascaded_doppler_aliasing,
                     "cascaded-link Doppler aliases: 2 pi f_d2 I T = " + fmt(alpha2 / pi) + " pi is outside (-pi, pi]");
        }

        if (config.n_pilots < 2)
            fail(Constraint::pilot_minimum,
                 "pilot minimum: at least two pilots per subblock are required, got N = " + std::to_string(config.n_pilots));

        const auto &g = config.geom;
        const bool geom_ok = g.m_y >= 2 && g.m_z >= 2;
        if (!geom_ok)
            fail(Constraint::geometry, "array geometry must have m_y >= 2 and m_z >= 2, got " +
                                           std::to_string(g.m_y) + "x" + std::to_string(g.m_z));

        if (config.n_subblocks < config.elements() || config.n_subblocks < 1)
            fail(Constraint::refraction_rank, "refraction design needs I >= M, got I = " +
                                                  std::to_string(config.n_subblocks) + ", M = " +
                                                  std::to_string(config.elements()));

        if (g.m_y >= 1 && g.m_z >= 1)
        {
            // arguments of c = beta2 * a before any wrapping
            const double base = principal_angle(params.beta2);
            double worst = base;
            bool ok = true;
            for (int m = 0; m < g.elements(); ++m)
            {
                const double arg = base + g.y_index(m) * params.phi_y + g.z_index(m) * params.phi_z;
                if (!in_principal_range(arg))
                {
                    ok = false;
                    if (std::abs(arg) > std::abs(worst))
                        worst = arg;
                }
            }
            if (!ok)
                fail(Constraint::c_argument_range,
                     "cascaded gain argument range: entry argument " + fmt(worst / pi) +
                         " pi of beta2 * a lies outside (-pi, pi]");
        }

        if (config.trials < 1)
            fail(Constraint::trials, "trials must be >= 1, got " + std::to_string(config.trials));
        if (config.snr_grid.empty())
            fail(Constraint::snr_grid, "SNR grid is empty");

        return report;
    }
}
