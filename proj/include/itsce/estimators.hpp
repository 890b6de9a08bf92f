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

#ifndef ITSCE_ESTIMATORS_HPP
#define ITSCE_ESTIMATORS_HPP

#include "itsce/link_sim.hpp"
#include "itsce/pilot_design.hpp"
#include "itsce/types.hpp"

namespace itsce
{
    // Per-subblock LS estimates; row k holds block k, column i subblock i.
    struct ChannelEstimates
    {
        CMat g_hat; // 2 x I
        CMat h_hat; // 2 x I

        CVec g(int k) const { return g_hat.row(k).transpose(); }
        CVec h(int k) const { return h_hat.row(k).transpose(); }
        // [h_0; h_1], length 2I
        CVec h_stacked() const;
    };

    struct EstimationResult
    {
        cplx xi1_hat;
        cplx xi2_hat;
        double f_d1_hat = 0.0;
        double f_d2_hat = 0.0;
        cplx beta1_hat;
        CVec c_hat;
        double beta2_mag_hat = 0.0;
        Eigen::Vector3d z_hat = Eigen::Vector3d::Zero(); // [arg beta2, phi_y, phi_z]

        cplx beta2_hat() const { return std::polar(beta2_mag_hat, z_hat(0)); }
        double phi_y_hat() const { return z_hat(1); }
        double phi_z_hat() const { return z_hat(2); }
    };

    // V_hat = Psi^H Y_i / N. Row 0 is [g_{0,i}, g_{1,i}], row 1 is [h_{0,i}, h_{1,i}].
    CMat ls_estimate_subblock(const CMat &y_i, const PilotDesign &design);

    // LS estimates for every subblock of a frame.
    ChannelEstimates estimate_channels(const ReceivedFrame &frame, const PilotDesign &design);

    // (v0^H v1) / |v0^H v1|
    cplx estimate_xi_normalized(const CVec &v0, const CVec &v1);

    // (v0^H v1) / (v0^H v0)
    cplx estimate_xi_nonnormalized(const CVec &v0, const CVec &v1);

    // principal_angle(xi) / (2 pi I T)
    double doppler_from_xi(cplx xi_hat, const SystemConfig &config);

    // d[i] = exp(j 2 pi f_d i T), i = 0..I-1
    CVec doppler_phase_vector(double f_d, const SystemConfig &config);

    // d1_hat^H g0_hat / I
    cplx estimate_beta1(const CVec &g0_hat, double f_d1_hat, const SystemConfig &config);

    // Omega = [1_M, varpi_y, varpi_z], M x 3
    RMat build_omega(const ArrayGeometry &geom);

    // Gamma_hat = blkdiag(D2_hat, xi2_hat D2_hat) as its 2I diagonal entries.
    CVec gamma_diagonal(double f_d2_hat, const SystemConfig &config);

    // c_hat = Phi_tilde^H Gamma_hat^H h_hat / (2I)
    CVec estimate_c(const CVec &h_stacked, double f_d2_hat, const PilotDesign &design, const SystemConfig &config);

    struct CascadedEstimate
    {
        double beta2_mag = 0.0;
        Eigen::Vector3d z = Eigen::Vector3d::Zero();
    };

    // |beta2_hat| = ||c_hat||_1 / M, z_hat = (Omega^T Omega)^{-1} Omega^T arg(c_hat)
    CascadedEstimate estimate_beta2_and_z(const CVec &c_hat, const RMat &omega);

    EstimationResult run_pipeline(const ReceivedFrame &frame, const PilotDesign &design, const SystemConfig &config);
}

#endif
