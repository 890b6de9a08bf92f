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

#include "itsce/estimators.hpp"

#include <cmath>

namespace itsce
{
    CVec ChannelEstimates::h_stacked() const
    {
        const Eigen::Index n_sub = h_hat.cols();
        CVec h(2 * n_sub);
        h.head(n_sub) = h_hat.row(0).transpose();
        h.tail(n_sub) = h_hat.row(1).transpose();
        return h;
    }

    CMat ls_estimate_subblock(const CMat &y_i, const PilotDesign &design)
    {
        if (y_i.rows() != design.psi.size() || y_i.cols() != 2)
            throw Error(ErrorKind::invalid_input, "Y_i must be N x 2 with N matching the training vector");
        const double n = static_cast<double>(y_i.rows());
        CMat v(2, 2);
        v.row(0) = y_i.colwise().sum() / n;
        v.row(1) = design.psi.adjoint() * y_i / n;
        return v;
    }

    ChannelEstimates estimate_channels(const ReceivedFrame &frame, const PilotDesign &design)
    {
        if (frame.n_pilots() != design.n_pilots() || frame.n_subblocks() != design.n_subblocks() ||
            frame.block[1].rows() != frame.block[0].rows() || frame.block[1].cols() != frame.block[0].cols())
            throw Error(ErrorKind::invalid_input, "frame dimensions do not match the pilot design");

        // Same computation as ls_estimate_subblock, vectorised over subblocks.
        const double n = static_cast<double>(frame.n_pilots());
        ChannelEstimates est;
        est.g_hat.resize(2, frame.n_subblocks());
        est.h_hat.resize(2, frame.n_subblocks());
        for (int k = 0; k < 2; ++k)
        {
            est.g_hat.row(k) = frame.block[k].colwise().sum() / n;
            est.h_hat.row(k) = design.psi.adjoint() * frame.block[k] / n;
        }
        return est;
    }

    namespace
    {
        void check_pair(const CVec &v0, const CVec &v1)
        {
            if (v0.size() != v1.size() || v0.size() == 0)
                throw Error(ErrorKind::invalid_input, "xi estimator needs two nonempty vectors of equal length");
        }
    }

    cplx estimate_xi_normalized(const CVec &v0, const CVec &v1)
    {
        check_pair(v0, v1);
        const cplx ip = v0.dot(v1); // Eigen's dot conjugates the left operand
        const double mag = std::abs(ip);
        if (!(mag > 0.0))
            throw Error(ErrorKind::degenerate, "v0^H v1 = 0");
        return ip / mag;
    }

    cplx estimate_xi_nonnormalized(const CVec &v0, const CVec &v1)
    {
        check_pair(v0, v1);
        const double energy = v0.squaredNorm();
        if (!(energy > 0.0))
            throw Error(ErrorKind::degenerate, "v0^H v0 = 0");
        return v0.dot(v1) / energy;
    }

    double doppler_from_xi(cplx xi_hat, const SystemConfig &config)
    {
        const double block = config.block_duration();
        if (!(block > 0.0))
            throw Error(ErrorKind::invalid_input, "I T must be positive");
        return principal_angle(xi_hat) / (2.0 * pi * block);
    }

    CVec doppler_phase_vector(double f_d, const SystemConfig &config)
    {
        CVec d(config.n_subblocks);
        for (int i = 0; i < config.n_subblocks; ++i)
            d(i) = unit_phasor(2.0 * pi * f_d * i * config.subblock_duration);
        return d;
    }

    cplx estimate_beta1(const CVec &g0_hat, double f_d1_hat, const SystemConfig &config)
    {
        if (g0_hat.size() != config.n_subblocks)
            throw Error(ErrorKind::invalid_input, "g0_hat length must equal I");
        const CVec d1 = doppler_phase_vector(f_d1_hat, config);
        return d1.dot(g0_hat) / static_cast<double>(config.n_subblocks);
    }

    RMat build_omega(const ArrayGeometry &geom)
    {
        if (geom.m_y < 2 || geom.m_z < 2)
            throw Error(ErrorKind::infeasible_geometry,
                        "phase-difference recovery needs m_y >= 2 and m_z >= 2, got " +
                            std::to_string(geom.m_y) + "x" + std::to_string(geom.m_z));
        RMat omega(geom.elements(), 3);
        for (int m = 0; m < geom.elements(); ++m)
        {
            omega(m, 0) = 1.0;
            omega(m, 1) = geom.y_index(m);
            omega(m, 2) = geom.z_index(m);
        }
        return omega;
    }

    CVec gamma_diagonal(double f_d2_hat, const SystemConfig &config)
    {
        const int n_sub = config.n_subblocks;
        const CVec d2 = doppler_phase_vector(f_d2_hat, config);
        const cplx xi2 = unit_phasor(2.0 * pi * f_d2_hat * config.block_duration());
        CVec gamma(2 * n_sub);
        gamma.head(n_sub) = d2;
        gamma.tail(n_sub) = xi2 * d2;
        return gamma;
    }

    CVec estimate_c(const CVec &h_stacked, double f_d2_hat, const PilotDesign &design, const SystemConfig &config)
    {
        const int n_sub = config.n_subblocks;
        if (h_stacked.size() != 2 * n_sub || design.n_subblocks() != n_sub || design.elements() != config.elements())
            throw Error(ErrorKind::invalid_input, "h_hat must have length 2I and the design must be I x M");

        // Phi_tilde stacks Phi_bar twice, so Phi_tilde^H Gamma^H h
        // = Phi_bar^H (conj(D2) h_0 + conj(xi2 D2) h_1).
        const CVec gamma = gamma_diagonal(f_d2_hat, config);
        const CVec derotated = gamma.head(n_sub).conjugate().cwiseProduct(h_stacked.head(n_sub)) +
                               gamma.tail(n_sub).conjugate().cwiseProduct(h_stacked.tail(n_sub));
        return design.phi_bar.adjoint() * derotated / (2.0 * n_sub);
    }

    CascadedEstimate estimate_beta2_and_z(const CVec &c_hat, const RMat &omega)
    {
        if (omega.cols() != 3 || omega.rows() != c_hat.size())
            throw Error(ErrorKind::invalid_input, "Omega must be M x 3 with M = |c_hat|");

        const Eigen::Matrix3d gram = omega.transpose() * omega;
        const Eigen::LDLT<Eigen::Matrix3d> ldlt(gram);
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
            ldlt.vectorD().minCoeff() <= 1e-12 * ldlt.vectorD().maxCoeff())
            throw Error(ErrorKind::infeasible_geometry, "Omega^T Omega is singular");

        RVec args(c_hat.size());
        double l1 = 0.0;
        for (Eigen::Index m = 0; m < c_hat.size(); ++m)
        {
            args(m) = principal_angle(c_hat(m));
            l1 += std::abs(c_hat(m));
        }

        CascadedEstimate out;
        out.beta2_mag = l1 / static_cast<double>(c_hat.size());
        out.z = ldlt.solve(omega.transpose() * args);
        return out;
    }

    EstimationResult run_pipeline(const ReceivedFrame &frame, const PilotDesign &design, const SystemConfig &config)
    {
        const ChannelEstimates est = estimate_channels(frame, design);
        const CVec g0 = est.g(0);

        EstimationResult r;
        r.xi1_hat = estimate_xi_normalized(g0, est.g(1));
        r.xi2_hat = estimate_xi_normalized(est.h(0), est.h(1));
        r.f_d1_hat = doppler_from_xi(r.xi1_hat, config);
        r.f_d2_hat = doppler_from_xi(r.xi2_hat, config);
        r.beta1_hat = estimate_beta1(g0, r.f_d1_hat, config);
        r.c_hat = estimate_c(est.h_stacked(), r.f_d2_hat, design, config);
        const CascadedEstimate cascaded = estimate_beta2_and_z(r.c_hat, build_omega(config.geom));
        r.beta2_mag_hat = cascaded.beta2_mag;
        r.z_hat = cascaded.z;
        return r;
    }
}
