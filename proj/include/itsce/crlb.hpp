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

#ifndef ITSCE_CRLB_HPP
#define ITSCE_CRLB_HPP

#include "itsce/channel_model.hpp"
#include "itsce/system_config.hpp"
#include "itsce/types.hpp"

namespace itsce
{
    // Closed-form Cramer-Rao bounds. Units: Doppler in Hz^2, phases in rad^2.
    struct CrlbReport
    {
        double crlb_xi1 = 0.0;
        double crlb_xi2 = 0.0;
        double crlb_fd1 = 0.0;
        double crlb_fd2 = 0.0;
        double crlb_beta1 = 0.0;
        Eigen::Matrix4d fim_zbar = Eigen::Matrix4d::Zero();  // over [Re beta2, Im beta2, phi_y, phi_z]
        Eigen::Matrix4d crlb_zbar = Eigen::Matrix4d::Zero(); // fim_zbar^{-1}
        double crlb_beta2 = 0.0;
        double crlb_phi_y = 0.0;
        double crlb_phi_z = 0.0;
    };

    // sigma^2 / (N I); also the bound for beta1
    double crlb_xi1(double sigma2, int n_pilots, int n_subblocks);
    double crlb_beta1(double sigma2, int n_pilots, int n_subblocks);
    // sigma^2 / (8 pi^2 N I^3 T^2)
    double crlb_fd1(double sigma2, int n_pilots, int n_subblocks, double duration);
    // sigma^2 / (N I M)
    double crlb_xi2(double sigma2, int n_pilots, int n_subblocks, int elements);
    // sigma^2 / (8 pi^2 N I^3 M T^2)
    double crlb_fd2(double sigma2, int n_pilots, int n_subblocks, int elements, double duration);

    // Fisher information of [Re beta2, Im beta2, phi_y, phi_z] from the
    // stacked cascaded estimates. The closed form assumes |beta2| = 1.
    Eigen::Matrix4d fim_zbar(double sigma2, int n_pilots, int n_subblocks, const ArrayGeometry &geom, cplx beta2);

    CrlbReport crlb_report(double sigma2, const SystemConfig &config, const ChannelParams &params);
}

#endif
