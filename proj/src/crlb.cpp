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

#include "itsce/crlb.hpp"
#include "itsce/estimators.hpp"

#include <cmath>

namespace itsce
{
    namespace
    {
        void require_positive(double v, const char *name)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw Error(ErrorKind::invalid_input, std::string(name) + " must be positive and finite");
        }
    }

    double crlb_xi1(double sigma2, int n_pilots, int n_subblocks)
    {
        require_positive(sigma2, "sigma2");
        require_positive(n_pilots, "N");
        require_positive(n_subblocks, "I");
        return sigma2 / (static_cast<double>(n_pilots) * n_subblocks);
    }

    double crlb_beta1(double sigma2, int n_pilots, int n_subblocks)
    {
        return crlb_xi1(sigma2, n_pilots, n_subblocks);
    }

    double crlb_fd1(double sigma2, int n_pilots, int n_subblocks, double duration)
    {
        require_positive(sigma2, "sigma2");
        require_positive(n_pilots, "N");
        require_positive(n_subblocks, "I");
        require_positive(duration, "T");
        const double i = n_subblocks;
        return sigma2 / (8.0 * pi * pi * n_pilots * i * i * i * duration * duration);
    }

    double crlb_xi2(double sigma2, int n_pilots, int n_subblocks, int elements)
    {
        require_positive(elements, "M");
        return crlb_xi1(sigma2, n_pilots, n_subblocks) / elements;
    }

    double crlb_fd2(double sigma2, int n_pilots, int n_subblocks, int elements, double duration)
    {
        require_positive(elements, "M");
        return crlb_fd1(sigma2, n_pilots, n_subblocks, duration) / elements;
    }

    Eigen::Matrix4d fim_zbar(double sigma2, int n_pilots, int n_subblocks, const ArrayGeometry &geom, cplx beta2)
    {
        require_positive(sigma2, "sigma2");
        require_positive(n_pilots, "N");
        require_positive(n_subblocks, "I");
        const RMat omega = build_omega(geom);
        const RVec wy = omega.col(1);
        const RVec wz = omega.col(2);

        const double m = geom.elements();
        const double l1y = wy.cwiseAbs().sum();
        const double l1z = wz.cwiseAbs().sum();
        const double br = beta2.real();
        const double bi = beta2.imag();

        Eigen::Matrix4d f;
        f << m, 0.0, -bi * l1y, -bi * l1z,
            0.0, m, br * l1y, br * l1z,
            -bi * l1y, br * l1y, wy.squaredNorm(), wy.dot(wz),
            -bi * l1z, br * l1z, wz.dot(wy), wz.squaredNorm();
        return (4.0 * n_pilots * n_subblocks / sigma2) * f;
    }

    CrlbReport crlb_report(double sigma2, const SystemConfig &config, const ChannelParams &params)
    {
        const int n = config.n_pilots;
        const int i = config.n_subblocks;
        const int m = config.elements();
        const double t = config.subblock_duration;

        CrlbReport r;
        r.crlb_xi1 = crlb_xi1(sigma2, n, i);
        r.crlb_xi2 = crlb_xi2(sigma2, n, i, m);
        r.crlb_fd1 = crlb_fd1(sigma2, n, i, t);
        r.crlb_fd2 = crlb_fd2(sigma2, n, i, m, t);
        r.crlb_beta1 = crlb_beta1(sigma2, n, i);
        r.fim_zbar = fim_zbar(sigma2, n, i, config.geom, params.beta2);

        const Eigen::LLT<Eigen::Matrix4d> llt(r.fim_zbar);
        if (llt.info() != Eigen::Success)
            throw Error(ErrorKind::numerical_singularity, "Fisher information matrix is not positive definite");
        r.crlb_zbar = llt.solve(Eigen::Matrix4d::Identity());
        r.crlb_zbar = 0.5 * (r.crlb_zbar + r.crlb_zbar.transpose()).eval();

        r.crlb_beta2 = r.crlb_zbar(0, 0) + r.crlb_zbar(1, 1);
        r.crlb_phi_y = r.crlb_zbar(2, 2);
        r.crlb_phi_z = r.crlb_zbar(3, 3);
        return r;
    }
}
