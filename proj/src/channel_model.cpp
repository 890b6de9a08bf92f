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

#include "itsce/channel_model.hpp"

#include <cmath>

namespace itsce
{
    const char *to_string(ErrorKind kind) noexcept
    {
        switch (kind)
        {
        case ErrorKind::invalid_dimension: return "invalid dimension";
        case ErrorKind::index_out_of_range: return "index out of range";
        case ErrorKind::invalid_design: return "invalid design";
        case ErrorKind::invalid_physics: return "invalid physics";
        case ErrorKind::infeasible_design: return "infeasible design";
        case ErrorKind::invalid_input: return "invalid input";
        case ErrorKind::degenerate: return "degenerate inner product";
        case ErrorKind::infeasible_geometry: return "infeasible geometry";
        case ErrorKind::numerical_singularity: return "numerical singularity";
        case ErrorKind::config: return "config";
        case ErrorKind::file: return "file";
        }
        return "unknown";
    }

    namespace
    {
        constexpr double unit_modulus_tol = 1e-9;

        void check_block_indices(int k, int i, const SystemConfig &config)
        {
            if (k != 0 && k != 1)
                throw Error(ErrorKind::index_out_of_range, "block index k = " + std::to_string(k) + " not in {0, 1}");
            if (i < 0 || i >= config.n_subblocks)
                throw Error(ErrorKind::index_out_of_range,
                            "subblock index i = " + std::to_string(i) + " not in [0, " +
                                std::to_string(config.n_subblocks) + ")");
        }

        double subblock_time(int k, int i, const SystemConfig &config)
        {
            return static_cast<double>(k * config.n_subblocks + i) * config.subblock_duration;
        }
    }

    void check_geometry(const ArrayGeometry &geom)
    {
        if (geom.m_y < 1 || geom.m_z < 1)
            throw Error(ErrorKind::invalid_dimension,
                        "array geometry " + std::to_string(geom.m_y) + "x" + std::to_string(geom.m_z));
    }

    CVec steering_vector_1d(double phase_diff, int length)
    {
        if (length < 1)
            throw Error(ErrorKind::invalid_dimension, "steering vector length must be >= 1");
        CVec v(length);
        v(0) = 1.0;
        for (int m = 1; m < length; ++m)
            v(m) = unit_phasor(m * phase_diff);
        return v;
    }

    CVec equivalent_array_response(const ChannelParams &params, const ArrayGeometry &geom)
    {
        check_geometry(geom);
        const CVec ay = steering_vector_1d(params.phi_y, geom.m_y);
        const CVec az = steering_vector_1d(params.phi_z, geom.m_z);
        CVec a(geom.elements());
        for (int my = 0; my < geom.m_y; ++my)
            for (int mz = 0; mz < geom.m_z; ++mz)
                a(my * geom.m_z + mz) = ay(my) * az(mz);
        return a;
    }

    cplx direct_channel(const ChannelParams &params, int k, int i, const SystemConfig &config)
    {
        check_block_indices(k, i, config);
        return unit_phasor(2.0 * pi * params.f_d1 * subblock_time(k, i, config)) * params.beta1;
    }

    cplx initial_cascaded_channel(const ChannelParams &params, const ArrayGeometry &geom,
                                  const CVec &phi_bar_i, int k, int i, const SystemConfig &config)
    {
        check_block_indices(k, i, config);
        if (phi_bar_i.size() != geom.elements())
            throw Error(ErrorKind::invalid_dimension, "refraction vector length does not match M");
        for (Eigen::Index m = 0; m < phi_bar_i.size(); ++m)
            if (std::abs(std::abs(phi_bar_i(m)) - 1.0) > unit_modulus_tol)
                throw Error(ErrorKind::invalid_design,
                            "refraction entry " + std::to_string(m) + " is not unit modulus");

        const CVec a = equivalent_array_response(params, geom);
        const cplx response = a.transpose() * phi_bar_i;
        return unit_phasor(2.0 * pi * params.f_d2 * subblock_time(k, i, config)) * params.beta2 * response;
    }

    double doppler_from_geometry(double speed, double wavelength, double azimuth, double elevation)
    {
        if (!(wavelength > 0.0))
            throw Error(ErrorKind::invalid_physics, "wavelength must be positive");
        return speed / wavelength * std::sin(azimuth) * std::sin(elevation);
    }

    std::pair<double, double> phase_diffs_from_geometry(double wavelength, double spacing,
                                                        double azimuth, double elevation)
    {
        if (!(wavelength > 0.0))
            throw Error(ErrorKind::invalid_physics, "wavelength must be positive");
        if (!(spacing > 0.0))
            throw Error(ErrorKind::invalid_physics, "inter-element spacing must be positive");
        const double scale = 2.0 * pi / wavelength * spacing;
        return {scale * std::sin(azimuth) * std::sin(elevation), scale * std::cos(elevation)};
    }

    std::pair<double, double> phase_diffs_from_geometry(double wavelength, double azimuth, double elevation)
    {
        return phase_diffs_from_geometry(wavelength, 0.5 * wavelength, azimuth, elevation);
    }
}
