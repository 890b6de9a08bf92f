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

#ifndef ITSCE_SYSTEM_CONFIG_HPP
#define ITSCE_SYSTEM_CONFIG_HPP

#include <cstdint>
#include <vector>

namespace itsce
{
    // Uniform planar array on the yz-plane. Entry m of any length-M vector
    // maps to (m / m_z, m % m_z), the a_y (x) a_z Kronecker order.
    struct ArrayGeometry
    {
        int m_y = 5;
        int m_z = 6;

        int elements() const noexcept { return m_y * m_z; }
        int y_index(int m) const noexcept { return m / m_z; }
        int z_index(int m) const noexcept { return m % m_z; }
    };

    // Frame fragment covering the two pilot blocks k = 0, 1.
    struct SystemConfig
    {
        int n_pilots = 25;              // N, pilots per subblock
        int n_subblocks = 40;           // I, subblocks per block
        ArrayGeometry geom{};           // M = m_y * m_z
        double subblock_duration = 1e-5; // T [s]
        std::vector<double> snr_grid{0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0}; // [dB]
        long trials = 100000;
        std::uint64_t seed = 20240607u;

        int elements() const noexcept { return geom.elements(); }
        // I * T, the block duration
        double block_duration() const noexcept { return n_subblocks * subblock_duration; }
    };
}

#endif
