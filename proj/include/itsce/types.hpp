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

#ifndef ITSCE_TYPES_HPP
#define ITSCE_TYPES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace itsce
{
    using cplx = std::complex<double>;
    using CVec = Eigen::VectorXcd;
    using CMat = Eigen::MatrixXcd;
    using RVec = Eigen::VectorXd;
    using RMat = Eigen::MatrixXd;

    inline constexpr double pi = std::numbers::pi;

    enum class ErrorKind
    {
        invalid_dimension,
        index_out_of_range,
        invalid_design,
        invalid_physics,
        infeasible_design,
        invalid_input,
        degenerate,
        infeasible_geometry,
        numerical_singularity,
        config,
        file
    };

    const char *to_string(ErrorKind kind) noexcept;

    // Every failure raised by the library carries a kind so callers (the
    // Monte Carlo harness in particular) can tell recoverable trial aborts
    // from configuration faults.
    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &what)
            : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };

    // Principal argument in (-pi, pi]; the lower boundary maps to +pi.
    inline double principal_angle(cplx z)
    {
        double a = std::arg(z);
        return a <= -pi ? pi : a;
    }

    // Wrap a real angle into (-pi, pi].
    inline double wrap_angle(double a)
    {
        double r = std::remainder(a, 2.0 * pi);
        return r <= -pi ? r + 2.0 * pi : r;
    }

    inline cplx unit_phasor(double theta) { return std::polar(1.0, theta); }
}

#endif
