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

#include <catch_amalgamated.hpp>

#include "itsce/crlb.hpp"
#include "itsce/estimators.hpp"

#include <random>

using namespace itsce;
using Catch::Approx;

TEST_CASE("closed-form Doppler and gain bounds", "[crlb]")
{
    CHECK(crlb_xi1(1.0, 1, 1) == 1.0);
    CHECK(crlb_xi1(0.01, 25, 40) == Approx(1e-5).epsilon(1e-14));
    CHECK(crlb_beta1(0.01, 25, 40) == crlb_xi1(0.01, 25, 40));
    CHECK(crlb_xi1(0.3, 50, 40) == Approx(crlb_xi1(0.3, 25, 40) / 2.0).epsilon(1e-15));

    CHECK(crlb_fd1(8.0 * pi * pi, 1, 1, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(crlb_fd1(0.01, 25, 40, 1e-5) == Approx(0.79157174720576384).epsilon(1e-12));
    CHECK(crlb_fd1(0.01, 25, 80, 1e-5) == Approx(crlb_fd1(0.01, 25, 40, 1e-5) / 8.0).epsilon(1e-14));

    CHECK(crlb_xi2(0.01, 25, 40, 1) == crlb_xi1(0.01, 25, 40));
    CHECK(crlb_fd2(0.01, 25, 40, 1, 1e-5) == crlb_fd1(0.01, 25, 40, 1e-5));
    CHECK(crlb_xi2(0.01, 25, 40, 30) == Approx(1e-5 / 30).epsilon(1e-14));
    CHECK(crlb_fd2(0.01, 25, 40, 30, 1e-5) == Approx(0.026385724906858795).epsilon(1e-12));

    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(1e-4, 10.0);
    std::uniform_int_distribution<int> n(1, 100);
    for (int draw = 0; draw < 200; ++draw)
    {
        const double s2 = u(gen), t = u(gen) * 1e-5;
        const int np = n(gen), ns = n(gen), m = n(gen);
        REQUIRE(crlb_fd2(s2, np, ns, m, t) * m == Approx(crlb_fd1(s2, np, ns, t)).epsilon(1e-14));
        REQUIRE(crlb_xi2(s2, np, ns, m) * m == Approx(crlb_xi1(s2, np, ns)).epsilon(1e-14));
    }

    CHECK_THROWS_AS(crlb_xi1(0.0, 25, 40), Error);
    CHECK_THROWS_AS(crlb_xi1(0.01, 0, 40), Error);
    CHECK_THROWS_AS(crlb_fd1(0.01, 25, 40, -1e-5), Error);
    CHECK_THROWS_AS(crlb_xi2(0.01, 25, 40, 0), Error);
    CHECK_THROWS_AS(crlb_fd2(-1.0, 25, 40, 30, 1e-5), Error);
}

TEST_CASE("fim_zbar", "[crlb]")
{
    const cplx beta2 = std::polar(1.0, pi / 5);
    SECTION("reference geometry reproduces the integer aggregates")
    {
        const Eigen::Matrix4d f = fim_zbar(0.01, 25, 40, {5, 6}, beta2) / 4e5;
        const double br = beta2.real(), bi = beta2.imag();
        Eigen::Matrix4d expect;
        expect << 30, 0, -bi * 60, -bi * 75,
            0, 30, br * 60, br * 75,
            -bi * 60, br * 60, 180, 150,
            -bi * 75, br * 75, 150, 275;
        CHECK((f - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
    SECTION("real beta2 removes the Im couplings")
    {
        const Eigen::Matrix4d f = fim_zbar(0.01, 25, 40, {5, 6}, 1.0);
        CHECK(f(0, 2) == 0.0);
        CHECK(f(0, 3) == 0.0);
        CHECK(f(2, 0) == 0.0);
        CHECK(f(3, 0) == 0.0);
    }
    SECTION("symmetric and positive definite over geometries and phases")
    {
        std::mt19937_64 gen(9);
        std::uniform_int_distribution<int> d(2, 12);
        std::uniform_real_distribution<double> a(-pi, pi);
        for (int draw = 0; draw < 200; ++draw)
        {
            const Eigen::Matrix4d f = fim_zbar(0.05, 10, 200, {d(gen), d(gen)}, std::polar(1.0, a(gen)));
            REQUIRE(f == f.transpose());
            REQUIRE(Eigen::LLT<Eigen::Matrix4d>(f).info() == Eigen::Success);
        }
    }
    SECTION("infeasible geometry")
    {
        CHECK_THROWS_AS(fim_zbar(0.01, 25, 40, {1, 6}, beta2), Error);
    }
}

TEST_CASE("crlb_report", "[crlb]")
{
    const SystemConfig cfg;
    const ChannelParams p;
    const CrlbReport r = crlb_report(0.01, cfg, p);
    CHECK(r.crlb_xi1 == Approx(1e-5).epsilon(1e-14));
    CHECK(r.crlb_beta1 == Approx(1e-5).epsilon(1e-14));
    CHECK(r.crlb_xi2 == Approx(1e-5 / 30).epsilon(1e-14));
    CHECK(r.crlb_fd2 == Approx(r.crlb_fd1 / 30).epsilon(1e-14));
    CHECK((r.crlb_zbar * r.fim_zbar - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
    // tests/oracles/frozen_values.py (mpmath 4x4 inverse)
    CHECK(r.crlb_beta2 == Approx(5.119047619047619e-7).epsilon(1e-10));
    CHECK(r.crlb_phi_y == Approx(4.1666666666666667e-8).epsilon(1e-10));
    CHECK(r.crlb_phi_z == Approx(2.8571428571428571e-8).epsilon(1e-10));
    CHECK(r.crlb_phi_z < r.crlb_phi_y);

    // phase block equals sigma^2 / (4 N I) (Omega^T Omega)^{-1}
    const RMat om = build_omega(cfg.geom);
    const Eigen::Matrix3d polar = (om.transpose() * om).inverse() * (0.01 / (4.0 * 25 * 40));
    CHECK(r.crlb_phi_y == Approx(polar(1, 1)).epsilon(1e-10));
    CHECK(r.crlb_phi_z == Approx(polar(2, 2)).epsilon(1e-10));

    SECTION("every field is linear in sigma^2")
    {
        const CrlbReport r3 = crlb_report(0.03, cfg, p);
        for (auto [a, b] : {std::pair{r.crlb_xi1, r3.crlb_xi1}, {r.crlb_xi2, r3.crlb_xi2}, {r.crlb_fd1, r3.crlb_fd1},
                            {r.crlb_fd2, r3.crlb_fd2}, {r.crlb_beta1, r3.crlb_beta1}, {r.crlb_beta2, r3.crlb_beta2},
                            {r.crlb_phi_y, r3.crlb_phi_y}, {r.crlb_phi_z, r3.crlb_phi_z}})
        {
            CHECK(a > 0.0);
            CHECK(b == Approx(3.0 * a).epsilon(1e-12));
        }
        CHECK((r3.crlb_zbar - 3.0 * r.crlb_zbar).cwiseAbs().maxCoeff() < 1e-12 * r3.crlb_zbar.cwiseAbs().maxCoeff());
        CHECK((3.0 * r3.fim_zbar - r.fim_zbar).cwiseAbs().maxCoeff() < 1e-12 * r.fim_zbar.cwiseAbs().maxCoeff());
    }
    SECTION("nonpositive noise is rejected")
    {
        CHECK_THROWS_AS(crlb_report(0.0, cfg, p), Error);
    }
}
