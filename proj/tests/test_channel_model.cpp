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

#include "itsce/channel_model.hpp"
#include "itsce/estimators.hpp"
#include "itsce/pilot_design.hpp"

#include <random>

using namespace itsce;
using Catch::Approx;

namespace
{
    SystemConfig reference_config() { return SystemConfig{}; }

    // Kronecker product and elementwise product written out independently.
    CVec kron(const CVec &a, const CVec &b)
    {
        CVec out(a.size() * b.size());
        for (Eigen::Index i = 0; i < a.size(); ++i)
            for (Eigen::Index j = 0; j < b.size(); ++j)
                out(i * b.size() + j) = a(i) * b(j);
        return out;
    }

    CVec steer_oracle(double phase, int n)
    {
        CVec v(n);
        for (int m = 0; m < n; ++m)
            v(m) = {std::cos(m * phase), std::sin(m * phase)};
        return v;
    }
}

TEST_CASE("steering_vector_1d", "[channel-model]")
{
    SECTION("zero phase gives all ones")
    {
        const CVec v = steering_vector_1d(0.0, 3);
        REQUIRE(v.size() == 3);
        for (int m = 0; m < 3; ++m)
            CHECK(v(m) == cplx(1.0, 0.0));
    }
    SECTION("half turn alternates")
    {
        const CVec v = steering_vector_1d(pi, 2);
        CHECK(v(0) == cplx(1.0, 0.0));
        CHECK(std::abs(v(1) - cplx(-1.0, 0.0)) < 1e-15);
    }
    SECTION("0.08 pi, length 5 against frozen mpmath values")
    {
        // tests/oracles/frozen_values.py
        const double re[] = {1.0, 0.96858316112863112, 0.87630668004386359, 0.72896862742141152, 0.53582679497899662};
        const double im[] = {0.0, 0.24868988716485479, 0.48175367410171527, 0.68454710592868867, 0.84432792550201508};
        const CVec v = steering_vector_1d(0.08 * pi, 5);
        CHECK(v(0) == cplx(1.0, 0.0));
        for (int m = 0; m < 5; ++m)
        {
            CHECK(v(m).real() == Approx(re[m]).margin(1e-15));
            CHECK(v(m).imag() == Approx(im[m]).margin(1e-15));
        }
    }
    SECTION("length zero is rejected")
    {
        CHECK_THROWS_AS(steering_vector_1d(0.3, 0), Error);
        try
        {
            steering_vector_1d(0.3, 0);
        }
        catch (const Error &e)
        {
            CHECK(e.kind() == ErrorKind::invalid_dimension);
        }
    }
}

TEST_CASE("equivalent_array_response", "[channel-model]")
{
    ChannelParams p;
    SECTION("zero phases give all ones")
    {
        p.phi_y = p.phi_z = 0.0;
        const CVec a = equivalent_array_response(p, ArrayGeometry{5, 6});
        REQUIRE(a.size() == 30);
        CHECK((a - CVec::Ones(30)).norm() == 0.0);
    }
    SECTION("2x2 with phi_y = pi")
    {
        p.phi_y = pi;
        p.phi_z = 0.0;
        const CVec a = equivalent_array_response(p, ArrayGeometry{2, 2});
        const CVec expect = (CVec(4) << 1.0, 1.0, -1.0, -1.0).finished();
        CHECK((a - expect).norm() < 1e-15);
    }
    SECTION("reference geometry matches index formula and Hadamard split")
    {
        const ArrayGeometry geom{5, 6};
        const CVec a = equivalent_array_response(p, geom);
        for (int m = 0; m < 30; ++m)
        {
            const double arg = (m / 6) * p.phi_y + (m % 6) * p.phi_z;
            CHECK(std::abs(a(m) - std::polar(1.0, arg)) < 1e-14);
        }
        const double ry = 0.3, rz = -0.7; // arbitrary receive-side split
        const CVec ar = kron(steer_oracle(ry, 5), steer_oracle(rz, 6));
        const CVec at = kron(steer_oracle(p.phi_y - ry, 5), steer_oracle(p.phi_z - rz, 6));
        CHECK((ar.cwiseProduct(at) - a).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Kronecker-Hadamard identity and unit modulus over random draws", "[channel-model][property]")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ang(-pi, pi);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int draw = 0; draw < 200; ++draw)
    {
        const ArrayGeometry geom{dim(gen), dim(gen)};
        ChannelParams p;
        p.phi_y = ang(gen);
        p.phi_z = ang(gen);
        const double ry = ang(gen), rz = ang(gen);
        const CVec a = equivalent_array_response(p, geom);
        const CVec split = kron(steer_oracle(ry, geom.m_y), steer_oracle(rz, geom.m_z))
                               .cwiseProduct(kron(steer_oracle(p.phi_y - ry, geom.m_y), steer_oracle(p.phi_z - rz, geom.m_z)));
        REQUIRE((split - a).cwiseAbs().maxCoeff() <= 1e-12);
        REQUIRE((a.cwiseAbs().array() - 1.0).abs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("array response equals exp(j Omega z_geom)", "[channel-model][property]")
{
    ChannelParams p;
    const ArrayGeometry geom{5, 6};
    const RVec args = build_omega(geom) * Eigen::Vector3d(0.0, p.phi_y, p.phi_z);
    const CVec a = equivalent_array_response(p, geom);
    for (int m = 0; m < 30; ++m)
        CHECK(std::abs(a(m) - std::polar(1.0, args(m))) < 1e-13);
}

TEST_CASE("direct_channel", "[channel-model]")
{
    const SystemConfig cfg = reference_config();
    ChannelParams p;
    SECTION("no Doppler, unit gain")
    {
        ChannelParams q = p;
        q.f_d1 = 0.0;
        q.beta1 = 1.0;
        CHECK(direct_channel(q, 1, 17, cfg) == cplx(1.0, 0.0));
    }
    SECTION("index zero returns beta1")
    {
        CHECK(std::abs(direct_channel(p, 0, 0, cfg) - std::polar(1.0, pi / 4)) < 1e-15);
    }
    SECTION("k = 1, i = 0 against frozen value")
    {
        const cplx g = direct_channel(p, 1, 0, cfg);
        CHECK(g.real() == Approx(-0.99579534008746827).margin(1e-12));
        CHECK(g.imag() == Approx(0.091605898609660595).margin(1e-12));
    }
    SECTION("block ratio is xi1 for every subblock")
    {
        const cplx xi1 = std::polar(1.0, 2.0 * pi * p.f_d1 * cfg.block_duration());
        for (int i = 0; i < cfg.n_subblocks; ++i)
            CHECK(std::abs(direct_channel(p, 1, i, cfg) / direct_channel(p, 0, i, cfg) - xi1) < 1e-12);
    }
    SECTION("index errors")
    {
        CHECK_THROWS_AS(direct_channel(p, 2, 0, cfg), Error);
        CHECK_THROWS_AS(direct_channel(p, -1, 0, cfg), Error);
        CHECK_THROWS_AS(direct_channel(p, 0, 40, cfg), Error);
        CHECK_THROWS_AS(direct_channel(p, 0, -1, cfg), Error);
    }
}

TEST_CASE("initial_cascaded_channel", "[channel-model]")
{
    const SystemConfig cfg = reference_config();
    const ArrayGeometry geom = cfg.geom;
    ChannelParams p;
    SECTION("matched refraction gives M")
    {
        ChannelParams q = p;
        q.f_d2 = 0.0;
        q.beta2 = 1.0;
        const CVec phi = equivalent_array_response(q, geom).conjugate();
        const cplx h = initial_cascaded_channel(q, geom, phi, 0, 3, cfg);
        CHECK(h.real() == Approx(30.0).epsilon(1e-14));
        CHECK(std::abs(h.imag()) < 1e-12);
    }
    SECTION("all-ones refraction with zero phases gives beta2 M")
    {
        ChannelParams q = p;
        q.f_d2 = 0.0;
        q.phi_y = q.phi_z = 0.0;
        const cplx h = initial_cascaded_channel(q, geom, CVec::Ones(30), 1, 5, cfg);
        CHECK(std::abs(h - 30.0 * q.beta2) < 1e-12);
    }
    SECTION("per-element brute-force summation")
    {
        const CMat phi_bar = design_refraction_matrix(cfg);
        for (int k = 0; k < 2; ++k)
            for (int i : {0, 1, 17, 39})
            {
                // b_m u_m phi_m summed over elements, with receive/transmit split
                cplx sum = 0.0;
                const double ry = 0.11, rz = -0.05;
                for (int my = 0; my < 5; ++my)
                    for (int mz = 0; mz < 6; ++mz)
                    {
                        const int m = my * 6 + mz;
                        const cplx b = std::polar(1.0, my * ry + mz * rz);
                        const cplx u = std::polar(1.0, my * (p.phi_y - ry) + mz * (p.phi_z - rz));
                        sum += b * u * phi_bar(i, m);
                    }
                const double t = (k * cfg.n_subblocks + i) * cfg.subblock_duration;
                const cplx expect = std::polar(1.0, 2.0 * pi * p.f_d2 * t) * p.beta2 * sum;
                const CVec row = phi_bar.row(i).transpose();
                CHECK(std::abs(initial_cascaded_channel(p, geom, row, k, i, cfg) - expect) < 1e-12);
            }
    }
    SECTION("block ratio is xi2 for any fixed refraction")
    {
        const CMat phi_bar = design_refraction_matrix(cfg);
        const cplx xi2 = std::polar(1.0, 2.0 * pi * p.f_d2 * cfg.block_duration());
        for (int i = 0; i < cfg.n_subblocks; ++i)
        {
            const CVec row = phi_bar.row(i).transpose();
            const cplx h0 = initial_cascaded_channel(p, geom, row, 0, i, cfg);
            const cplx h1 = initial_cascaded_channel(p, geom, row, 1, i, cfg);
            CHECK(std::abs(h1 - xi2 * h0) < 1e-11);
        }
    }
    SECTION("non-unit-modulus refraction is rejected")
    {
        CVec phi = CVec::Ones(30);
        phi(4) = 0.5;
        try
        {
            initial_cascaded_channel(p, geom, phi, 0, 0, cfg);
            FAIL("expected an error");
        }
        catch (const Error &e)
        {
            CHECK(e.kind() == ErrorKind::invalid_design);
        }
    }
}

TEST_CASE("geometry helpers", "[channel-model]")
{
    CHECK(doppler_from_geometry(100.0, 0.1, pi / 2, pi / 2) == Approx(1000.0));
    CHECK(doppler_from_geometry(100.0, 0.1, 0.0, 0.4) == 0.0);
    CHECK(doppler_from_geometry(100.0, 0.1, pi / 2, 1.1220691337931445) == Approx(901.0).epsilon(1e-14));
    CHECK_THROWS_AS(doppler_from_geometry(100.0, 0.0, 0.1, 0.1), Error);
    CHECK_THROWS_AS(doppler_from_geometry(100.0, -0.1, 0.1, 0.1), Error);

    auto [zy, zz] = phase_diffs_from_geometry(0.1, 0.4, pi / 2);
    CHECK(std::abs(zz) < 1e-15);
    auto [py, pz] = phase_diffs_from_geometry(0.1, pi / 2, pi / 2);
    CHECK(py == Approx(pi));
    CHECK(std::abs(pz) < 1e-15);
    auto [qy, qz] = phase_diffs_from_geometry(0.1, 0.05, 0.3, 1.0);
    CHECK(qy == Approx(0.78122512093880936).epsilon(1e-14));
    CHECK(qz == Approx(1.6974097548329732).epsilon(1e-14));
    CHECK_THROWS_AS(phase_diffs_from_geometry(0.1, 0.0, 0.3, 1.0), Error);
    CHECK_THROWS_AS(phase_diffs_from_geometry(-0.1, 0.3, 1.0), Error);
    (void)zy;
}
