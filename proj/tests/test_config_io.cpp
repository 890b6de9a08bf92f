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

#include "itsce/config_io.hpp"
#include "itsce/pilot_design.hpp"
#include "itsce/types.hpp"

#include <filesystem>
#include <sstream>

using namespace itsce;
using Catch::Approx;

namespace
{
    Scenario parse(const std::string &text)
    {
        std::istringstream in(text);
        return parse_scenario(in, "test.cfg");
    }

    ErrorKind kind_of(const std::string &text)
    {
        try
        {
            parse(text);
        }
        catch (const Error &e)
        {
            return e.kind();
        }
        FAIL("expected a parse error for: " << text);
        return ErrorKind::invalid_input;
    }
}

TEST_CASE("reference config file matches the built-in scenario", "[config]")
{
    const Scenario file = load_scenario(std::string(ITSCE_SOURCE_DIR) + "/configs/reference.cfg");
    const Scenario ref = reference_scenario();
    CHECK(file.config.n_pilots == 25);
    CHECK(file.config.n_subblocks == 40);
    CHECK(file.config.geom.m_y == 5);
    CHECK(file.config.geom.m_z == 6);
    CHECK(file.config.subblock_duration == 1e-5);
    CHECK(file.config.snr_grid == ref.config.snr_grid);
    CHECK(file.config.trials == 100000);
    CHECK(file.config.seed == ref.config.seed);
    CHECK(file.params.f_d1 == 901.0);
    CHECK(file.params.f_d2 == 900.0);
    CHECK(std::abs(file.params.beta1 - ref.params.beta1) < 1e-15);
    CHECK(std::abs(file.params.beta2 - ref.params.beta2) < 1e-15);
    CHECK(file.params.phi_y == Approx(0.08 * pi).epsilon(1e-15));
    CHECK(file.params.phi_z == Approx(0.06 * pi).epsilon(1e-15));
    CHECK(validate_config(file.config, file.params).ok());
}

TEST_CASE("value syntax", "[config]")
{
    const Scenario s = parse("# comment only\n\n"
                             "phi_y = pi\n"
                             "phi_z = -0.5 * pi   # trailing comment\n"
                             "beta2 = 2@-pi\n"
                             "snr_grid = inf, -5, 12.5\n"
                             "seed = 18446744073709551615\n"
                             "f_d1 = 1.5e2\n");
    CHECK(s.params.phi_y == pi);
    CHECK(s.params.phi_z == -0.5 * pi);
    CHECK(std::abs(s.params.beta2 - cplx(-2.0, 0.0)) < 1e-15);
    REQUIRE(s.config.snr_grid.size() == 3);
    CHECK(std::isinf(s.config.snr_grid[0]));
    CHECK(s.config.snr_grid[2] == 12.5);
    CHECK(s.config.seed == 18446744073709551615ull);
    CHECK(s.params.f_d1 == 150.0);
    // untouched keys keep the built-in values
    CHECK(s.config.n_pilots == 25);
}

TEST_CASE("malformed configs are rejected with line context", "[config]")
{
    CHECK(kind_of("unknown_key = 3\n") == ErrorKind::config);
    CHECK(kind_of("n_pilots 25\n") == ErrorKind::config);
    CHECK(kind_of("n_pilots = 2.5\n") == ErrorKind::config);
    CHECK(kind_of("n_pilots =\n") == ErrorKind::config);
    CHECK(kind_of("beta1 = 0.7\n") == ErrorKind::config);
    CHECK(kind_of("f_d1 = fast\n") == ErrorKind::config);
    CHECK(kind_of("seed = -1\n") == ErrorKind::config);
    CHECK(kind_of("snr_grid = 0, , 5\n") == ErrorKind::config);
    try
    {
        parse("n_pilots = 25\nm_y = x\n");
    }
    catch (const Error &e)
    {
        CHECK(std::string(e.what()).find("test.cfg:2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_scenario("/nonexistent/dir/none.cfg"), Error);
}

TEST_CASE("format_scenario round trip", "[config][property]")
{
    Scenario s = reference_scenario();
    s.config.n_pilots = 7;
    s.config.snr_grid = {-3.25, 0.1, 17.0};
    s.config.seed = 987654321987654321ull;
    s.params.f_d1 = -123.456789012345;
    s.params.phi_y = 0.1234567890123456789;
    const Scenario back = parse(format_scenario(s));
    CHECK(back.config.n_pilots == 7);
    CHECK(back.config.snr_grid == s.config.snr_grid);
    CHECK(back.config.seed == s.config.seed);
    CHECK(back.params.f_d1 == s.params.f_d1);
    CHECK(back.params.phi_y == s.params.phi_y);
    CHECK(std::abs(back.params.beta1 - s.params.beta1) < 1e-15);
    CHECK(format_scenario(back) == format_scenario(parse(format_scenario(back))));
}
