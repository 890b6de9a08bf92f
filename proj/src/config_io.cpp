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

#include "itsce/config_io.hpp"
#include "itsce/types.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace itsce
{
    Scenario reference_scenario()
    {
        return Scenario{};
    }

    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        struct Context
        {
            const std::string &source;
            int line;

            [[noreturn]] void fail(const std::string &msg) const
            {
                throw Error(ErrorKind::config, source + ":" + std::to_string(line) + ": " + msg);
            }
        };

        double parse_real(const std::string &raw, const Context &ctx)
        {
            std::string text = trim(raw);
            double factor = 1.0;
            if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0)
            {
                factor = pi;
                text = trim(text.substr(0, text.size() - 2));
                if (text.empty() || text == "+")
                    return factor;
                if (text == "-")
                    return -factor;
                if (text.back() == '*')
                    text = trim(text.substr(0, text.size() - 1));
            }
            if (text.empty())
                ctx.fail("expected a number");
            errno = 0;
            char *end = nullptr;
            const double v = std::strtod(text.c_str(), &end);
            if (end != text.c_str() + text.size() || errno == ERANGE)
                ctx.fail("cannot parse number '" + trim(raw) + "'");
            return v * factor;
        }

        long long parse_integer(const std::string &raw, const Context &ctx)
        {
            const std::string text = trim(raw);
            errno = 0;
            char *end = nullptr;
            const long long v = std::strtoll(text.c_str(), &end, 10);
            if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
                ctx.fail("cannot parse integer '" + text + "'");
            return v;
        }

        std::uint64_t parse_u64(const std::string &raw, const Context &ctx)
        {
            const std::string text = trim(raw);
            errno = 0;
            char *end = nullptr;
            if (!text.empty() && text.front() == '-')
                ctx.fail("seed must be nonnegative");
            const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
            if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
                ctx.fail("cannot parse unsigned integer '" + text + "'");
            return v;
        }

        int parse_int(const std::string &raw, const Context &ctx)
        {
            const long long v = parse_integer(raw, ctx);
            if (v < -2147483647LL || v > 2147483647LL)
                ctx.fail("integer out of range");
            return static_cast<int>(v);
        }

        cplx parse_complex(const std::string &raw, const Context &ctx)
        {
            const auto at = raw.find('@');
            if (at == std::string::npos)
                ctx.fail("complex value must be magnitude@phase, got '" + trim(raw) + "'");
            const double mag = parse_real(raw.substr(0, at), ctx);
            const double phase = parse_real(raw.substr(at + 1), ctx);
            return std::polar(mag, phase);
        }

        std::vector<double> parse_list(const std::string &raw, const Context &ctx)
        {
            std::vector<double> out;
            std::stringstream ss(raw);
            std::string item;
            while (std::getline(ss, item, ','))
                out.push_back(parse_real(item, ctx));
            if (out.empty())
                ctx.fail("empty list");
            return out;
        }

        std::string exact(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
    }

    Scenario parse_scenario(std::istream &in, const std::string &source)
    {
        Scenario s = reference_scenario();
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            const Context ctx{source, lineno};
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                ctx.fail("expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (value.empty())
                ctx.fail("missing value for '" + key + "'");

            auto &c = s.config;
            auto &p = s.params;
            if (key == "n_pilots") c.n_pilots = parse_int(value, ctx);
            else if (key == "n_subblocks") c.n_subblocks = parse_int(value, ctx);
            else if (key == "m_y") c.geom.m_y = parse_int(value, ctx);
            else if (key == "m_z") c.geom.m_z = parse_int(value, ctx);
            else if (key == "subblock_duration") c.subblock_duration = parse_real(value, ctx);
            else if (key == "snr_grid") c.snr_grid = parse_list(value, ctx);
            else if (key == "trials") c.trials = static_cast<long>(parse_integer(value, ctx));
            else if (key == "seed") c.seed = parse_u64(value, ctx);
            else if (key == "f_d1") p.f_d1 = parse_real(value, ctx);
            else if (key == "f_d2") p.f_d2 = parse_real(value, ctx);
            else if (key == "beta1") p.beta1 = parse_complex(value, ctx);
            else if (key == "beta2") p.beta2 = parse_complex(value, ctx);
            else if (key == "phi_y") p.phi_y = parse_real(value, ctx);
            else if (key == "phi_z") p.phi_z = parse_real(value, ctx);
            else ctx.fail("unknown key '" + key + "'");
        }
        return s;
    }

    Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorKind::file, "cannot open config '" + path + "'");
        return parse_scenario(in, path);
    }

    std::string format_scenario(const Scenario &s)
    {
        const auto &c = s.config;
        const auto &p = s.params;
        std::ostringstream os;
        os << "n_pilots = " << c.n_pilots << '\n'
           << "n_subblocks = " << c.n_subblocks << '\n'
           << "m_y = " << c.geom.m_y << '\n'
           << "m_z = " << c.geom.m_z << '\n'
           << "subblock_duration = " << exact(c.subblock_duration) << '\n'
           << "snr_grid = ";
        for (std::size_t i = 0; i < c.snr_grid.size(); ++i)
            os << (i ? ", " : "") << exact(c.snr_grid[i]);
        os << '\n'
           << "trials = " << c.trials << '\n'
           << "seed = " << c.seed << '\n'
           << "f_d1 = " << exact(p.f_d1) << '\n'
           << "f_d2 = " << exact(p.f_d2) << '\n'
           << "beta1 = " << exact(std::abs(p.beta1)) << '@' << exact(std::arg(p.beta1)) << '\n'
           << "beta2 = " << exact(std::abs(p.beta2)) << '@' << exact(std::arg(p.beta2)) << '\n'
           << "phi_y = " << exact(p.phi_y) << '\n'
           << "phi_z = " << exact(p.phi_z) << '\n';
        return os.str();
    }
}
