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

#include "cli.hpp"

#include "itsce/config_io.hpp"
#include "itsce/crlb.hpp"
#include "itsce/harness.hpp"
#include "itsce/link_sim.hpp"
#include "itsce/pilot_design.hpp"
#include "itsce/plot_script.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>

namespace itsce::cli
{
    namespace
    {
        enum ExitCode : int
        {
            exit_ok = 0,
            exit_error = 1,
            exit_infeasible = 2
        };

        struct SweepArgs
        {
            std::string config;
            std::string out;
            std::string plot_script;
            std::optional<std::uint64_t> seed;
            std::optional<long> trials;
            int threads = 0;
        };

        std::string sci(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.10e", v);
            return buf;
        }

        Scenario scenario_from(const std::string &path)
        {
            return path.empty() ? reference_scenario() : load_scenario(path);
        }

        int report_infeasible(const ValidationReport &report, std::ostream &err)
        {
            err << "error: configuration is infeasible\n" << report.to_string();
            return exit_infeasible;
        }

        int do_sweep(Scenario s, const SweepArgs &a, std::ostream &out, std::ostream &err, bool summary)
        {
            if (a.seed)
                s.config.seed = *a.seed;
            if (a.trials)
                s.config.trials = *a.trials;

            const ValidationReport report = validate_config(s.config, s.params);
            if (!report.ok())
                return report_infeasible(report, err);

            const auto t0 = std::chrono::steady_clock::now();
            const MseCurve curve = run_sweep(s.config, s.params, {Execution::parallel, a.threads});
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            emit_csv(curve, a.out);
            if (!a.plot_script.empty())
                write_plot_script(a.plot_script, a.out);

            out << "wrote " << a.out << " (" << curve.points() << " SNR points, " << s.config.trials
                << " trials each, " << std::fixed << std::setprecision(1) << secs << " s)\n";
            if (summary)
            {
                out << std::defaultfloat;
                out << std::setw(8) << "snr_db";
                for (auto s2 : {"mse_xi1", "crlb_xi1", "mse_xi2", "crlb_xi2", "mse_phi_y", "crlb_phi_y"})
                    out << std::setw(18) << s2;
                out << '\n';
                for (std::size_t p = 0; p < curve.points(); ++p)
                {
                    out << std::setw(8) << curve.snr_db[p];
                    for (double v : {curve[MseSeries::xi1][p], curve[CrlbSeries::xi1][p], curve[MseSeries::xi2][p],
                                     curve[CrlbSeries::xi2][p], curve[MseSeries::phi_y][p],
                                     curve[CrlbSeries::phi_y][p]})
                        out << std::setw(18) << sci(v);
                    out << '\n';
                }
            }
            return exit_ok;
        }

        void print_crlb(const CrlbReport &r, double snr_db, double sigma2, std::ostream &out)
        {
            out << "snr_db = " << snr_db << "\n"
                << "sigma2 = " << sci(sigma2) << "\n"
                << "crlb_xi1 = " << sci(r.crlb_xi1) << "\n"
                << "crlb_xi2 = " << sci(r.crlb_xi2) << "\n"
                << "crlb_fd1 = " << sci(r.crlb_fd1) << " Hz^2\n"
                << "crlb_fd2 = " << sci(r.crlb_fd2) << " Hz^2\n"
                << "crlb_beta1 = " << sci(r.crlb_beta1) << "\n"
                << "crlb_beta2 = " << sci(r.crlb_beta2) << "\n"
                << "crlb_phi_y = " << sci(r.crlb_phi_y) << " rad^2\n"
                << "crlb_phi_z = " << sci(r.crlb_phi_z) << " rad^2\n"
                << "fim_zbar =\n";
            for (int row = 0; row < 4; ++row)
            {
                out << " ";
                for (int col = 0; col < 4; ++col)
                    out << ' ' << std::setw(18) << sci(r.fim_zbar(row, col));
                out << '\n';
            }
        }
    }

    int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Channel-parameter estimation for ITS-assisted high-speed-rail downlinks", "itsce"};
        app.require_subcommand(1);

        SweepArgs sweep_args;
        auto *sweep = app.add_subcommand("sweep", "Monte Carlo MSE-vs-SNR sweep written as CSV");
        sweep->add_option("--config", sweep_args.config, "Scenario file (key = value)")->required();
        sweep->add_option("--out", sweep_args.out, "Output CSV path")->required();
        sweep->add_option("--plot-script", sweep_args.plot_script, "Also write a gnuplot script for the CSV");
        sweep->add_option("--seed", sweep_args.seed, "Override the master seed");
        sweep->add_option("--trials", sweep_args.trials, "Override trials per SNR point")->check(CLI::PositiveNumber);
        sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = OpenMP default)")
            ->check(CLI::NonNegativeNumber);

        std::string crlb_config;
        double crlb_snr = 20.0;
        auto *crlb = app.add_subcommand("crlb", "Print the Cramer-Rao bounds at one SNR");
        crlb->add_option("--config", crlb_config, "Scenario file (default: built-in scenario)");
        crlb->add_option("--snr", crlb_snr, "SNR in dB")->capture_default_str();

        std::string validate_config_path;
        auto *validate = app.add_subcommand("validate", "Check a scenario against the estimator preconditions");
        validate->add_option("--config", validate_config_path, "Scenario file (default: built-in scenario)");

        SweepArgs demo_args;
        demo_args.out = "demo.csv";
        auto *demo = app.add_subcommand("demo", "Run the built-in reference scenario end to end");
        demo->add_option("--out", demo_args.out, "Output CSV path")->capture_default_str();
        demo->add_option("--plot-script", demo_args.plot_script, "Also write a gnuplot script for the CSV");
        demo->add_option("--seed", demo_args.seed, "Override the master seed");
        demo->add_option("--trials", demo_args.trials, "Override trials per SNR point")->check(CLI::PositiveNumber);
        demo->add_option("--threads", demo_args.threads, "Worker threads (0 = OpenMP default)")
            ->check(CLI::NonNegativeNumber);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try
        {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n";
            return e.get_exit_code() != 0 ? e.get_exit_code() : exit_error;
        }

        try
        {
            if (*sweep)
                return do_sweep(load_scenario(sweep_args.config), sweep_args, out, err, false);

            if (*demo)
                return do_sweep(reference_scenario(), demo_args, out, err, true);

            if (*validate)
            {
                const Scenario s = scenario_from(validate_config_path);
                const ValidationReport report = validate_config(s.config, s.params);
                if (!report.ok())
                    return report_infeasible(report, err);
                out << report.to_string();
                return exit_ok;
            }

            if (*crlb)
            {
                const Scenario s = scenario_from(crlb_config);
                const ValidationReport report = validate_config(s.config, s.params);
                if (!report.ok())
                    return report_infeasible(report, err);
                const double sigma2 = sigma_from_snr(crlb_snr);
                print_crlb(crlb_report(sigma2, s.config, s.params), crlb_snr, sigma2, out);
                return exit_ok;
            }
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_error;
        }
        return exit_error;
    }
}
