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

#include "itsce/harness.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace itsce
{
    const std::array<std::string_view, n_mse_series> mse_series_names{
        "mse_xi1", "mse_xi1_nn", "mse_xi2", "mse_xi2_nn", "mse_fd1", "mse_fd2",
        "mse_beta1", "mse_beta1_ideal", "mse_beta2", "mse_beta2_ideal", "mse_phi_y", "mse_phi_z"};

    const std::array<std::string_view, n_crlb_series> crlb_series_names{
        "crlb_xi1", "crlb_xi2", "crlb_fd1", "crlb_fd2", "crlb_beta1", "crlb_beta2", "crlb_phi_y", "crlb_phi_z"};

    TrialContext::TrialContext(const SystemConfig &cfg, const ChannelParams &p)
        : config(cfg), params(p), design(make_pilot_design(cfg)), clean(noiseless_frame(p, design, cfg)),
          omega(build_omega(cfg.geom)),
          xi1_true(unit_phasor(2.0 * pi * p.f_d1 * cfg.block_duration())),
          xi2_true(unit_phasor(2.0 * pi * p.f_d2 * cfg.block_duration()))
    {
    }

    std::optional<TrialErrors> run_trial(const TrialContext &ctx, double sigma2, std::size_t snr_index, long trial)
    {
        const auto &cfg = ctx.config;
        const auto &truth = ctx.params;

        ReceivedFrame frame = ctx.clean;
        RngStream rng({cfg.seed, snr_index, static_cast<std::uint64_t>(trial), noise_domain});
        add_noise(frame, sigma2, rng);

        const ChannelEstimates est = estimate_channels(frame, ctx.design);
        const CVec g0 = est.g(0), g1 = est.g(1);
        const CVec h0 = est.h(0), h1 = est.h(1);
        const CVec h = est.h_stacked();

        TrialErrors e{};
        auto at = [&e](MseSeries s) -> double & { return e[static_cast<std::size_t>(s)]; };
        try
        {
            const cplx xi1 = estimate_xi_normalized(g0, g1);
            const cplx xi2 = estimate_xi_normalized(h0, h1);
            const cplx xi1_nn = estimate_xi_nonnormalized(g0, g1);
            const cplx xi2_nn = estimate_xi_nonnormalized(h0, h1);
            const double fd1 = doppler_from_xi(xi1, cfg);
            const double fd2 = doppler_from_xi(xi2, cfg);

            const cplx beta1 = estimate_beta1(g0, fd1, cfg);
            const cplx beta1_ideal = estimate_beta1(g0, truth.f_d1, cfg);

            const CascadedEstimate casc = estimate_beta2_and_z(estimate_c(h, fd2, ctx.design, cfg), ctx.omega);
            const CascadedEstimate casc_ideal =
                estimate_beta2_and_z(estimate_c(h, truth.f_d2, ctx.design, cfg), ctx.omega);

            at(MseSeries::xi1) = std::norm(ctx.xi1_true - xi1);
            at(MseSeries::xi1_nn) = std::norm(ctx.xi1_true - xi1_nn);
            at(MseSeries::xi2) = std::norm(ctx.xi2_true - xi2);
            at(MseSeries::xi2_nn) = std::norm(ctx.xi2_true - xi2_nn);
            at(MseSeries::fd1) = (fd1 - truth.f_d1) * (fd1 - truth.f_d1);
            at(MseSeries::fd2) = (fd2 - truth.f_d2) * (fd2 - truth.f_d2);
            at(MseSeries::beta1) = std::norm(truth.beta1 - beta1);
            at(MseSeries::beta1_ideal) = std::norm(truth.beta1 - beta1_ideal);
            at(MseSeries::beta2) = std::norm(truth.beta2 - std::polar(casc.beta2_mag, casc.z(0)));
            at(MseSeries::beta2_ideal) = std::norm(truth.beta2 - std::polar(casc_ideal.beta2_mag, casc_ideal.z(0)));
            at(MseSeries::phi_y) = (casc.z(1) - truth.phi_y) * (casc.z(1) - truth.phi_y);
            at(MseSeries::phi_z) = (casc.z(2) - truth.phi_z) * (casc.z(2) - truth.phi_z);
        }
        catch (const Error &err)
        {
            if (err.kind() == ErrorKind::degenerate)
                return std::nullopt;
            throw;
        }
        return e;
    }

    namespace kernels
    {
        void evaluate_trials_serial(const TrialContext &ctx, double sigma2, std::size_t snr_index,
                                    std::span<std::optional<TrialErrors>> out)
        {
            for (std::size_t t = 0; t < out.size(); ++t)
                out[t] = run_trial(ctx, sigma2, snr_index, static_cast<long>(t));
        }

        void evaluate_trials_parallel(const TrialContext &ctx, double sigma2, std::size_t snr_index,
                                      std::span<std::optional<TrialErrors>> out, int threads)
        {
            const long n = static_cast<long>(out.size());
            const int team = threads > 0 ? threads : omp_get_max_threads();
            // exceptions may not cross the parallel region boundary
            std::string failure;
            bool failed = false;
#pragma omp parallel for schedule(dynamic, 256) num_threads(team)
            for (long t = 0; t < n; ++t)
            {
                try
                {
                    out[t] = run_trial(ctx, sigma2, snr_index, t);
                }
                catch (const std::exception &ex)
                {
#pragma omp critical(itsce_trial_failure)
                    if (!failed)
                    {
                        failed = true;
                        failure = ex.what();
                    }
                }
            }
            if (failed)
                throw std::runtime_error("trial failed: " + failure);
        }
    }

    namespace
    {
        // Neumaier-compensated running sum; the reduction order is fixed
        // (trial index), so the result does not depend on the schedule.
        class CompensatedSum
        {
        public:
            void add(double x)
            {
                const double t = sum_ + x;
                if (std::abs(sum_) >= std::abs(x))
                    comp_ += (sum_ - t) + x;
                else
                    comp_ += (x - t) + sum_;
                sum_ = t;
            }
            double value() const { return sum_ + comp_; }

        private:
            double sum_ = 0.0;
            double comp_ = 0.0;
        };

        void fill_crlb(MseCurve &curve, double sigma2, const SystemConfig &config, const ChannelParams &params)
        {
            // sigma2 == 0 is the noiseless diagnostic mode; every bound is proportional to sigma2
            CrlbReport r;
            if (sigma2 > 0.0)
                r = crlb_report(sigma2, config, params);
            auto push = [&curve](CrlbSeries s, double v) { curve[s].push_back(v); };
            push(CrlbSeries::xi1, r.crlb_xi1);
            push(CrlbSeries::xi2, r.crlb_xi2);
            push(CrlbSeries::fd1, r.crlb_fd1);
            push(CrlbSeries::fd2, r.crlb_fd2);
            push(CrlbSeries::beta1, r.crlb_beta1);
            push(CrlbSeries::beta2, r.crlb_beta2);
            push(CrlbSeries::phi_y, r.crlb_phi_y);
            push(CrlbSeries::phi_z, r.crlb_phi_z);
        }
    }

    MseCurve run_sweep(const SystemConfig &config, const ChannelParams &params, const SweepOptions &options)
    {
        const ValidationReport report = validate_config(config, params);
        if (!report.ok())
            throw Error(ErrorKind::infeasible_design, "configuration rejected\n" + report.to_string());

        const TrialContext ctx(config, params);
        std::vector<std::optional<TrialErrors>> records(static_cast<std::size_t>(config.trials));

        MseCurve curve;
        for (std::size_t p = 0; p < config.snr_grid.size(); ++p)
        {
            const double snr = config.snr_grid[p];
            const double sigma2 = sigma_from_snr(snr);
            if (options.execution == Execution::serial)
                kernels::evaluate_trials_serial(ctx, sigma2, p, records);
            else
                kernels::evaluate_trials_parallel(ctx, sigma2, p, records, options.threads);

            std::array<CompensatedSum, n_mse_series> sums;
            long completed = 0;
            for (const auto &rec : records)
            {
                if (!rec)
                    continue;
                ++completed;
                for (std::size_t s = 0; s < n_mse_series; ++s)
                    sums[s].add((*rec)[s]);
            }
            if (completed == 0)
                throw Error(ErrorKind::degenerate, "every trial aborted at SNR " + std::to_string(snr) + " dB");

            curve.snr_db.push_back(snr);
            for (std::size_t s = 0; s < n_mse_series; ++s)
                curve.mse[s].push_back(sums[s].value() / static_cast<double>(completed));
            fill_crlb(curve, sigma2, config, params);
            curve.trials_completed.push_back(completed);
            curve.trials_aborted.push_back(config.trials - completed);
        }
        return curve;
    }

    namespace
    {
        std::string sci(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17e", v);
            return buf;
        }
    }

    std::string format_csv(const MseCurve &curve)
    {
        std::string out = "snr_db";
        for (auto name : mse_series_names)
            (out += ',') += name;
        for (auto name : crlb_series_names)
            (out += ',') += name;
        out += ",trials_completed,trials_aborted\n";

        for (std::size_t p = 0; p < curve.points(); ++p)
        {
            out += sci(curve.snr_db[p]);
            for (const auto &series : curve.mse)
                (out += ',') += sci(series.at(p));
            for (const auto &series : curve.crlb)
                (out += ',') += sci(series.at(p));
            out += ',' + std::to_string(curve.trials_completed.at(p));
            out += ',' + std::to_string(curve.trials_aborted.at(p));
            out += '\n';
        }
        return out;
    }

    void emit_csv(const MseCurve &curve, const std::string &path)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw Error(ErrorKind::file, "cannot open '" + path + "' for writing");
        f << format_csv(curve);
        f.flush();
        if (!f)
            throw Error(ErrorKind::file, "write to '" + path + "' failed");
    }

    MseCurve parse_csv(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line))
            throw Error(ErrorKind::file, "empty CSV");

        std::vector<std::string> header;
        {
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                header.push_back(cell);
        }
        const std::size_t n_cols = 1 + n_mse_series + n_crlb_series + 2;
        if (header.size() != n_cols || format_csv(MseCurve{}) != line + '\n')
            throw Error(ErrorKind::file, "unexpected CSV header");

        MseCurve curve;
        while (std::getline(in, line))
        {
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                cells.push_back(cell);
            if (cells.size() != n_cols)
                throw Error(ErrorKind::file, "CSV row has " + std::to_string(cells.size()) + " columns");

            auto num = [](const std::string &s) {
                char *end = nullptr;
                const double v = std::strtod(s.c_str(), &end);
                if (end != s.c_str() + s.size())
                    throw Error(ErrorKind::file, "bad CSV number '" + s + "'");
                return v;
            };
            std::size_t c = 0;
            curve.snr_db.push_back(num(cells[c++]));
            for (auto &series : curve.mse)
                series.push_back(num(cells[c++]));
            for (auto &series : curve.crlb)
                series.push_back(num(cells[c++]));
            curve.trials_completed.push_back(std::stol(cells[c++]));
            curve.trials_aborted.push_back(std::stol(cells[c++]));
        }
        return curve;
    }
}
