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

#ifndef ITSCE_HARNESS_HPP
#define ITSCE_HARNESS_HPP

#include "itsce/channel_model.hpp"
#include "itsce/crlb.hpp"
#include "itsce/estimators.hpp"
#include "itsce/link_sim.hpp"
#include "itsce/pilot_design.hpp"
#include "itsce/system_config.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itsce
{
    enum class MseSeries
    {
        xi1, xi1_nn, xi2, xi2_nn, fd1, fd2,
        beta1, beta1_ideal, beta2, beta2_ideal, phi_y, phi_z
    };
    inline constexpr std::size_t n_mse_series = 12;

    enum class CrlbSeries
    {
        xi1, xi2, fd1, fd2, beta1, beta2, phi_y, phi_z
    };
    inline constexpr std::size_t n_crlb_series = 8;

    // CSV column names, in column order.
    extern const std::array<std::string_view, n_mse_series> mse_series_names;
    extern const std::array<std::string_view, n_crlb_series> crlb_series_names;

    struct MseCurve
    {
        std::vector<double> snr_db;
        std::array<std::vector<double>, n_mse_series> mse;
        std::array<std::vector<double>, n_crlb_series> crlb;
        std::vector<long> trials_completed;
        std::vector<long> trials_aborted;

        std::vector<double> &operator[](MseSeries s) { return mse[static_cast<std::size_t>(s)]; }
        const std::vector<double> &operator[](MseSeries s) const { return mse[static_cast<std::size_t>(s)]; }
        std::vector<double> &operator[](CrlbSeries s) { return crlb[static_cast<std::size_t>(s)]; }
        const std::vector<double> &operator[](CrlbSeries s) const { return crlb[static_cast<std::size_t>(s)]; }

        std::size_t points() const noexcept { return snr_db.size(); }
        bool operator==(const MseCurve &) const = default;
    };

    // Squared errors of one Monte Carlo trial; nullopt when the trial aborted
    // on a degenerate inner product.
    using TrialErrors = std::array<double, n_mse_series>;

    // Everything a trial needs that does not depend on the noise draw.
    struct TrialContext
    {
        SystemConfig config;
        ChannelParams params;
        PilotDesign design;
        ReceivedFrame clean;
        RMat omega;
        cplx xi1_true;
        cplx xi2_true;

        TrialContext(const SystemConfig &config, const ChannelParams &params);
    };

    std::optional<TrialErrors> run_trial(const TrialContext &ctx, double sigma2, std::size_t snr_index, long trial);

    namespace kernels
    {
        // Reference implementation: trials in index order on the calling thread.
        void evaluate_trials_serial(const TrialContext &ctx, double sigma2, std::size_t snr_index,
                                    std::span<std::optional<TrialErrors>> out);

        // OpenMP over trials; threads <= 0 uses the runtime default.
        void evaluate_trials_parallel(const TrialContext &ctx, double sigma2, std::size_t snr_index,
                                      std::span<std::optional<TrialErrors>> out, int threads);
    }

    enum class Execution
    {
        serial,
        parallel
    };

    struct SweepOptions
    {
        Execution execution = Execution::parallel;
        int threads = 0;
    };

    // Throws Error(infeasible_design) with the validation report when the
    // configuration fails validate_config.
    MseCurve run_sweep(const SystemConfig &config, const ChannelParams &params, const SweepOptions &options = {});

    void emit_csv(const MseCurve &curve, const std::string &path);
    std::string format_csv(const MseCurve &curve);
    MseCurve parse_csv(const std::string &text);
}

#endif
