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

#include "itsce/plot_script.hpp"
#include "itsce/harness.hpp"
#include "itsce/types.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace itsce
{
    namespace
    {
        // 1-based gnuplot column of a named CSV series
        int column_of(std::string_view name)
        {
            for (std::size_t i = 0; i < n_mse_series; ++i)
                if (mse_series_names[i] == name)
                    return static_cast<int>(2 + i);
            for (std::size_t i = 0; i < n_crlb_series; ++i)
                if (crlb_series_names[i] == name)
                    return static_cast<int>(2 + n_mse_series + i);
            throw Error(ErrorKind::invalid_input, "unknown series " + std::string(name));
        }

        struct Figure
        {
            const char *suffix;
            const char *ylabel;
            std::vector<std::pair<const char *, const char *>> curves; // series, legend
        };

        std::string escape(const std::string &s)
        {
            std::string out;
            for (char c : s)
            {
                if (c == '\'')
                    out += "''";
                else
                    out += c;
            }
            return out;
        }
    }

    std::string plot_script(const std::string &csv_path, const std::string &image_prefix)
    {
        const std::vector<Figure> figures{
            {"xi", "MSE",
             {{"mse_xi1", "xi_1 normalized LS"}, {"mse_xi1_nn", "xi_1 NN LS"}, {"crlb_xi1", "CRLB xi_1"},
              {"mse_xi2", "xi_2 normalized LS"}, {"mse_xi2_nn", "xi_2 NN LS"}, {"crlb_xi2", "CRLB xi_2"}}},
            {"fd", "MSE [Hz^2]",
             {{"mse_fd1", "f_{d1}"}, {"crlb_fd1", "CRLB f_{d1}"}, {"mse_fd2", "f_{d2}"}, {"crlb_fd2", "CRLB f_{d2}"}}},
            {"beta", "MSE",
             {{"mse_beta1", "beta_1"}, {"mse_beta1_ideal", "beta_1 idealized"}, {"crlb_beta1", "CRLB beta_1"},
              {"mse_beta2", "beta_2"}, {"mse_beta2_ideal", "beta_2 idealized"}, {"crlb_beta2", "CRLB beta_2"}}},
            {"phi", "MSE [rad^2]",
             {{"mse_phi_y", "phi_y"}, {"crlb_phi_y", "CRLB phi_y"}, {"mse_phi_z", "phi_z"}, {"crlb_phi_z", "CRLB phi_z"}}},
        };

        std::ostringstream os;
        os << "#!/usr/bin/env gnuplot\n"
           << "# MSE and CRLB versus SNR from an itsce sweep.\n"
           << "set datafile separator ','\n"
           << "set terminal pngcairo size 900,650 enhanced\n"
           << "set logscale y\n"
           << "set format y '10^{%L}'\n"
           << "set grid\n"
           << "set key outside right\n"
           << "set xlabel 'SNR [dB]'\n"
           << "data = '" << escape(csv_path) << "'\n";
        for (const auto &fig : figures)
        {
            os << "\nset output '" << escape(image_prefix) << '_' << fig.suffix << ".png'\n"
               << "set ylabel '" << fig.ylabel << "'\n"
               << "plot ";
            for (std::size_t i = 0; i < fig.curves.size(); ++i)
            {
                const auto &[series, legend] = fig.curves[i];
                const bool bound = std::string_view(series).starts_with("crlb");
                os << (i ? ", \\\n     " : "") << "data skip 1 using 1:" << column_of(series) << " with "
                   << (bound ? "lines dashtype 2" : "linespoints") << " title '" << legend << "'";
            }
            os << "\nunset output\n";
        }
        return os.str();
    }

    void write_plot_script(const std::string &script_path, const std::string &csv_path)
    {
        const std::filesystem::path csv(csv_path);
        const std::string prefix = (csv.parent_path() / csv.stem()).string();
        std::ofstream f(script_path, std::ios::trunc);
        if (!f)
            throw Error(ErrorKind::file, "cannot open '" + script_path + "' for writing");
        f << plot_script(csv_path, prefix);
        if (!f)
            throw Error(ErrorKind::file, "write to '" + script_path + "' failed");
    }
}
