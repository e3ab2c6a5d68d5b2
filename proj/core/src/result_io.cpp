// SPDX-License-Identifier: Apache-2.0
//
// pinch-est: channel estimation simulator for pinching-antenna systems
// Copyright (C) 2026 The pinch-est authors
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

#include "pinch/result_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace pinch
{
    namespace
    {
        constexpr std::string_view kSeSuffix = "_se_db";

        std::string num(double v) { return fmt::format("{:.10g}", v); }

        bool is_sentinel(double v) { return std::abs(v) >= 299.0 || !std::isfinite(v); }

        std::vector<std::string> split_csv_line(const std::string &line)
        {
            std::vector<std::string> out;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                out.push_back(cell);
            return out;
        }

        double parse_cell(const std::string &cell)
        {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw ContractError(fmt::format("malformed CSV number '{}'", cell));
            return v;
        }

        std::string xml_escape(std::string_view s)
        {
            std::string out;
            for (char c : s)
            {
                switch (c)
                {
                case '<':
                    out += "&lt;";
                    break;
                case '>':
                    out += "&gt;";
                    break;
                case '&':
                    out += "&amp;";
                    break;
                default:
                    out += c;
                }
            }
            return out;
        }

        // Round-number tick spacing covering [lo, hi] with roughly `target` ticks.
        double tick_step(double lo, double hi, int target)
        {
            const double raw = (hi - lo) / target;
            if (!(raw > 0.0))
                return 1.0;
            const double mag = std::pow(10.0, std::floor(std::log10(raw)));
            for (double f : {1.0, 2.0, 5.0, 10.0})
                if (raw <= f * mag)
                    return f * mag;
            return 10.0 * mag;
        }
    } // namespace

    void write_csv(std::ostream &os, const ExperimentResult &result)
    {
        os << "# experiment: " << result.experiment << '\n';
        os << "# seed: " << result.seed << '\n';
        os << "# trials: " << result.trials << '\n';
        os << fmt::format("# config_hash: {:016x}\n", result.config_hash);
        std::istringstream echo(result.config_echo);
        for (std::string line; std::getline(echo, line);)
            os << "# config: " << line << '\n';

        for (const auto &s : result.series)
        {
            for (std::size_t i = 0; i < s.exclusion_rates.size(); ++i)
                if (s.exclusion_rates[i] > 0.0)
                    os << fmt::format("# exclusion: {} {}={} rate={}{}\n", s.name, result.axis_name, num(result.axis[i]),
                                      num(s.exclusion_rates[i]),
                                      s.exclusion_rates[i] > kUnreliableExclusionRate ? " unreliable" : "");
            if (!s.condition_numbers.empty())
            {
                const auto [lo, hi] = std::minmax_element(s.condition_numbers.begin(), s.condition_numbers.end());
                os << fmt::format("# kappa: {} min={} max={}\n", s.name, num(*lo), num(*hi));
            }
        }

        os << result.axis_name;
        for (const auto &s : result.series)
        {
            os << ',' << s.name;
            if (!s.standard_errors.empty())
                os << ',' << s.name << kSeSuffix;
        }
        os << '\n';

        for (std::size_t i = 0; i < result.axis.size(); ++i)
        {
            os << num(result.axis[i]);
            for (const auto &s : result.series)
            {
                os << ',' << num(s.values.at(i));
                if (!s.standard_errors.empty())
                    os << ',' << num(s.standard_errors.at(i));
            }
            os << '\n';
        }
    }

    std::vector<double> CsvTable::column(std::string_view name) const
    {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw ContractError(fmt::format("CSV has no column '{}'", name));
        const auto idx = static_cast<std::size_t>(it - header.begin());
        std::vector<double> out;
        out.reserve(rows.size());
        for (const auto &r : rows)
            out.push_back(r[idx]);
        return out;
    }

    CsvTable read_csv(std::istream &is)
    {
        CsvTable t;
        for (std::string line; std::getline(is, line);)
        {
            if (line.empty())
                continue;
            if (line.front() == '#')
            {
                t.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
                continue;
            }
            auto cells = split_csv_line(line);
            if (t.header.empty())
            {
                t.header = std::move(cells);
                continue;
            }
            if (cells.size() != t.header.size())
                throw ContractError(fmt::format("CSV row has {} cells, header has {}", cells.size(), t.header.size()));
            std::vector<double> row;
            row.reserve(cells.size());
            for (const auto &c : cells)
                row.push_back(parse_cell(c));
            t.rows.push_back(std::move(row));
        }
        if (t.header.empty())
            throw ContractError("CSV has no header row");
        return t;
    }

    void write_svg(std::ostream &os, const CsvTable &table, std::string_view title)
    {
        constexpr double width = 720, height = 480;
        constexpr double left = 70, right = 190, top = 40, bottom = 60;
        constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
        static constexpr std::string_view palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                       "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

        std::vector<std::size_t> value_columns;
        for (std::size_t c = 1; c < table.header.size(); ++c)
        {
            const auto &h = table.header[c];
            if (!(h.size() > kSeSuffix.size() && h.ends_with(kSeSuffix)))
                value_columns.push_back(c);
        }

        double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
        double y_lo = x_lo, y_hi = -x_lo;
        for (const auto &r : table.rows)
        {
            x_lo = std::min(x_lo, r[0]);
            x_hi = std::max(x_hi, r[0]);
            for (auto c : value_columns)
                if (!is_sentinel(r[c]))
                {
                    y_lo = std::min(y_lo, r[c]);
                    y_hi = std::max(y_hi, r[c]);
                }
        }
        if (!std::isfinite(x_lo))
            x_lo = 0, x_hi = 1;
        if (!std::isfinite(y_lo))
            y_lo = 0, y_hi = 1;
        if (x_hi == x_lo)
            x_hi = x_lo + 1;
        const double y_step = tick_step(y_lo, y_hi == y_lo ? y_lo + 1 : y_hi, 6);
        y_lo = std::floor(y_lo / y_step) * y_step;
        y_hi = std::ceil(y_hi / y_step) * y_step;
        if (y_hi == y_lo)
            y_hi = y_lo + y_step;

        auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
        auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

        os << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                          "font-family=\"sans-serif\" font-size=\"12\">\n", width, height);
        os << fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
        os << fmt::format("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                          left + plot_w / 2, xml_escape(title));

        // grid and ticks
        for (double y = y_lo; y <= y_hi + 1e-9 * y_step; y += y_step)
            os << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>\n"
                              "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n",
                              left, py(y), left + plot_w, py(y), left - 6, py(y) + 4, num(y));
        const double x_step = tick_step(x_lo, x_hi, 8);
        for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + 1e-9 * x_step; x += x_step)
            os << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>\n"
                              "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                              px(x), top, px(x), top + plot_h, px(x), top + plot_h + 18, num(x));
        os << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                          left, top, plot_w, plot_h);
        os << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", left + plot_w / 2,
                          height - 18, xml_escape(table.header[0]));
        const bool nmse = std::any_of(table.comments.begin(), table.comments.end(), [](const std::string &c)
                                      { return c.starts_with("trials: ") && c != "trials: 0"; });
        os << fmt::format("<text x=\"18\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {})\">{}</text>\n",
                          top + plot_h / 2, top + plot_h / 2, nmse ? "NMSE [dB]" : "power [dB]");

        for (std::size_t k = 0; k < value_columns.size(); ++k)
        {
            const auto c = value_columns[k];
            const auto colour = palette[k % std::size(palette)];
            std::string points;
            for (const auto &r : table.rows)
                if (!is_sentinel(r[c]))
                    points += fmt::format("{:.2f},{:.2f} ", px(r[0]), py(r[c]));
            os << fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n", colour, points);
            for (const auto &r : table.rows)
                if (!is_sentinel(r[c]))
                    os << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n", px(r[0]), py(r[c]), colour);
            const double ly = top + 14 + 18.0 * static_cast<double>(k);
            os << fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"2\"/>\n"
                              "<text x=\"{}\" y=\"{:.2f}\">{}</text>\n",
                              left + plot_w + 12, ly, left + plot_w + 36, ly, colour, left + plot_w + 42, ly + 4,
                              xml_escape(table.header[c]));
        }
        os << "</svg>\n";
    }

    std::string summary_table(const ExperimentResult &result)
    {
        std::string out = fmt::format("{:<24} {:>12} {:>12} {:>14} {:>14}\n", "series", "min [dB]", "max [dB]",
                                      "kappa min", "kappa max");
        for (const auto &s : result.series)
        {
            const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
            std::string k_lo = "-", k_hi = "-";
            if (!s.condition_numbers.empty())
            {
                const auto [a, b] = std::minmax_element(s.condition_numbers.begin(), s.condition_numbers.end());
                k_lo = fmt::format("{:.4g}", *a);
                k_hi = fmt::format("{:.4g}", *b);
            }
            out += fmt::format("{:<24} {:>12.3f} {:>12.3f} {:>14} {:>14}\n", s.name, *lo, *hi, k_lo, k_hi);
        }
        return out;
    }
} // namespace pinch
