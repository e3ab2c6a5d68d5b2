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

#ifndef PINCH_RESULT_IO_HPP
#define PINCH_RESULT_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pinch/experiments.hpp"

namespace pinch
{
    /*!
     * Experiment CSV: a block of `# key: value` metadata lines (seed, trials,
     * config hash, config echo, exclusion rates, kappa ranges), then a header
     * row `axis,series...` and one row per axis point. NMSE series are
     * followed by a `<series>_se_db` standard-error column.
     */
    void write_csv(std::ostream &os, const ExperimentResult &result);

    struct CsvTable
    {
        std::vector<std::string> comments; ///< metadata lines without the leading '#'
        std::vector<std::string> header;
        std::vector<std::vector<double>> rows;

        std::vector<double> column(std::string_view name) const;
    };

    /// Parses the format written by write_csv. Throws ContractError on malformed input.
    CsvTable read_csv(std::istream &is);

    /// Self-contained SVG line plot of every value column against the first column.
    void write_svg(std::ostream &os, const CsvTable &table, std::string_view title);

    /// Plain-text summary: per-series min/max value and kappa range.
    std::string summary_table(const ExperimentResult &result);
} // namespace pinch

#endif
