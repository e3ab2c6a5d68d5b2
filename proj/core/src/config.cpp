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

#include "pinch/config.hpp"
#include "pinch/wireless_channel.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

namespace pinch
{
    ConfigError::ConfigError(const std::string &what, std::string key, int line)
        : std::runtime_error(what), key_(std::move(key)), line_(line) {}

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        [[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected)
        {
            throw ConfigError(fmt::format("invalid value '{}' for key '{}' (expected {})", value, key, expected),
                              std::string(key));
        }

        double parse_double(std::string_view key, std::string_view text)
        {
            text = trim(text);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
                bad_value(key, text, "a finite number");
            return v;
        }

        std::uint64_t parse_u64(std::string_view key, std::string_view text)
        {
            text = trim(text);
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                bad_value(key, text, "a non-negative integer");
            return v;
        }

        std::vector<std::string_view> split(std::string_view text, char sep)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = text.find(sep, start);
                out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return out;
        }

        std::vector<double> parse_list(std::string_view key, std::string_view text)
        {
            text = trim(text);
            if (text.empty())
                return {};
            if (text.find(':') != std::string_view::npos)
            {
                const auto parts = split(text, ':');
                if (parts.size() != 3)
                    bad_value(key, text, "start:step:stop");
                const double start = parse_double(key, parts[0]);
                const double step = parse_double(key, parts[1]);
                const double stop = parse_double(key, parts[2]);
                if (!(step > 0.0) || stop < start)
                    bad_value(key, text, "a positive step and stop >= start");
                const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
                if (count > 100000)
                    bad_value(key, text, "at most 100000 points");
                std::vector<double> out;
                for (std::size_t i = 0; i < count; ++i)
                    out.push_back(start + step * static_cast<double>(i));
                return out;
            }
            std::vector<double> out;
            for (auto item : split(text, ','))
                out.push_back(parse_double(key, item));
            return out;
        }

        std::string format_list(const std::vector<double> &v)
        {
            return fmt::format("{}", fmt::join(v, ","));
        }

        struct Field
        {
            std::function<void(ExperimentConfig &, std::string_view key, std::string_view value)> set;
            std::function<std::string(const ExperimentConfig &)> get;
        };

        template <typename T>
        Field number(T ExperimentConfig::*member)
        {
            return {[member](ExperimentConfig &c, std::string_view key, std::string_view v)
                    {
                        if constexpr (std::is_same_v<T, double>)
                            c.*member = parse_double(key, v);
                        else
                            c.*member = static_cast<T>(parse_u64(key, v));
                    },
                    [member](const ExperimentConfig &c)
                    { return fmt::format("{}", c.*member); }};
        }

        Field optional_number(std::optional<double> ExperimentConfig::*member)
        {
            return {[member](ExperimentConfig &c, std::string_view key, std::string_view v)
                    {
                        if (trim(v) == "auto")
                            c.*member = std::nullopt;
                        else
                            c.*member = parse_double(key, v);
                    },
                    [member](const ExperimentConfig &c)
                    { return (c.*member) ? fmt::format("{}", *(c.*member)) : std::string("auto"); }};
        }

        Field list(std::vector<double> ExperimentConfig::*member)
        {
            return {[member](ExperimentConfig &c, std::string_view key, std::string_view v)
                    { c.*member = parse_list(key, v); },
                    [member](const ExperimentConfig &c)
                    { return format_list(c.*member); }};
        }

        const std::map<std::string, Field, std::less<>> &fields()
        {
            static const std::map<std::string, Field, std::less<>> table = []
            {
                std::map<std::string, Field, std::less<>> t;
                t["N"] = number(&ExperimentConfig::n_pas);
                t["carrier_hz"] = number(&ExperimentConfig::carrier_hz);
                t["epsilon"] = number(&ExperimentConfig::epsilon);
                t["gamma"] = number(&ExperimentConfig::gamma);
                t["eta"] = number(&ExperimentConfig::eta);
                t["beta"] = number(&ExperimentConfig::beta);
                t["serial_alpha"] = number(&ExperimentConfig::serial_alpha);
                t["beta_grid"] = list(&ExperimentConfig::beta_grid);
                t["snr_grid"] = list(&ExperimentConfig::snr_grid_db);
                t["snr_db"] = number(&ExperimentConfig::snr_db);
                t["trials"] = number(&ExperimentConfig::trials);
                t["seed"] = number(&ExperimentConfig::seed);
                t["protocols"] = {
                    [](ExperimentConfig &c, std::string_view key, std::string_view v)
                    {
                        std::vector<Protocol> ps;
                        for (auto item : split(trim(v), ','))
                        {
                            try
                            {
                                ps.push_back(parse_protocol(item));
                            }
                            catch (const ContractError &)
                            {
                                bad_value(key, item, "serial, smatrix or hadamard-ideal");
                            }
                        }
                        c.protocols = std::move(ps);
                    },
                    [](const ExperimentConfig &c)
                    {
                        std::vector<std::string_view> names;
                        for (auto p : c.protocols)
                            names.push_back(to_string(p));
                        return fmt::format("{}", fmt::join(names, ","));
                    }};
                t["waveguide.n_eff"] = number(&ExperimentConfig::effective_index);
                t["waveguide.spacing"] = number(&ExperimentConfig::pa_spacing);
                t["waveguide.first_offset"] = number(&ExperimentConfig::first_offset);
                t["waveguide.positions"] = list(&ExperimentConfig::pa_positions);
                t["region.dx"] = number(&ExperimentConfig::region_x);
                t["region.dy"] = number(&ExperimentConfig::region_y);
                t["region.height"] = number(&ExperimentConfig::height);
                t["region.waveguide_y"] = optional_number(&ExperimentConfig::waveguide_y);
                t["scatterers.count"] = number(&ExperimentConfig::scatterer_count);
                t["scatterers.variance"] = number(&ExperimentConfig::scatterer_variance);
                t["visibility.p_block"] = number(&ExperimentConfig::block_probability);
                t["channel.beta0"] = optional_number(&ExperimentConfig::path_loss_ref);
                t["power.ue"] = number(&ExperimentConfig::p_ue);
                t["power.total"] = number(&ExperimentConfig::p_total);
                t["downlink.G"] = number(&ExperimentConfig::probed_components);
                t["estimation.cutoff"] = number(&ExperimentConfig::relative_cutoff);
                return t;
            }();
            return table;
        }

        void flatten_json(ExperimentConfig &config, const nlohmann::json &node, const std::string &prefix)
        {
            for (const auto &[name, value] : node.items())
            {
                const std::string key = prefix.empty() ? name : prefix + "." + name;
                if (value.is_object())
                {
                    flatten_json(config, value, key);
                    continue;
                }
                std::string text;
                if (value.is_array())
                {
                    std::vector<std::string> items;
                    for (const auto &item : value)
                    {
                        if (!item.is_number() && !item.is_string())
                            throw ConfigError(fmt::format("key '{}': list items must be numbers or strings", key), key);
                        items.push_back(item.is_string() ? item.get<std::string>() : item.dump());
                    }
                    text = fmt::format("{}", fmt::join(items, ","));
                }
                else if (value.is_string())
                    text = value.get<std::string>();
                else if (value.is_number())
                    text = value.dump();
                else
                    throw ConfigError(fmt::format("key '{}': unsupported JSON value {}", key, value.dump()), key);
                config.set(key, text);
            }
        }
    } // namespace

    double ExperimentConfig::wavelength() const
    {
        constexpr double speed_of_light = 299792458.0;
        return speed_of_light / carrier_hz;
    }

    double ExperimentConfig::beta0() const
    {
        if (path_loss_ref)
            return *path_loss_ref;
        return free_space_reference(wavelength());
    }

    bool ExperimentConfig::has_protocol(Protocol p) const
    {
        return std::find(protocols.begin(), protocols.end(), p) != protocols.end();
    }

    void ExperimentConfig::set(std::string_view key, std::string_view value)
    {
        const auto &table = fields();
        const auto it = table.find(key);
        if (it == table.end())
            throw ConfigError(fmt::format("unknown configuration key '{}'", key), std::string(key));
        it->second.set(*this, key, value);
    }

    void ExperimentConfig::validate() const
    {
        auto fail = [](const std::string &key, const std::string &what)
        { throw ConfigError(fmt::format("{}: {}", key, what), key); };

        if (n_pas < 1)
            fail("N", "must be at least 1");
        const bool needs_pow2 = has_protocol(Protocol::SMatrix) || has_protocol(Protocol::HadamardIdeal);
        if (needs_pow2 && !std::has_single_bit(n_pas))
            fail("N", fmt::format("{} is not a power of two, required by the S-Matrix/Hadamard protocols", n_pas));
        if (!(carrier_hz > 0.0))
            fail("carrier_hz", "must be positive");
        if (!(epsilon >= 0.0))
            fail("epsilon", "must be non-negative");
        if (!(gamma > 0.0 && gamma <= 1.0))
            fail("gamma", "must lie in (0, 1]");
        if (!(eta > 0.0 && eta < 1.0))
            fail("eta", "must lie in (0, 1)");
        if (!(beta >= 0.0 && beta < 1.0))
            fail("beta", "must lie in [0, 1)");
        if (!(serial_alpha > 0.0 && serial_alpha <= 1.0))
            fail("serial_alpha", "must lie in (0, 1]");
        if (beta_grid.empty())
            fail("beta_grid", "must not be empty");
        for (double b : beta_grid)
            if (!(b >= 0.0 && b < 1.0))
                fail("beta_grid", fmt::format("entry {} outside [0, 1)", b));
        if (snr_grid_db.empty())
            fail("snr_grid", "must not be empty");
        if (trials < 1)
            fail("trials", "must be at least 1");
        if (protocols.empty())
            fail("protocols", "must name at least one protocol");
        if (!(effective_index > 0.0))
            fail("waveguide.n_eff", "must be positive");
        if (pa_positions.empty())
        {
            if (!(pa_spacing > 0.0))
                fail("waveguide.spacing", "must be positive");
            if (!(first_offset >= 0.0))
                fail("waveguide.first_offset", "must be non-negative");
        }
        else
        {
            if (pa_positions.size() != n_pas)
                fail("waveguide.positions", fmt::format("has {} entries but N = {}", pa_positions.size(), n_pas));
            for (std::size_t i = 0; i < pa_positions.size(); ++i)
                if (pa_positions[i] < 0.0 || (i > 0 && !(pa_positions[i] > pa_positions[i - 1])))
                    fail("waveguide.positions", "must be non-negative and strictly increasing");
        }
        if (!(region_x > 0.0))
            fail("region.dx", "must be positive");
        if (!(region_y > 0.0))
            fail("region.dy", "must be positive");
        if (!(height > 0.0))
            fail("region.height", "must be positive");
        if (waveguide_y && !(*waveguide_y >= 0.0 && *waveguide_y <= region_y))
            fail("region.waveguide_y", "must lie in [0, region.dy]");
        if (scatterer_count > 0 && !(scatterer_variance > 0.0))
            fail("scatterers.variance", "must be positive");
        if (!(block_probability >= 0.0 && block_probability <= 1.0))
            fail("visibility.p_block", "must lie in [0, 1]");
        if (path_loss_ref && !(*path_loss_ref > 0.0))
            fail("channel.beta0", "must be positive");
        if (!(p_ue > 0.0))
            fail("power.ue", "must be positive");
        if (!(p_total > 0.0))
            fail("power.total", "must be positive");
        if (probed_components < 1)
            fail("downlink.G", "must be at least 1");
        if (!(relative_cutoff >= 0.0 && relative_cutoff < 1.0))
            fail("estimation.cutoff", "must lie in [0, 1)");
    }

    std::string ExperimentConfig::canonical_text() const
    {
        std::string out;
        for (const auto &[key, field] : fields())
            out += fmt::format("{} = {}\n", key, field.get(*this));
        return out;
    }

    std::uint64_t ExperimentConfig::hash() const
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : canonical_text())
        {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    const std::vector<std::string> &ExperimentConfig::known_keys()
    {
        static const std::vector<std::string> keys = []
        {
            std::vector<std::string> k;
            for (const auto &[key, field] : fields())
                k.push_back(key);
            return k;
        }();
        return keys;
    }

    void apply_key_value_text(ExperimentConfig &config, std::string_view text)
    {
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size())
        {
            const auto end = text.find('\n', start);
            std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
            ++line_no;
            start = end == std::string_view::npos ? text.size() + 1 : end + 1;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no), {}, line_no);
            const auto key = trim(line.substr(0, eq));
            try
            {
                config.set(key, trim(line.substr(eq + 1)));
            }
            catch (const ConfigError &e)
            {
                throw ConfigError(fmt::format("line {}: {}", line_no, e.what()), e.key(), line_no);
            }
        }
    }

    void apply_json_text(ExperimentConfig &config, std::string_view text)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ConfigError(fmt::format("malformed JSON config: {}", e.what()));
        }
        if (!doc.is_object())
            throw ConfigError("JSON config must be an object");
        flatten_json(config, doc, "");
    }

    void apply_config_file(ExperimentConfig &config, const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();

        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            apply_json_text(config, text);
        else
            apply_key_value_text(config, text);
    }

    ExperimentConfig load_config_file(const std::filesystem::path &path)
    {
        ExperimentConfig config;
        apply_config_file(config, path);
        return config;
    }

    void apply_overrides(ExperimentConfig &config, const std::vector<std::string> &overrides)
    {
        for (const auto &item : overrides)
        {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw ConfigError(fmt::format("override '{}' is not of the form KEY=VALUE", item));
            config.set(trim(std::string_view(item).substr(0, eq)), trim(std::string_view(item).substr(eq + 1)));
        }
    }
} // namespace pinch
