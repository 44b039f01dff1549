// SPDX-License-Identifier: Apache-2.0
//
// faswipt C++ library for fluid-antenna SWIPT simulation and optimization
// Copyright (C) 2026 faswipt contributors
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

#include "faswipt/config_io.hpp"

#include <json.hpp>

#include <set>

namespace faswipt
{

    using json = nlohmann::json;

    static Region parse_region(const json &j, const std::string &key)
    {
        if (!j.is_object())
            throw ConfigError(key + ": expected an object with x_min/x_max/y_min/y_max");
        Region r;
        std::set<std::string> known = {"x_min", "x_max", "y_min", "y_max"};
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!known.count(it.key()))
                throw ConfigError(key + ": unknown key '" + it.key() + "'");
        try
        {
            r.x_min = j.at("x_min").get<double>();
            r.x_max = j.at("x_max").get<double>();
            r.y_min = j.at("y_min").get<double>();
            r.y_max = j.at("y_max").get<double>();
        }
        catch (const json::exception &e)
        {
            throw ConfigError(key + ": " + e.what());
        }
        if (!(r.x_min < r.x_max) || !(r.y_min < r.y_max))
            throw ConfigError(key + ": region bounds must satisfy min < max");
        return r;
    }

    ScenarioParams parse_scenario_json(const std::string &text)
    {
        json j;
        try
        {
            j = json::parse(text);
        }
        catch (const json::exception &e)
        {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object())
            throw ConfigError("config root must be a JSON object");

        static const std::set<std::string> known = {
            "n_antennas", "power",     "noise_i",   "noise_e", "sinr_floor_db", "min_dist",
            "tx_region",  "rx_region", "region_size", "epsilon", "paths",       "path_gain"};
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!known.count(it.key()))
                throw ConfigError("unknown config key '" + it.key() + "'");

        ScenarioParams p;
        try
        {
            if (j.contains("n_antennas"))
                p.n_antennas = j.at("n_antennas").get<int>();
            if (j.contains("power"))
                p.power = j.at("power").get<double>();
            if (j.contains("noise_i"))
                p.noise_i = j.at("noise_i").get<double>();
            if (j.contains("noise_e"))
                p.noise_e = j.at("noise_e").get<double>();
            if (j.contains("sinr_floor_db"))
                p.sinr_floor_db = j.at("sinr_floor_db").get<double>();
            if (j.contains("min_dist"))
                p.min_dist = j.at("min_dist").get<double>();
            if (j.contains("region_size"))
            {
                double side = j.at("region_size").get<double>();
                if (!(side > 0.0))
                    throw ConfigError("region_size must be positive");
                p.tx_region = square_region(side);
                p.rx_region = square_region(side);
            }
            if (j.contains("tx_region"))
                p.tx_region = parse_region(j.at("tx_region"), "tx_region");
            if (j.contains("rx_region"))
                p.rx_region = parse_region(j.at("rx_region"), "rx_region");
            if (j.contains("epsilon"))
                p.epsilon = j.at("epsilon").get<double>();
            if (j.contains("paths"))
                p.paths = j.at("paths").get<int>();
            if (j.contains("path_gain"))
                p.path_gain = j.at("path_gain").get<double>();
        }
        catch (const ConfigError &)
        {
            throw;
        }
        catch (const json::exception &e)
        {
            throw ConfigError(std::string("config value error: ") + e.what());
        }

        if (p.n_antennas < 1)
            throw ConfigError("n_antennas must be at least 1");
        if (!(p.power > 0.0))
            throw ConfigError("power must be positive");
        if (!(p.noise_i > 0.0))
            throw ConfigError("noise_i must be positive");
        if (!(p.min_dist >= 0.0))
            throw ConfigError("min_dist must be non-negative");
        if (!(p.epsilon > 0.0))
            throw ConfigError("epsilon must be positive");
        if (p.paths < 1)
            throw ConfigError("paths must be at least 1");
        if (!(p.path_gain > 0.0))
            throw ConfigError("path_gain must be positive");
        return p;
    }

    static json region_json(const Region &r)
    {
        return json{{"x_min", r.x_min}, {"x_max", r.x_max}, {"y_min", r.y_min}, {"y_max", r.y_max}};
    }

    std::string scenario_json(const ScenarioParams &p)
    {
        nlohmann::ordered_json j;
        j["n_antennas"] = p.n_antennas;
        j["power"] = p.power;
        j["noise_i"] = p.noise_i;
        j["noise_e"] = p.noise_e;
        j["sinr_floor_db"] = p.sinr_floor_db;
        j["min_dist"] = p.min_dist;
        j["tx_region"] = region_json(p.tx_region);
        j["rx_region"] = region_json(p.rx_region);
        j["epsilon"] = p.epsilon;
        j["paths"] = p.paths;
        j["path_gain"] = p.path_gain;
        return j.dump(2);
    }

    ScenarioConfig make_config(const ScenarioParams &p, const ChannelGeometry &geometry)
    {
        ScenarioConfig c;
        c.n_antennas = p.n_antennas;
        c.power = p.power;
        c.noise_i = p.noise_i;
        c.noise_e = p.noise_e;
        c.sinr_floor_db = p.sinr_floor_db;
        c.min_dist = p.min_dist;
        c.tx_region = p.tx_region;
        c.rx_region = p.rx_region;
        c.epsilon = p.epsilon;
        c.geometry = geometry;
        return c;
    }

} // namespace faswipt
