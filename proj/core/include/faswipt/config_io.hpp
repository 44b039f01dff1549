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

#ifndef faswipt_config_io_H
#define faswipt_config_io_H

#include "driver.hpp"
#include "types.hpp"

#include <stdexcept>
#include <string>

namespace faswipt
{

    // Geometry-free scenario description, the unit a JSON config file maps
    // onto. The channel itself is drawn per trial from a seed and the path
    // count below.
    struct ScenarioParams
    {
        int n_antennas = 4;
        double power = 20.0;
        double noise_i = 1.0;
        double noise_e = 1.0;
        double sinr_floor_db = 1.0;
        double min_dist = 0.5;
        Region tx_region = square_region(3.0);
        Region rx_region = square_region(3.0);
        double epsilon = 1e-4;
        int paths = 14;        // per-side path count of generated channels
        double path_gain = 1.0; // average total path gain of generated channels
    };

    class ConfigError : public std::runtime_error
    {
      public:
        using std::runtime_error::runtime_error;
    };

    // Parse a JSON object whose keys mirror ScenarioParams (snake_case; the
    // regions are nested objects with x_min/x_max/y_min/y_max, and region_size
    // is accepted as a shorthand that sets both regions to [0, side]^2). Every
    // key is optional; unknown keys, wrong types, and out-of-range values throw
    // ConfigError.
    ScenarioParams parse_scenario_json(const std::string &text);

    // Effective configuration echo, suitable for logging next to results
    std::string scenario_json(const ScenarioParams &params);

    // Attach a drawn channel to the geometry-free parameters
    ScenarioConfig make_config(const ScenarioParams &params, const ChannelGeometry &geometry);

} // namespace faswipt

#endif
