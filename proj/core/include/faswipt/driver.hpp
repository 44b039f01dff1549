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

#ifndef faswipt_driver_H
#define faswipt_driver_H

#include "covariance.hpp"
#include "rx_position.hpp"
#include "tx_position.hpp"
#include "types.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace faswipt
{

    // Alternating optimization of the transmit covariance, the energy-receiver
    // position, and each transmit antenna position in turn, with a safeguard
    // that keeps the harvested power non-decreasing across outer iterations.

    struct ScenarioConfig
    {
        int n_antennas = 4;
        double power = 20.0;         // transmit power budget, watts
        double noise_i = 1.0;        // information-receiver noise power, watts
        double noise_e = 1.0;        // energy-receiver noise power (carried; the optimizer never uses it)
        double sinr_floor_db = 1.0;  // SINR floor at the information receiver, dB
        double min_dist = 0.5;       // minimum pairwise transmit antenna spacing, wavelengths
        Region tx_region = square_region(3.0);
        Region rx_region = square_region(3.0);
        double epsilon = 1e-4;       // relative harvested-power improvement that counts as converged
        ChannelGeometry geometry;

        double sinr_floor_linear() const { return std::pow(10.0, sinr_floor_db / 10.0); }
    };

    struct RunOptions
    {
        int max_outer = 50;
        int restarts = 1;            // independent starts; the best harvested power wins
        InnerOptions inner{};
        bool move_rx = true;         // clear to pin the energy receiver at its start position
        bool move_tx = true;         // clear to pin the transmit antennas
        bool validate_regions = true; // clear for reference layouts that ignore the regions
        std::optional<AntennaLayout> initial_layout; // overrides the grid start of the first restart
    };

    struct Solution
    {
        AntennaLayout layout;
        arma::cx_mat Q;
        double harvested_w = 0.0;
        double achieved_sinr = 0.0;
        bool converged = false;
        int outer_iterations = 0;
        bool sinr_constraint_active = false;
        int restart_index = 0;
    };

    struct OuterRecord
    {
        double w_after_q = 0.0;               // harvested power right after the covariance solve
        std::optional<double> w_after_rx;     // same covariance, after the receive reposition
        std::vector<double> w_after_tx;       // same covariance, after each antenna reposition
        std::vector<bool> tx_skipped;         // per-antenna surrogate-floor skip flags
        bool reverted = false;                // safeguard rejected this iteration's position updates
        double wall_ms = 0.0;
    };

    struct RunTrace
    {
        std::vector<OuterRecord> outer;
        double wall_ms = 0.0;
    };

    struct RunResult
    {
        Solution solution;
        RunTrace trace;
    };

    // Raised when the start layout cannot meet the SINR floor at any power
    // allocation; carries the largest SINR the layout could have delivered.
    class InfeasibleScenarioError : public std::runtime_error
    {
      public:
        explicit InfeasibleScenarioError(double max_sinr)
            : std::runtime_error("initial layout cannot meet the SINR floor"),
              max_achievable(max_sinr)
        {
        }
        double max_achievable;
    };

    // Start layout: transmit antennas on a centered square grid with spacing
    // max(min_dist, side/ceil(sqrt(N))) capped to fit the region, receive
    // antenna at the receive-region center. Seed 0 returns the exact grid; any
    // other seed applies a deterministic spacing-preserving jitter so repeated
    // restarts explore different starts. Throws std::invalid_argument when the
    // region cannot hold N antennas at the required spacing.
    AntennaLayout init_layout(const ScenarioConfig &config, std::uint64_t seed);

    // Harvested power and information-receiver SINR of a (layout, Q) pair
    std::pair<double, double> evaluate(const AntennaLayout &layout, const arma::cx_mat &Q,
                                       const ScenarioConfig &config);

    // Full alternating optimization. Identical (config, opts, seed) triples
    // produce bit-identical results. Throws InfeasibleScenarioError when every
    // restart is infeasible at its first covariance solve.
    RunResult solve_scenario(const ScenarioConfig &config, const RunOptions &opts,
                             std::uint64_t seed);

    // Constraint audit of a finished solution, at the tolerances used across
    // the test suite
    struct FeasibilityReport
    {
        bool tx_in_region = false;
        bool rx_in_region = false;
        bool spacing_ok = false;
        bool trace_ok = false;
        bool psd_ok = false;
        bool sinr_ok = false;
        double min_spacing = 0.0;
        double trace_value = 0.0;
        double min_eigenvalue = 0.0;
        double sinr_value = 0.0;

        bool all() const
        {
            return tx_in_region && rx_in_region && spacing_ok && trace_ok && psd_ok && sinr_ok;
        }
    };

    FeasibilityReport audit_solution(const Solution &sol, const ScenarioConfig &config);

} // namespace faswipt

#endif
