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

#ifndef faswipt_experiment_H
#define faswipt_experiment_H

#include "config_io.hpp"
#include "driver.hpp"
#include "types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace faswipt
{

    // Monte-Carlo experiment harness: random channel realizations, the three
    // comparison pipelines, and parameter sweeps serialized as CSV.

    // Random channel realization: independent uniform [0, pi] angle draws for
    // the transmit side and each receive side, and diagonal path-response
    // matrices with circularly symmetric complex normal entries of variance
    // path_gain / n_paths (unit average total gain by default). The diagonal
    // coupling requires equal transmit and receive path counts. Deterministic
    // in the seed.
    ChannelGeometry generate_channel(std::uint64_t seed, int n_tx_paths, int n_rx_paths,
                                     double path_gain = 1.0);

    // Reference layout with no movement: transmit antennas on a uniform linear
    // array along x with half-wavelength spacing centered in the transmit
    // region, receive antenna at the receive-region center. The array is wider
    // than the region when the region side is below (N-1)/2 wavelengths; the
    // fixed-position pipeline deliberately ignores the region in that case.
    AntennaLayout fpa_layout(const ScenarioConfig &config);

    // Comparison pipelines: both ends movable, transmit side only, or all
    // antennas fixed (covariance optimization alone)
    enum class BaselineKind
    {
        FAS, // fluid antennas at both ends
        TFA, // transmit fluid antennas, receive antenna fixed
        FPA  // fixed-position antennas
    };

    std::string to_string(BaselineKind kind);
    BaselineKind baseline_from_string(const std::string &name); // throws ConfigError

    struct TrialResult
    {
        int trial = 0;
        BaselineKind baseline = BaselineKind::FAS;
        double harvested_w = 0.0;
        double sinr = 0.0;
        bool feasible = true; // false when the start layout cannot meet the floor
        bool converged = false;
        int outer_iterations = 0;
        double wall_ms = 0.0; // measured time; not serialized (CSV output is byte-reproducible)
    };

    // One pipeline on one already-generated channel. Infeasible scenarios are
    // recorded (feasible = false, zero harvested power), never thrown.
    TrialResult run_baseline(BaselineKind kind, const ScenarioConfig &config, std::uint64_t seed);

    // Swept scenario parameter: the square region side, the power budget, or
    // the per-side path count
    enum class SweepVariable
    {
        RegionSize,
        Power,
        Paths
    };

    std::string to_string(SweepVariable v);
    SweepVariable sweep_variable_from_string(const std::string &name); // throws ConfigError

    struct SweepSpec
    {
        SweepVariable variable = SweepVariable::RegionSize;
        std::vector<double> values;       // strictly increasing
        int trials = 1;
        std::vector<BaselineKind> baselines = {BaselineKind::FAS, BaselineKind::TFA,
                                               BaselineKind::FPA};
        std::uint64_t master_seed = 0;
        int jobs = 1; // worker threads; results are identical regardless
    };

    struct SweepRow
    {
        double value = 0.0;
        TrialResult result;
    };

    // All (value, baseline, trial) combinations of the sweep. Channels are
    // paired: trial i draws the same realization for every baseline and every
    // swept value, derived only from (master_seed, i). Rows come back ordered
    // by (value, baseline, trial) no matter how many workers ran them.
    std::vector<SweepRow> run_sweep(const SweepSpec &spec, const ScenarioParams &base);

    // CSV serialization: one row per trial plus one aggregate row (mean and
    // standard error of the harvested power) per (value, baseline) group.
    // Deterministic byte-for-byte for a given row set; the wall_ms column is
    // intentionally left empty.
    void write_sweep_csv(std::ostream &os, const SweepSpec &spec,
                         const std::vector<SweepRow> &rows);

} // namespace faswipt

#endif
