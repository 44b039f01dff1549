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

#include "faswipt/experiment.hpp"

#include "faswipt/channel.hpp"
#include "faswipt/rng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace faswipt
{

    static constexpr double pi = 3.1415926535897932384626433832795;

    ChannelGeometry generate_channel(std::uint64_t seed, int n_tx_paths, int n_rx_paths,
                                     double path_gain)
    {
        if (n_tx_paths < 1 || n_rx_paths < 1)
            throw std::invalid_argument("generate_channel: path counts must be at least 1");
        if (n_tx_paths != n_rx_paths)
            throw std::invalid_argument("generate_channel: diagonal path coupling requires equal "
                                        "transmit and receive path counts");
        if (!(path_gain > 0.0))
            throw std::invalid_argument("generate_channel: path gain must be positive");

        Rng rng(seed);
        auto draw_angles = [&](int count) {
            std::vector<PathAngles> a(count);
            for (auto &p : a)
            {
                p.theta = rng.uniform(0.0, pi);
                p.phi = rng.uniform(0.0, pi);
            }
            return a;
        };

        ChannelGeometry g;
        g.lambda = 1.0;
        g.tx_angles = draw_angles(n_tx_paths);
        g.er_angles = draw_angles(n_rx_paths);
        g.ir_angles = draw_angles(n_rx_paths);

        const double var = path_gain / double(n_tx_paths);
        g.sigma_e = arma::cx_mat(n_rx_paths, n_tx_paths, arma::fill::zeros);
        g.sigma_i = arma::cx_mat(n_rx_paths, n_tx_paths, arma::fill::zeros);
        for (int q = 0; q < n_tx_paths; ++q)
            g.sigma_e(q, q) = rng.complex_normal(var);
        for (int q = 0; q < n_tx_paths; ++q)
            g.sigma_i(q, q) = rng.complex_normal(var);

        g.ir_position = {0.0, 0.0};
        return g;
    }

    AntennaLayout fpa_layout(const ScenarioConfig &config)
    {
        AntennaLayout layout;
        const Position c = config.tx_region.center();
        const double spacing = 0.5 * config.geometry.lambda;
        const int n = config.n_antennas;
        layout.tx.reserve(n);
        for (int i = 0; i < n; ++i)
            layout.tx.push_back({c.x + (double(i) - 0.5 * double(n - 1)) * spacing, c.y});
        layout.rx = config.rx_region.center();
        return layout;
    }

    std::string to_string(BaselineKind kind)
    {
        switch (kind)
        {
        case BaselineKind::FAS:
            return "fas";
        case BaselineKind::TFA:
            return "tfa";
        case BaselineKind::FPA:
            return "fpa";
        }
        return "?";
    }

    BaselineKind baseline_from_string(const std::string &name)
    {
        if (name == "fas")
            return BaselineKind::FAS;
        if (name == "tfa")
            return BaselineKind::TFA;
        if (name == "fpa")
            return BaselineKind::FPA;
        throw ConfigError("unknown baseline '" + name + "' (expected fas, tfa or fpa)");
    }

    std::string to_string(SweepVariable v)
    {
        switch (v)
        {
        case SweepVariable::RegionSize:
            return "region";
        case SweepVariable::Power:
            return "power";
        case SweepVariable::Paths:
            return "paths";
        }
        return "?";
    }

    SweepVariable sweep_variable_from_string(const std::string &name)
    {
        if (name == "region")
            return SweepVariable::RegionSize;
        if (name == "power")
            return SweepVariable::Power;
        if (name == "paths")
            return SweepVariable::Paths;
        throw ConfigError("unknown sweep variable '" + name + "' (expected region, power or paths)");
    }

    TrialResult run_baseline(BaselineKind kind, const ScenarioConfig &config, std::uint64_t seed)
    {
        RunOptions opts;
        switch (kind)
        {
        case BaselineKind::FAS:
            break;
        case BaselineKind::TFA:
            opts.move_rx = false; // receive antenna pinned at the region center
            break;
        case BaselineKind::FPA:
            opts.move_rx = false;
            opts.move_tx = false;
            opts.initial_layout = fpa_layout(config);
            opts.validate_regions = false; // the reference array may be wider than the region
            break;
        }

        TrialResult res;
        res.baseline = kind;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            RunResult run = solve_scenario(config, opts, seed);
            res.harvested_w = run.solution.harvested_w;
            res.sinr = run.solution.achieved_sinr;
            res.converged = run.solution.converged;
            res.outer_iterations = run.solution.outer_iterations;
        }
        catch (const InfeasibleScenarioError &)
        {
            res.feasible = false;
        }
        res.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }

    static ScenarioParams apply_value(const SweepSpec &spec, const ScenarioParams &base,
                                      double value)
    {
        ScenarioParams p = base;
        switch (spec.variable)
        {
        case SweepVariable::RegionSize:
            p.tx_region = square_region(value);
            p.rx_region = square_region(value);
            break;
        case SweepVariable::Power:
            p.power = value;
            break;
        case SweepVariable::Paths:
            p.paths = int(value);
            break;
        }
        return p;
    }

    static void validate_sweep(const SweepSpec &spec)
    {
        if (spec.values.empty())
            throw ConfigError("sweep needs at least one value");
        for (std::size_t i = 1; i < spec.values.size(); ++i)
            if (!(spec.values[i] > spec.values[i - 1]))
                throw ConfigError("sweep values must be strictly increasing");
        if (spec.trials < 1)
            throw ConfigError("sweep needs at least one trial");
        if (spec.baselines.empty())
            throw ConfigError("sweep needs at least one baseline");
        if (spec.jobs < 1)
            throw ConfigError("sweep needs at least one worker");
        if (spec.variable == SweepVariable::Paths)
            for (double v : spec.values)
                if (v < 1.0 || v != std::floor(v))
                    throw ConfigError("path counts must be positive integers");
        if (spec.variable == SweepVariable::Power)
            for (double v : spec.values)
                if (!(v > 0.0))
                    throw ConfigError("power values must be positive");
        if (spec.variable == SweepVariable::RegionSize)
            for (double v : spec.values)
                if (!(v > 0.0))
                    throw ConfigError("region sizes must be positive");
    }

    std::vector<SweepRow> run_sweep(const SweepSpec &spec, const ScenarioParams &base)
    {
        validate_sweep(spec);

        struct Task
        {
            std::size_t row_index;
            double value;
            BaselineKind baseline;
            int trial;
        };
        std::vector<Task> tasks;
        tasks.reserve(spec.values.size() * spec.baselines.size() * std::size_t(spec.trials));
        for (double value : spec.values)
            for (BaselineKind baseline : spec.baselines)
                for (int trial = 0; trial < spec.trials; ++trial)
                    tasks.push_back({tasks.size(), value, baseline, trial});

        std::vector<SweepRow> rows(tasks.size());

        auto run_task = [&](const Task &task) {
            ScenarioParams params = apply_value(spec, base, task.value);
            // Trials are paired: the channel seed depends only on the master
            // seed and the trial index
            ChannelGeometry geom = generate_channel(mix_seed(spec.master_seed, task.trial),
                                                    params.paths, params.paths, params.path_gain);
            ScenarioConfig config = make_config(params, geom);
            TrialResult res =
                run_baseline(task.baseline, config, mix_seed(spec.master_seed, task.trial));
            res.trial = task.trial;
            rows[task.row_index] = SweepRow{task.value, res};
        };

        const int jobs = std::min<int>(spec.jobs, int(tasks.size()));
        if (jobs <= 1)
        {
            for (const Task &t : tasks)
                run_task(t);
        }
        else
        {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> workers;
            workers.reserve(jobs);
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back([&] {
                    for (;;)
                    {
                        std::size_t i = next.fetch_add(1);
                        if (i >= tasks.size())
                            return;
                        run_task(tasks[i]);
                    }
                });
            for (auto &w : workers)
                w.join();
        }
        return rows;
    }

    static std::string fmt(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    void write_sweep_csv(std::ostream &os, const SweepSpec &spec,
                         const std::vector<SweepRow> &rows)
    {
        os << "variable,value,baseline,trial,W_watts,sinr_linear,converged,outer_iters,wall_ms\n";

        const std::string var = to_string(spec.variable);
        std::size_t i = 0;
        for (double value : spec.values)
        {
            for (BaselineKind baseline : spec.baselines)
            {
                double sum = 0.0, sum_sq = 0.0;
                int n = 0;
                for (int trial = 0; trial < spec.trials; ++trial, ++i)
                {
                    const TrialResult &r = rows.at(i).result;
                    os << var << ',' << fmt(value) << ',' << to_string(baseline) << ',' << r.trial
                       << ',' << fmt(r.harvested_w) << ',' << fmt(r.sinr) << ','
                       << (r.converged ? 1 : 0) << ',' << r.outer_iterations << ",\n";
                    sum += r.harvested_w;
                    sum_sq += r.harvested_w * r.harvested_w;
                    ++n;
                }
                double mean = sum / double(n);
                double stderr_w = 0.0;
                if (n > 1)
                {
                    double var_w = std::max(0.0, (sum_sq - sum * sum / double(n)) / double(n - 1));
                    stderr_w = std::sqrt(var_w / double(n));
                }
                os << var << ',' << fmt(value) << ',' << to_string(baseline) << ",AGG,"
                   << fmt(mean) << ',' << fmt(stderr_w) << ",,,\n";
            }
        }
    }

} // namespace faswipt
