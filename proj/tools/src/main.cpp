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
#include "faswipt/driver.hpp"
#include "faswipt/experiment.hpp"
#include "faswipt/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace
{

    constexpr int exit_ok = 0;
    constexpr int exit_config_error = 2;
    constexpr int exit_infeasible = 3;

    faswipt::ScenarioParams load_params(const std::string &config_path)
    {
        if (config_path.empty())
            return faswipt::ScenarioParams{};
        std::ifstream in(config_path);
        if (!in)
            throw faswipt::ConfigError("cannot open config file '" + config_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return faswipt::parse_scenario_json(buf.str());
    }

    std::vector<double> parse_value_list(const std::string &text)
    {
        std::vector<double> values;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            try
            {
                std::size_t used = 0;
                double v = std::stod(item, &used);
                while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                    ++used;
                if (used != item.size())
                    throw std::invalid_argument(item);
                values.push_back(v);
            }
            catch (const std::exception &)
            {
                throw faswipt::ConfigError("cannot parse value '" + item + "' in list '" + text +
                                           "'");
            }
        }
        if (values.empty())
            throw faswipt::ConfigError("empty value list '" + text + "'");
        return values;
    }

    std::vector<faswipt::BaselineKind> parse_kind_list(const std::string &text)
    {
        std::vector<faswipt::BaselineKind> kinds;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            kinds.push_back(faswipt::baseline_from_string(item));
        if (kinds.empty())
            throw faswipt::ConfigError("empty baseline list '" + text + "'");
        return kinds;
    }

    void write_file(const std::string &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw faswipt::ConfigError("cannot open output file '" + path + "'");
        out << content;
        if (!out)
            throw faswipt::ConfigError("failed writing output file '" + path + "'");
    }

    int cmd_run(const std::string &config_path, std::uint64_t seed, int restarts)
    {
        faswipt::ScenarioParams params = load_params(config_path);
        if (restarts < 1)
            throw faswipt::ConfigError("restarts must be at least 1");

        faswipt::ChannelGeometry geom =
            faswipt::generate_channel(seed, params.paths, params.paths, params.path_gain);
        faswipt::ScenarioConfig config = faswipt::make_config(params, geom);

        faswipt::RunOptions opts;
        opts.restarts = restarts;

        nlohmann::ordered_json doc;
        doc["config"] = nlohmann::ordered_json::parse(faswipt::scenario_json(params));
        doc["seed"] = seed;
        doc["restarts"] = restarts;

        try
        {
            faswipt::RunResult run = faswipt::solve_scenario(config, opts, seed);
            const faswipt::Solution &sol = run.solution;
            nlohmann::ordered_json out;
            out["harvested_w"] = sol.harvested_w;
            out["sinr_linear"] = sol.achieved_sinr;
            out["converged"] = sol.converged;
            out["outer_iterations"] = sol.outer_iterations;
            out["sinr_constraint_active"] = sol.sinr_constraint_active;
            out["restart_index"] = sol.restart_index;
            nlohmann::ordered_json tx = nlohmann::ordered_json::array();
            for (const auto &t : sol.layout.tx)
                tx.push_back({t.x, t.y});
            out["tx_positions"] = tx;
            out["rx_position"] = {sol.layout.rx.x, sol.layout.rx.y};
            doc["result"] = out;
            std::cout << doc.dump(2) << '\n';
            return exit_ok;
        }
        catch (const faswipt::InfeasibleScenarioError &e)
        {
            doc["error"] = "infeasible";
            doc["max_achievable_sinr"] = e.max_achievable;
            std::cout << doc.dump(2) << '\n';
            return exit_infeasible;
        }
    }

    nlohmann::ordered_json sweep_echo(const faswipt::ScenarioParams &params,
                                      const faswipt::SweepSpec &spec, const std::string &out_path)
    {
        nlohmann::ordered_json doc;
        doc["config"] = nlohmann::ordered_json::parse(faswipt::scenario_json(params));
        nlohmann::ordered_json sw;
        sw["variable"] = faswipt::to_string(spec.variable);
        sw["values"] = spec.values;
        sw["trials"] = spec.trials;
        nlohmann::ordered_json kinds = nlohmann::ordered_json::array();
        for (auto k : spec.baselines)
            kinds.push_back(faswipt::to_string(k));
        sw["baselines"] = kinds;
        sw["master_seed"] = spec.master_seed;
        sw["jobs"] = spec.jobs;
        doc["sweep"] = sw;
        doc["out"] = out_path;
        return doc;
    }

    int cmd_sweep(const std::string &config_path, const std::string &variable,
                  const std::string &values, int trials, std::uint64_t seed,
                  const std::string &out_path, int jobs, const std::string &kinds)
    {
        faswipt::ScenarioParams params = load_params(config_path);

        faswipt::SweepSpec spec;
        spec.variable = faswipt::sweep_variable_from_string(variable);
        spec.values = parse_value_list(values);
        spec.trials = trials;
        spec.baselines = parse_kind_list(kinds);
        spec.master_seed = seed;
        spec.jobs = jobs;

        std::vector<faswipt::SweepRow> rows = faswipt::run_sweep(spec, params);

        std::ostringstream csv;
        faswipt::write_sweep_csv(csv, spec, rows);
        write_file(out_path, csv.str());

        std::cout << sweep_echo(params, spec, out_path).dump(2) << '\n';

        bool any_feasible = false;
        for (const auto &row : rows)
            any_feasible = any_feasible || row.result.feasible;
        return any_feasible ? exit_ok : exit_infeasible;
    }

    int cmd_baseline(const std::string &config_path, const std::string &kinds_text, int trials,
                     std::uint64_t seed, const std::string &out_path, int jobs)
    {
        faswipt::ScenarioParams params = load_params(config_path);
        std::vector<faswipt::BaselineKind> kinds = parse_kind_list(kinds_text);
        if (trials < 1)
            throw faswipt::ConfigError("baseline needs at least one trial");
        if (jobs < 1)
            throw faswipt::ConfigError("baseline needs at least one worker");

        struct Task
        {
            std::size_t index;
            faswipt::BaselineKind kind;
            int trial;
        };
        std::vector<Task> tasks;
        for (faswipt::BaselineKind kind : kinds)
            for (int trial = 0; trial < trials; ++trial)
                tasks.push_back({tasks.size(), kind, trial});

        std::vector<faswipt::TrialResult> results(tasks.size());
        auto run_task = [&](const Task &task) {
            faswipt::ChannelGeometry geom =
                faswipt::generate_channel(faswipt::mix_seed(seed, task.trial), params.paths,
                                          params.paths, params.path_gain);
            faswipt::ScenarioConfig config = faswipt::make_config(params, geom);
            faswipt::TrialResult res =
                faswipt::run_baseline(task.kind, config, faswipt::mix_seed(seed, task.trial));
            res.trial = task.trial;
            results[task.index] = res;
        };

        const int workers_n = std::min<int>(jobs, static_cast<int>(tasks.size()));
        if (workers_n <= 1)
        {
            for (const Task &t : tasks)
                run_task(t);
        }
        else
        {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> workers;
            for (int w = 0; w < workers_n; ++w)
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

        auto fmt = [](double v) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return std::string(buf);
        };

        std::ostringstream csv;
        csv << "variable,value,baseline,trial,W_watts,sinr_linear,converged,outer_iters,wall_ms\n";
        std::size_t i = 0;
        for (faswipt::BaselineKind kind : kinds)
        {
            double sum = 0.0, sum_sq = 0.0;
            for (int trial = 0; trial < trials; ++trial, ++i)
            {
                const faswipt::TrialResult &r = results.at(i);
                csv << "none,0," << faswipt::to_string(kind) << ',' << r.trial << ','
                    << fmt(r.harvested_w) << ',' << fmt(r.sinr) << ',' << (r.converged ? 1 : 0)
                    << ',' << r.outer_iterations << ",\n";
                sum += r.harvested_w;
                sum_sq += r.harvested_w * r.harvested_w;
            }
            double mean = sum / double(trials);
            double stderr_w = 0.0;
            if (trials > 1)
            {
                double var_w =
                    std::max(0.0, (sum_sq - sum * sum / double(trials)) / double(trials - 1));
                stderr_w = std::sqrt(var_w / double(trials));
            }
            csv << "none,0," << faswipt::to_string(kind) << ",AGG," << fmt(mean) << ','
                << fmt(stderr_w) << ",,,\n";
        }
        write_file(out_path, csv.str());

        nlohmann::ordered_json doc;
        doc["config"] = nlohmann::ordered_json::parse(faswipt::scenario_json(params));
        nlohmann::ordered_json kinds_json = nlohmann::ordered_json::array();
        for (auto k : kinds)
            kinds_json.push_back(faswipt::to_string(k));
        doc["baselines"] = kinds_json;
        doc["trials"] = trials;
        doc["master_seed"] = seed;
        doc["jobs"] = jobs;
        doc["out"] = out_path;
        std::cout << doc.dump(2) << '\n';

        bool any_feasible = false;
        for (const auto &r : results)
            any_feasible = any_feasible || r.feasible;
        return any_feasible ? exit_ok : exit_infeasible;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Fluid-antenna SWIPT scenario solver and experiment harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    int restarts = 1;
    auto *run = app.add_subcommand("run", "Solve one scenario and print the result as JSON");
    run->add_option("--config", config_path, "Scenario config JSON file");
    run->add_option("--seed", seed, "Channel and restart seed");
    run->add_option("--restarts", restarts, "Number of multi-start attempts");

    std::string sw_config, sw_variable, sw_values, sw_out;
    std::string sw_kinds = "fas,tfa,fpa";
    int sw_trials = 1, sw_jobs = 1;
    std::uint64_t sw_seed = 0;
    auto *sweep = app.add_subcommand("sweep", "Sweep one scenario parameter and write a CSV");
    sweep->add_option("--config", sw_config, "Scenario config JSON file");
    sweep->add_option("--variable", sw_variable, "Swept parameter: region, power or paths")
        ->required();
    sweep->add_option("--values", sw_values, "Comma-separated values, strictly increasing")
        ->required();
    sweep->add_option("--trials", sw_trials, "Channel realizations per value");
    sweep->add_option("--seed", sw_seed, "Master seed for paired trials");
    sweep->add_option("--out", sw_out, "Output CSV path")->required();
    sweep->add_option("--jobs", sw_jobs, "Parallel worker threads");
    sweep->add_option("--kinds", sw_kinds, "Comma-separated baselines (fas,tfa,fpa)");

    std::string bl_config, bl_out;
    std::string bl_kinds = "fas,tfa,fpa";
    int bl_trials = 1, bl_jobs = 1;
    std::uint64_t bl_seed = 0;
    auto *baseline =
        app.add_subcommand("baseline", "Compare baselines on one scenario and write a CSV");
    baseline->add_option("--config", bl_config, "Scenario config JSON file");
    baseline->add_option("--kinds", bl_kinds, "Comma-separated baselines (fas,tfa,fpa)");
    baseline->add_option("--trials", bl_trials, "Channel realizations");
    baseline->add_option("--seed", bl_seed, "Master seed for paired trials");
    baseline->add_option("--out", bl_out, "Output CSV path")->required();
    baseline->add_option("--jobs", bl_jobs, "Parallel worker threads");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        app.exit(e);
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config_error;
    }

    try
    {
        if (run->parsed())
            return cmd_run(config_path, seed, restarts);
        if (sweep->parsed())
            return cmd_sweep(sw_config, sw_variable, sw_values, sw_trials, sw_seed, sw_out,
                             sw_jobs, sw_kinds);
        if (baseline->parsed())
            return cmd_baseline(bl_config, bl_kinds, bl_trials, bl_seed, bl_out, bl_jobs);
    }
    catch (const faswipt::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_config_error;
}
