// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths of the fluid-antenna SWIPT optimizer, at
// the default experiment scale (4 transmit antennas, 14 paths per side).

#include <faswipt/channel.hpp>
#include <faswipt/covariance.hpp>
#include <faswipt/driver.hpp>
#include <faswipt/experiment.hpp>
#include <faswipt/rng.hpp>
#include <faswipt/rx_position.hpp>
#include <faswipt/tx_position.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace faswipt;

struct Instance {
    ChannelGeometry geom;
    AntennaLayout layout;
    arma::cx_rowvec h_e;
    arma::cx_rowvec h_i;
    arma::cx_mat q;
    arma::cx_mat rx_kernel;
    ScenarioConfig config;
};

const Instance &instance() {
    static const Instance inst = [] {
        Instance s;
        s.geom = generate_channel(1, 14, 14);
        ScenarioParams params;
        s.config = make_config(params, s.geom);
        s.layout = init_layout(s.config, 1);
        s.h_e = er_channel(s.layout, s.geom);
        s.h_i = ir_channel(s.layout.tx, s.geom);
        s.q = solve_covariance(s.h_e, s.h_i, params.power,
                               s.config.sinr_floor_linear(), params.noise_i)
                  .Q;
        s.rx_kernel = rx_harvest_kernel(s.layout.tx, s.q, s.geom);
        return s;
    }();
    return inst;
}

void channel_evaluation(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        arma::cx_rowvec h = er_channel(s.layout, s.geom);
        benchmark::DoNotOptimize(h.memptr());
    }
}
BENCHMARK(channel_evaluation);

void covariance_solve(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        QSolution sol = solve_covariance(s.h_e, s.h_i, 20.0,
                                         s.config.sinr_floor_linear(), 1.0);
        benchmark::DoNotOptimize(sol.harvested_w);
    }
}
BENCHMARK(covariance_solve);

void covariance_grid_oracle(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        double w = rank1_grid_search(s.h_e, s.h_i, 20.0, s.config.sinr_floor_linear(),
                                     1.0, 180);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(covariance_grid_oracle);

void receive_kernel_build(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        arma::cx_mat k = rx_harvest_kernel(s.layout.tx, s.q, s.geom);
        benchmark::DoNotOptimize(k.memptr());
    }
}
BENCHMARK(receive_kernel_build);

void receive_ascent(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        RxOptimizeResult res =
            optimize_rx(s.layout.rx, s.rx_kernel, s.geom, s.config.rx_region);
        benchmark::DoNotOptimize(res.r.x);
    }
}
BENCHMARK(receive_ascent);

void transmit_antenna_step(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        TxOptimizeResult res = optimize_tx_antenna(
            0, s.layout, s.geom, s.config.tx_region, s.config.min_dist,
            s.config.sinr_floor_linear(), s.config.noise_i, s.config.power);
        benchmark::DoNotOptimize(res.t.x);
    }
}
BENCHMARK(transmit_antenna_step);

void full_scenario(benchmark::State &state) {
    const Instance &s = instance();
    for (auto _ : state) {
        RunResult res = solve_scenario(s.config, {}, 1);
        benchmark::DoNotOptimize(res.solution.harvested_w);
    }
}
BENCHMARK(full_scenario)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
