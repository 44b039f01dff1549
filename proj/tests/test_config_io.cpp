// SPDX-License-Identifier: Apache-2.0
//
// Tests for the JSON scenario format: defaults, shorthands, validation, and
// the round trip through the effective-configuration echo.

#include "helpers.hpp"

#include <faswipt/config_io.hpp>
#include <faswipt/experiment.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

using namespace faswipt;

namespace {

void require_same_region(const Region &a, const Region &b) {
    REQUIRE(a.x_min == b.x_min);
    REQUIRE(a.x_max == b.x_max);
    REQUIRE(a.y_min == b.y_min);
    REQUIRE(a.y_max == b.y_max);
}

void require_same_params(const ScenarioParams &a, const ScenarioParams &b) {
    REQUIRE(a.n_antennas == b.n_antennas);
    REQUIRE(a.power == b.power);
    REQUIRE(a.noise_i == b.noise_i);
    REQUIRE(a.noise_e == b.noise_e);
    REQUIRE(a.sinr_floor_db == b.sinr_floor_db);
    REQUIRE(a.min_dist == b.min_dist);
    require_same_region(a.tx_region, b.tx_region);
    require_same_region(a.rx_region, b.rx_region);
    REQUIRE(a.epsilon == b.epsilon);
    REQUIRE(a.paths == b.paths);
    REQUIRE(a.path_gain == b.path_gain);
}

} // namespace

TEST_CASE("an empty object yields the documented defaults", "[config_io]") {
    ScenarioParams p = parse_scenario_json("{}");
    require_same_params(p, ScenarioParams{});
    REQUIRE(p.n_antennas == 4);
    REQUIRE(p.power == 20.0);
    REQUIRE(p.sinr_floor_db == 1.0);
    REQUIRE(p.paths == 14);
    require_same_region(p.tx_region, square_region(3.0));
}

TEST_CASE("every key maps onto its field", "[config_io]") {
    ScenarioParams p = parse_scenario_json(R"({
        "n_antennas": 6,
        "power": 12.75,
        "noise_i": 0.5,
        "noise_e": 2.0,
        "sinr_floor_db": -3.5,
        "min_dist": 0.25,
        "tx_region": {"x_min": 1.0, "x_max": 4.0, "y_min": 0.0, "y_max": 2.0},
        "rx_region": {"x_min": -1.0, "x_max": 1.0, "y_min": -1.0, "y_max": 1.0},
        "epsilon": 1e-5,
        "paths": 7,
        "path_gain": 2.5
    })");
    REQUIRE(p.n_antennas == 6);
    REQUIRE(p.power == 12.75);
    REQUIRE(p.noise_i == 0.5);
    REQUIRE(p.noise_e == 2.0);
    REQUIRE(p.sinr_floor_db == -3.5);
    REQUIRE(p.min_dist == 0.25);
    require_same_region(p.tx_region, Region{1.0, 4.0, 0.0, 2.0});
    require_same_region(p.rx_region, Region{-1.0, 1.0, -1.0, 1.0});
    REQUIRE(p.epsilon == 1e-5);
    REQUIRE(p.paths == 7);
    REQUIRE(p.path_gain == 2.5);
}

TEST_CASE("region_size is a shorthand that explicit regions override", "[config_io]") {
    ScenarioParams p = parse_scenario_json(R"({"region_size": 2.5})");
    require_same_region(p.tx_region, square_region(2.5));
    require_same_region(p.rx_region, square_region(2.5));

    ScenarioParams q = parse_scenario_json(R"({
        "region_size": 2.5,
        "tx_region": {"x_min": 0.0, "x_max": 1.0, "y_min": 0.0, "y_max": 1.0}
    })");
    require_same_region(q.tx_region, Region{0.0, 1.0, 0.0, 1.0});
    require_same_region(q.rx_region, square_region(2.5));
}

TEST_CASE("unknown keys and wrong types are rejected", "[config_io]") {
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"antennas": 4})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"power": "high"})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"tx_region": 3.0})"), ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_json(R"({"tx_region": {"x_min": 0, "x_max": 1, "y_min": 0, "top": 1}})"),
        ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_json(R"({"rx_region": {"x_min": 0, "x_max": 1, "y_min": 0}})"),
        ConfigError); // y_max missing
}

TEST_CASE("out-of-range values are rejected", "[config_io]") {
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"n_antennas": 0})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"power": 0})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"power": -3})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"noise_i": 0})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"min_dist": -0.1})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"epsilon": 0})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"paths": 0})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"path_gain": 0})"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(R"({"region_size": 0})"), ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_json(R"({"tx_region": {"x_min": 2, "x_max": 2, "y_min": 0, "y_max": 1}})"),
        ConfigError);
}

TEST_CASE("non-object and malformed documents are rejected", "[config_io]") {
    REQUIRE_THROWS_AS(parse_scenario_json("not json"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json("[1, 2]"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json("42"), ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_json(""), ConfigError);
}

TEST_CASE("the configuration echo round-trips", "[config_io]") {
    ScenarioParams p;
    p.n_antennas = 5;
    p.power = 12.75;
    p.noise_i = 0.25;
    p.sinr_floor_db = -3.5;
    p.min_dist = 0.125;
    p.tx_region = Region{0.5, 3.5, -1.0, 2.0};
    p.rx_region = square_region(1.5);
    p.epsilon = 1e-5;
    p.paths = 9;
    p.path_gain = 0.5;

    ScenarioParams q = parse_scenario_json(scenario_json(p));
    require_same_params(p, q);

    require_same_params(ScenarioParams{}, parse_scenario_json(scenario_json(ScenarioParams{})));
}

TEST_CASE("attaching a channel preserves every scenario field", "[config_io]") {
    ScenarioParams p = parse_scenario_json(R"({"n_antennas": 3, "power": 8.5, "paths": 4})");
    ChannelGeometry geom = generate_channel(7, p.paths, p.paths, p.path_gain);
    ScenarioConfig c = make_config(p, geom);
    REQUIRE(c.n_antennas == 3);
    REQUIRE(c.power == 8.5);
    REQUIRE(c.noise_i == p.noise_i);
    REQUIRE(c.noise_e == p.noise_e);
    REQUIRE(c.sinr_floor_db == p.sinr_floor_db);
    REQUIRE(c.min_dist == p.min_dist);
    require_same_region(c.tx_region, p.tx_region);
    require_same_region(c.rx_region, p.rx_region);
    REQUIRE(c.epsilon == p.epsilon);
    REQUIRE(c.geometry.tx_angles.size() == 4);
    REQUIRE(arma::abs(c.geometry.sigma_e - geom.sigma_e).max() == 0.0);
    REQUIRE(c.sinr_floor_linear() == Catch::Approx(std::pow(10.0, 0.1)).epsilon(1e-12));
}
