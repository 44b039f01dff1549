// SPDX-License-Identifier: Apache-2.0
//
// Shared builders for randomized test fixtures.

#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <faswipt/channel.hpp>
#include <faswipt/rng.hpp>
#include <faswipt/types.hpp>

#include <armadillo>
#include <cmath>
#include <vector>

namespace testutil {

inline constexpr double pi = 3.14159265358979323846;

// Angles drawn uniformly over the upper half-space, matching the
// distribution used by the experiment channel generator.
inline std::vector<faswipt::PathAngles> random_angles(faswipt::Rng &rng, int count) {
    std::vector<faswipt::PathAngles> a(static_cast<std::size_t>(count));
    for (auto &p : a) {
        p.theta = rng.uniform(0.0, pi);
        p.phi = rng.uniform(0.0, pi);
    }
    return a;
}

inline arma::cx_mat random_cx_mat(faswipt::Rng &rng, int rows, int cols, double var = 1.0) {
    arma::cx_mat m(static_cast<arma::uword>(rows), static_cast<arma::uword>(cols));
    for (arma::uword j = 0; j < m.n_cols; ++j)
        for (arma::uword i = 0; i < m.n_rows; ++i)
            m(i, j) = rng.complex_normal(var);
    return m;
}

inline arma::cx_rowvec random_cx_row(faswipt::Rng &rng, int n, double var = 1.0) {
    arma::cx_rowvec v(static_cast<arma::uword>(n));
    for (auto &x : v) x = rng.complex_normal(var);
    return v;
}

// Random Hermitian PSD matrix rescaled to the requested trace.
inline arma::cx_mat random_psd(faswipt::Rng &rng, int n, double trace_target) {
    arma::cx_mat x = random_cx_mat(rng, n, n);
    arma::cx_mat q = x * x.t();
    q = 0.5 * (q + q.t());
    double tr = arma::trace(q).real();
    return q * (trace_target / tr);
}

// Full (non-diagonal) scattering geometry with unit wavelength.
inline faswipt::ChannelGeometry random_geometry(std::uint64_t seed, int tx_paths,
                                                int rx_paths) {
    faswipt::Rng rng(seed);
    faswipt::ChannelGeometry g;
    g.lambda = 1.0;
    g.tx_angles = random_angles(rng, tx_paths);
    g.er_angles = random_angles(rng, rx_paths);
    g.ir_angles = random_angles(rng, rx_paths);
    g.sigma_e = random_cx_mat(rng, rx_paths, tx_paths, 1.0 / tx_paths);
    g.sigma_i = random_cx_mat(rng, rx_paths, tx_paths, 1.0 / tx_paths);
    g.ir_position = {0.0, 0.0};
    return g;
}

inline std::vector<faswipt::Position> random_positions(faswipt::Rng &rng, int count,
                                                       const faswipt::Region &region) {
    std::vector<faswipt::Position> out(static_cast<std::size_t>(count));
    for (auto &p : out) {
        p.x = rng.uniform(region.x_min, region.x_max);
        p.y = rng.uniform(region.y_min, region.y_max);
    }
    return out;
}

} // namespace testutil

#endif
