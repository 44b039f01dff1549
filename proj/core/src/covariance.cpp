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

#include "faswipt/covariance.hpp"

#include "faswipt/channel.hpp"

#include <stdexcept>

namespace faswipt
{

    double max_achievable_sinr(const arma::cx_rowvec &h_i, double power, double noise_power)
    {
        if (!(power >= 0.0))
            throw std::invalid_argument("max_achievable_sinr: power must be non-negative");
        if (!(noise_power > 0.0))
            throw std::invalid_argument("max_achievable_sinr: noise power must be positive");
        return power * std::real(arma::as_scalar(h_i * h_i.t())) / noise_power;
    }

    arma::cx_mat reduce_basis(const arma::cx_rowvec &h_e, const arma::cx_rowvec &h_i)
    {
        if (h_e.n_elem != h_i.n_elem || h_e.n_elem == 0)
            throw std::invalid_argument("reduce_basis: channel length mismatch");

        arma::cx_vec he = h_e.t(); // h_e^H as a column
        double ne = arma::norm(he);
        if (ne == 0.0)
            throw std::invalid_argument("reduce_basis: energy channel is zero");

        arma::cx_vec u1 = he / ne;

        arma::cx_vec hi = h_i.t();
        double ni = arma::norm(hi);
        arma::cx_vec resid = hi - u1 * arma::cdot(u1, hi);
        double nr = arma::norm(resid);

        if (ni == 0.0 || nr <= 1e-12 * ni)
            return arma::cx_mat(u1);

        arma::cx_mat U(h_e.n_elem, 2);
        U.col(0) = u1;
        U.col(1) = resid / nr;
        return U;
    }

    // Assemble the full-power rank-one covariance P w w^H and evaluate it
    static QSolution make_solution(const arma::cx_vec &w, const arma::cx_rowvec &h_e,
                                   const arma::cx_rowvec &h_i, double power,
                                   double noise_power, bool active)
    {
        QSolution sol;
        arma::cx_mat outer = w * w.t();
        sol.Q = power * 0.5 * (outer + outer.t()); // force exact Hermitian symmetry
        sol.harvested_w = harvested_power(h_e, sol.Q);
        sol.achieved_sinr = sinr(h_i, sol.Q, noise_power);
        sol.status = SolveStatus::Optimal;
        sol.sinr_constraint_active = active;
        return sol;
    }

    QSolution solve_covariance(const arma::cx_rowvec &h_e, const arma::cx_rowvec &h_i,
                               double power, double sinr_floor, double noise_power)
    {
        if (h_e.n_elem != h_i.n_elem || h_e.n_elem == 0)
            throw std::invalid_argument("solve_covariance: channel length mismatch");
        if (!(power > 0.0))
            throw std::invalid_argument("solve_covariance: power budget must be positive");
        if (!(noise_power > 0.0))
            throw std::invalid_argument("solve_covariance: noise power must be positive");
        if (!(sinr_floor >= 0.0))
            throw std::invalid_argument("solve_covariance: SINR floor must be non-negative");

        const arma::uword n = h_e.n_elem;
        const double ni_sq = std::real(arma::as_scalar(h_i * h_i.t()));
        const double target = sinr_floor * noise_power / power; // required |h_i w|^2

        QSolution infeasible;
        infeasible.Q = arma::cx_mat(n, n, arma::fill::zeros);
        infeasible.status = SolveStatus::Infeasible;

        if (ni_sq < target)
            return infeasible; // even full-power beamforming at h_i falls short

        const double ne = arma::norm(h_e);
        if (ne == 0.0)
        {
            // Nothing to harvest; return a feasible covariance aimed at h_i,
            // scaled to just meet the floor (zero when the floor is zero).
            QSolution sol;
            sol.Q = arma::cx_mat(n, n, arma::fill::zeros);
            if (sinr_floor > 0.0)
            {
                arma::cx_vec u = h_i.t() / std::sqrt(ni_sq);
                double p = std::min(power, sinr_floor * noise_power / ni_sq);
                arma::cx_mat outer = u * u.t();
                sol.Q = p * 0.5 * (outer + outer.t());
            }
            sol.harvested_w = 0.0;
            sol.achieved_sinr = sinr(h_i, sol.Q, noise_power);
            sol.status = SolveStatus::Optimal;
            sol.sinr_constraint_active = sinr_floor > 0.0;
            return sol;
        }

        arma::cx_mat U = reduce_basis(h_e, h_i);
        arma::cx_vec u1 = U.col(0);

        // Projections of h_i^H onto the basis; i2 is real non-negative by
        // construction of the second basis vector.
        std::complex<double> i1 = arma::cdot(u1, arma::cx_vec(h_i.t()));
        double i2 = (U.n_cols == 2) ? std::real(arma::cdot(U.col(1), arma::cx_vec(h_i.t()))) : 0.0;

        // Full-power beamforming straight at h_e: optimal whenever it already
        // meets the floor.
        if (std::norm(i1) >= target)
            return make_solution(u1, h_e, h_i, power, noise_power, false);

        if (U.n_cols == 1)
            return infeasible; // parallel channels and the aligned beam falls short

        // The floor binds. Parametrize w = cos(a) u1 + sin(a) e^{j psi} u2 and
        // pick the phase that lines the two contributions up, leaving
        //   |h_i w| = |i1| cos(a) + i2 sin(a) = R sin(a + phi0),
        // then take the smallest angle that reaches sqrt(target).
        const double m1 = std::abs(i1);
        const double r = std::sqrt(m1 * m1 + i2 * i2);
        const double phi0 = std::atan2(m1, i2);
        double ratio = std::min(std::sqrt(target) / r, 1.0);
        double alpha = std::asin(ratio) - phi0;

        // Tiny nudge keeps the floor satisfied under floating-point rounding;
        // the harvested-power cost is O(1e-9) relative.
        alpha = std::clamp(alpha + 1e-9, 0.0, 1.5707963267948966);

        const double psi = -std::arg(i1);
        arma::cx_vec w = std::cos(alpha) * u1 +
                         std::sin(alpha) * std::polar(1.0, psi) * arma::cx_vec(U.col(1));
        return make_solution(w, h_e, h_i, power, noise_power, true);
    }

    double rank1_grid_search(const arma::cx_rowvec &h_e, const arma::cx_rowvec &h_i,
                             double power, double sinr_floor, double noise_power,
                             int grid_density)
    {
        if (grid_density < 2)
            throw std::invalid_argument("rank1_grid_search: grid density must be at least 2");
        if (!(power > 0.0) || !(noise_power > 0.0))
            throw std::invalid_argument("rank1_grid_search: power and noise must be positive");

        arma::cx_mat U = reduce_basis(h_e, h_i); // throws on h_e == 0
        const double target = sinr_floor * noise_power / power;

        std::complex<double> e1 = arma::cdot(arma::cx_vec(U.col(0)), arma::cx_vec(h_e.t()));
        std::complex<double> i1 = arma::cdot(arma::cx_vec(U.col(0)), arma::cx_vec(h_i.t()));

        if (U.n_cols == 1)
        {
            // Degenerate span: a single direction to sweep
            if (std::norm(i1) >= target)
                return power * std::norm(e1);
            throw std::runtime_error("rank1_grid_search: no feasible grid point");
        }

        std::complex<double> e2 = arma::cdot(arma::cx_vec(U.col(1)), arma::cx_vec(h_e.t()));
        std::complex<double> i2 = arma::cdot(arma::cx_vec(U.col(1)), arma::cx_vec(h_i.t()));

        const double half_pi = 1.5707963267948966;
        const double two_pi = 6.283185307179586476925286766559;
        double best = -1.0;

        for (int ia = 0; ia < grid_density; ++ia)
        {
            double a = half_pi * double(ia) / double(grid_density - 1);
            double ca = std::cos(a), sa = std::sin(a);
            for (int ip = 0; ip < grid_density; ++ip)
            {
                double psi = two_pi * double(ip) / double(grid_density);
                std::complex<double> ph = std::polar(1.0, psi);
                // h w for w = cos(a) u1 + sin(a) e^{j psi} u2 is the matching
                // combination of the per-direction projections
                double gain_i = std::norm(std::conj(i1) * ca + std::conj(i2) * ph * sa);
                if (gain_i < target)
                    continue;
                double gain_e = std::norm(std::conj(e1) * ca + std::conj(e2) * ph * sa);
                if (gain_e > best)
                    best = gain_e;
            }
        }

        if (best < 0.0)
            throw std::runtime_error("rank1_grid_search: no feasible grid point");
        return power * best;
    }

} // namespace faswipt
