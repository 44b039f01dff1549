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

#ifndef faswipt_covariance_H
#define faswipt_covariance_H

#include "types.hpp"

namespace faswipt
{

    // Transmit covariance subproblem for fixed antenna positions: maximize the
    // power harvested from channel h_e subject to a floor on the SNR seen
    // through channel h_i, a transmit power budget, and Q being Hermitian PSD.
    //
    // An optimal Q may always be taken rank one with full power on a unit
    // beamformer inside span{h_e^H, h_i^H} (extreme-point argument for an SDP
    // with two scalar constraints), which reduces the problem to two complex
    // coefficients and admits a closed-form solution.

    enum class SolveStatus
    {
        Optimal,
        Infeasible
    };

    struct QSolution
    {
        arma::cx_mat Q;              // transmit covariance, N x N Hermitian PSD
        double harvested_w = 0.0;    // h_e * Q * h_e^H
        double achieved_sinr = 0.0;  // h_i * Q * h_i^H / noise_power
        SolveStatus status = SolveStatus::Infeasible;
        bool sinr_constraint_active = false; // true if the floor binds at the optimum
    };

    // Largest SNR any covariance with trace <= power can deliver through h_i:
    // power * ||h_i||^2 / noise_power
    double max_achievable_sinr(const arma::cx_rowvec &h_i, double power, double noise_power);

    // Orthonormal basis (N x k, k <= 2) of span{h_e^H, h_i^H}; the first column
    // is always h_e^H / ||h_e||, so k == 1 when the channels are parallel or
    // h_i == 0. Throws std::invalid_argument if h_e == 0.
    arma::cx_mat reduce_basis(const arma::cx_rowvec &h_e, const arma::cx_rowvec &h_i);

    // Closed-form solve of the covariance subproblem. Returns status Infeasible
    // (not an exception) when even full-power beamforming at h_i cannot meet
    // sinr_floor. When h_e == 0 the harvested power is identically zero and a
    // feasible covariance aimed at h_i is returned.
    QSolution solve_covariance(const arma::cx_rowvec &h_e, const arma::cx_rowvec &h_i,
                               double power, double sinr_floor, double noise_power);

    // Independent brute-force reference: sweeps unit beamformers
    //   w = cos(a) u1 + sin(a) e^{j psi} u2
    // over an (a, psi) grid in the reduced span and returns the best feasible
    // harvested power at full transmit power. Throws std::runtime_error when no
    // grid point is feasible (too coarse a grid, or a genuinely infeasible
    // instance).
    double rank1_grid_search(const arma::cx_rowvec &h_e, const arma::cx_rowvec &h_i,
                             double power, double sinr_floor, double noise_power,
                             int grid_density);

} // namespace faswipt

#endif
