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

#ifndef faswipt_channel_H
#define faswipt_channel_H

#include "types.hpp"

namespace faswipt
{

    // Path length difference seen by a path with angles `a` when the antenna
    // sits at planar offset `p`:  p.x * sin(theta) * cos(phi) + p.y * cos(theta)
    // Multiply by 2*pi/lambda to get the phase shift of that path.
    double path_phase(Position p, PathAngles a);

    // Field-response vector of one transmit antenna at position t, length L_t.
    // Entry q is exp(j * 2*pi/lambda * path_phase(t, tx_angles[q])); all entries
    // have unit modulus.
    arma::cx_vec field_response_tx(Position t, const ChannelGeometry &geom);

    // Field-response matrix of all N transmit antennas, L_t x N; column n is
    // field_response_tx(t[n], geom)
    arma::cx_mat field_response_matrix(const std::vector<Position> &t, const ChannelGeometry &geom);

    // Field-response vector of a receive antenna at position r against a given
    // receive-side angle set, length = angles.size()
    arma::cx_vec field_response_rx(Position r, const std::vector<PathAngles> &angles, double lambda);

    // Channel row vector h of length N between the transmit array at `t` and a
    // receive antenna at `r`, through path-response matrix `sigma` (L_r x L_t)
    // and the receive-side angle set. Entry n conjugates the composition
    // f(r)^H * sigma * g(t_n), so quadratic forms read h * Q * h^H.
    arma::cx_rowvec channel_vector(const std::vector<Position> &t, Position r,
                                   const arma::cx_mat &sigma,
                                   const std::vector<PathAngles> &rx_angles,
                                   const ChannelGeometry &geom);

    // Channel to the energy receiver for a full layout (uses sigma_e/er_angles)
    arma::cx_rowvec er_channel(const AntennaLayout &layout, const ChannelGeometry &geom);

    // Channel to the information receiver (fixed at geom.ir_position; uses
    // sigma_i/ir_angles). Independent of layout.rx.
    arma::cx_rowvec ir_channel(const std::vector<Position> &tx, const ChannelGeometry &geom);

    // True if Q is Hermitian within an absolute entry tolerance and its minimum
    // eigenvalue is >= -tol_scale * trace(Q) / N (the acceptance slack used for
    // transmit covariance matrices throughout the library)
    bool is_valid_covariance(const arma::cx_mat &Q, double tol_scale = 1e-8);

    // Harvested RF power h * Q * h^H at a unit conversion efficiency.
    // Throws std::invalid_argument if Q is not Hermitian positive semidefinite
    // within tolerance, or on dimension mismatch.
    double harvested_power(const arma::cx_rowvec &h, const arma::cx_mat &Q);

    // Receive SNR/SINR h * Q * h^H / noise_power. Throws std::invalid_argument
    // if noise_power <= 0 or on dimension mismatch.
    double sinr(const arma::cx_rowvec &h, const arma::cx_mat &Q, double noise_power);

} // namespace faswipt

#endif
