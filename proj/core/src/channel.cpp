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

#include "faswipt/channel.hpp"

#include <stdexcept>

namespace faswipt
{

    static constexpr double two_pi = 6.283185307179586476925286766559;

    double path_phase(Position p, PathAngles a)
    {
        return p.x * std::sin(a.theta) * std::cos(a.phi) + p.y * std::cos(a.theta);
    }

    static arma::cx_vec field_response(Position p, const std::vector<PathAngles> &angles, double lambda)
    {
        const double k = two_pi / lambda;
        arma::cx_vec f(angles.size());
        for (arma::uword q = 0; q < f.n_elem; ++q)
        {
            double phase = k * path_phase(p, angles[q]);
            f[q] = std::complex<double>(std::cos(phase), std::sin(phase));
        }
        return f;
    }

    arma::cx_vec field_response_tx(Position t, const ChannelGeometry &geom)
    {
        if (geom.tx_angles.empty())
            throw std::invalid_argument("field_response_tx: geometry has no transmit paths");
        return field_response(t, geom.tx_angles, geom.lambda);
    }

    arma::cx_mat field_response_matrix(const std::vector<Position> &t, const ChannelGeometry &geom)
    {
        if (t.empty())
            throw std::invalid_argument("field_response_matrix: empty position list");
        arma::cx_mat G(geom.n_tx_paths(), t.size());
        for (arma::uword n = 0; n < t.size(); ++n)
            G.col(n) = field_response_tx(t[n], geom);
        return G;
    }

    arma::cx_vec field_response_rx(Position r, const std::vector<PathAngles> &angles, double lambda)
    {
        if (angles.empty())
            throw std::invalid_argument("field_response_rx: empty angle set");
        if (!(lambda > 0.0))
            throw std::invalid_argument("field_response_rx: wavelength must be positive");
        return field_response(r, angles, lambda);
    }

    arma::cx_rowvec channel_vector(const std::vector<Position> &t, Position r,
                                   const arma::cx_mat &sigma,
                                   const std::vector<PathAngles> &rx_angles,
                                   const ChannelGeometry &geom)
    {
        if (sigma.n_rows != rx_angles.size() || sigma.n_cols != geom.n_tx_paths())
            throw std::invalid_argument("channel_vector: path-response matrix does not match path counts");

        arma::cx_vec f = field_response_rx(r, rx_angles, geom.lambda);
        arma::cx_mat G = field_response_matrix(t, geom);
        arma::cx_rowvec composed = f.t() * sigma * G; // 1 x N
        return arma::conj(composed);
    }

    arma::cx_rowvec er_channel(const AntennaLayout &layout, const ChannelGeometry &geom)
    {
        return channel_vector(layout.tx, layout.rx, geom.sigma_e, geom.er_angles, geom);
    }

    arma::cx_rowvec ir_channel(const std::vector<Position> &tx, const ChannelGeometry &geom)
    {
        return channel_vector(tx, geom.ir_position, geom.sigma_i, geom.ir_angles, geom);
    }

    bool is_valid_covariance(const arma::cx_mat &Q, double tol_scale)
    {
        if (Q.n_rows != Q.n_cols || Q.n_rows == 0)
            return false;

        double scale = std::max(1.0, arma::abs(Q).max());
        if (arma::abs(Q - Q.t()).max() > 1e-12 * scale)
            return false;

        arma::vec eigs;
        if (!arma::eig_sym(eigs, Q))
            return false;

        double trace = std::real(arma::trace(Q));
        return eigs.min() >= -tol_scale * std::max(trace, 0.0) / double(Q.n_rows) - 1e-300;
    }

    static double quadratic_form(const arma::cx_rowvec &h, const arma::cx_mat &Q)
    {
        if (Q.n_rows != h.n_elem || Q.n_cols != h.n_elem)
            throw std::invalid_argument("covariance dimension does not match channel length");
        return std::real(arma::as_scalar(h * Q * h.t()));
    }

    double harvested_power(const arma::cx_rowvec &h, const arma::cx_mat &Q)
    {
        if (!is_valid_covariance(Q))
            throw std::invalid_argument("harvested_power: covariance is not Hermitian PSD within tolerance");
        return quadratic_form(h, Q);
    }

    double sinr(const arma::cx_rowvec &h, const arma::cx_mat &Q, double noise_power)
    {
        if (!(noise_power > 0.0))
            throw std::invalid_argument("sinr: noise power must be positive");
        return quadratic_form(h, Q) / noise_power;
    }

} // namespace faswipt
