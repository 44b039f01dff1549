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

#include "faswipt/rx_position.hpp"

#include "faswipt/channel.hpp"

#include <stdexcept>

namespace faswipt
{

    arma::cx_mat rx_harvest_kernel(const std::vector<Position> &t, const arma::cx_mat &Q,
                                   const ChannelGeometry &geom)
    {
        if (Q.n_rows != t.size() || Q.n_cols != t.size())
            throw std::invalid_argument("rx_harvest_kernel: covariance does not match antenna count");
        if (geom.sigma_e.n_rows != geom.n_rx_paths() || geom.sigma_e.n_cols != geom.n_tx_paths())
            throw std::invalid_argument("rx_harvest_kernel: path-response matrix does not match path counts");

        arma::cx_mat G = field_response_matrix(t, geom);
        arma::cx_mat SG = geom.sigma_e * G; // L_r x N
        // conj(Q), not Q: channel_vector conjugates the composed response, so
        // h Q h^H expands to f^H (SG conj(Q) SG^H) f. Using Q here would make
        // the ascent climb the conjugate-flipped form instead of the harvested
        // power. conj(Q) keeps the kernel Hermitian PSD (same eigenvalues).
        arma::cx_mat K = SG * arma::conj(Q) * SG.t();
        return 0.5 * (K + K.t()); // kill rounding skew, keep exactly Hermitian
    }

    double rx_objective(Position r, const arma::cx_mat &kernel, const ChannelGeometry &geom)
    {
        if (kernel.n_rows != geom.n_rx_paths() || kernel.n_cols != geom.n_rx_paths())
            throw std::invalid_argument("rx_objective: kernel does not match receive path count");
        arma::cx_vec f = field_response_rx(r, geom.er_angles, geom.lambda);
        return std::real(arma::as_scalar(f.t() * kernel * f));
    }

    RxSurrogate make_rx_surrogate(Position r_i, const arma::cx_mat &kernel,
                                  const ChannelGeometry &geom)
    {
        if (kernel.n_rows != geom.n_rx_paths() || kernel.n_cols != geom.n_rx_paths())
            throw std::invalid_argument("make_rx_surrogate: kernel does not match receive path count");
        arma::cx_vec f = field_response_rx(r_i, geom.er_angles, geom.lambda);
        RxSurrogate s;
        s.coeff = (f.t() * kernel).st(); // plain transpose, values preserved
        s.expansion = r_i;
        s.curvature = curvature_bound(s.coeff, geom.lambda);
        return s;
    }

    Position rx_sca_step(const RxSurrogate &s, const ChannelGeometry &geom, const Region &region)
    {
        if (s.curvature <= 0.0)
            return region.clip(s.expansion);
        Vec2 g = cosine_sum_gradient(s.coeff, geom.er_angles, geom.lambda, s.expansion);
        Position unconstrained = s.expansion + (1.0 / s.curvature) * g;
        return region.clip(unconstrained);
    }

    RxOptimizeResult optimize_rx(Position r_init, const arma::cx_mat &kernel,
                                 const ChannelGeometry &geom, const Region &region,
                                 const InnerOptions &opts)
    {
        if (!region.contains(r_init, 1e-12))
            throw std::invalid_argument("optimize_rx: initial position outside the region");

        RxOptimizeResult res;
        res.r = region.clip(r_init);

        double cur = rx_objective(res.r, kernel, geom);
        res.objectives.push_back(cur);

        while (res.iterations < opts.max_iter)
        {
            ++res.iterations;
            RxSurrogate s = make_rx_surrogate(res.r, kernel, geom);
            if (s.curvature <= 0.0)
                break; // zero kernel: nothing to improve

            Position cand = rx_sca_step(s, geom, region);
            double val = rx_objective(cand, kernel, geom);
            res.objectives.push_back(val);

            // Accept only clear improvements so a flat objective leaves the
            // position untouched
            bool improved = val - cur > 1e-12 * std::abs(cur);
            if (improved)
            {
                res.r = cand;
            }
            if (val - cur < opts.tol * std::max(std::abs(cur), 1e-300))
                break;
            cur = val;
        }
        return res;
    }

} // namespace faswipt
