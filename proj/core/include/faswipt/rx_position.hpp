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

#ifndef faswipt_rx_position_H
#define faswipt_rx_position_H

#include "surrogate.hpp"
#include "types.hpp"

namespace faswipt
{

    // Energy-receiver repositioning for a fixed transmit covariance and fixed
    // transmit positions. The harvested power as a function of the receive
    // position r is the Hermitian quadratic form
    //     x(r) = f(r)^H K f(r)
    // in the receive field response, with a PSD kernel K built from the
    // transmit side. Each iteration minorizes x by a concave quadratic that is
    // tight at the expansion point and maximizes it in closed form over the
    // receive region.

    // PSD kernel of the harvested power in the receive field response:
    //     K = sigma_e * G(t) * conj(Q) * G(t)^H * sigma_e^H   (L_r x L_r)
    // The conjugate mirrors the conjugation inside channel_vector, making
    // f(r)^H K f(r) equal to harvested_power(h(t, r), Q) exactly.
    arma::cx_mat rx_harvest_kernel(const std::vector<Position> &t, const arma::cx_mat &Q,
                                   const ChannelGeometry &geom);

    // Harvested power at receive position r for a fixed kernel
    double rx_objective(Position r, const arma::cx_mat &kernel, const ChannelGeometry &geom);

    // Linearization of x at an expansion point: coefficients of the cosine-sum
    // minorant, the expansion point itself, and the curvature bound of the
    // quadratic minorant of that cosine sum.
    struct RxSurrogate
    {
        arma::cx_vec coeff;      // entries of f(r_i)^H K, one per receive path
        Position expansion;      // point the surrogate is tight at
        double curvature = 0.0;  // global Hessian bound of the cosine sum
    };

    RxSurrogate make_rx_surrogate(Position r_i, const arma::cx_mat &kernel,
                                  const ChannelGeometry &geom);

    // One closed-form ascent step: the unconstrained maximizer of the quadratic
    // minorant is expansion + gradient / curvature; clipping it onto the
    // axis-aligned region is the exact constrained maximizer because the
    // quadratic is isotropic.
    Position rx_sca_step(const RxSurrogate &s, const ChannelGeometry &geom, const Region &region);

    struct InnerOptions
    {
        double tol = 1e-5; // relative objective improvement below which to stop
        int max_iter = 100;
    };

    struct RxOptimizeResult
    {
        Position r;
        int iterations = 0;
        std::vector<double> objectives; // objective after the initial point and each candidate step
    };

    // Iterated surrogate ascent from r_init; the objective sequence is
    // non-decreasing and every iterate stays inside the region. Throws
    // std::invalid_argument if r_init lies outside the region.
    RxOptimizeResult optimize_rx(Position r_init, const arma::cx_mat &kernel,
                                 const ChannelGeometry &geom, const Region &region,
                                 const InnerOptions &opts = {});

} // namespace faswipt

#endif
