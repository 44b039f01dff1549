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

#ifndef faswipt_surrogate_H
#define faswipt_surrogate_H

#include "types.hpp"

namespace faswipt
{

    // The position subproblems all reduce to concave minorants of functions of
    // the form  v(p) = sum_q |w_q| cos(k * rho_q(p) + arg w_q)  with
    // k = 2*pi/lambda and rho_q the per-path length difference. The helpers
    // below evaluate v, its exact gradient, and a global curvature bound.

    // v(p) = Re{ sum_q w_q exp(j k rho_q(p)) }
    double cosine_sum_value(const arma::cx_vec &coeff, const std::vector<PathAngles> &angles,
                            double lambda, Position p);

    // Exact gradient of cosine_sum_value at p:
    //   sum_q -k |w_q| sin(k rho_q(p) + arg w_q) * [sin(theta_q) cos(phi_q), cos(theta_q)]
    Vec2 cosine_sum_gradient(const arma::cx_vec &coeff, const std::vector<PathAngles> &angles,
                             double lambda, Position p);

    // Global spectral bound on the Hessian of cosine_sum_value:
    //   2 k^2 sum_q |w_q|
    // (each path term's Hessian entries are bounded by k^2 |w_q|, and a
    // symmetric 2x2 matrix's spectral norm is at most twice its largest entry)
    double curvature_bound(const arma::cx_vec &coeff, double lambda);

} // namespace faswipt

#endif
