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

#include "faswipt/surrogate.hpp"

#include "faswipt/channel.hpp"

#include <stdexcept>

namespace faswipt
{

    static constexpr double two_pi = 6.283185307179586476925286766559;

    static void check_sizes(const arma::cx_vec &coeff, const std::vector<PathAngles> &angles, double lambda)
    {
        if (coeff.n_elem != angles.size())
            throw std::invalid_argument("surrogate: coefficient / angle count mismatch");
        if (!(lambda > 0.0))
            throw std::invalid_argument("surrogate: wavelength must be positive");
    }

    double cosine_sum_value(const arma::cx_vec &coeff, const std::vector<PathAngles> &angles,
                            double lambda, Position p)
    {
        check_sizes(coeff, angles, lambda);
        const double k = two_pi / lambda;
        double v = 0.0;
        for (arma::uword q = 0; q < coeff.n_elem; ++q)
        {
            double phase = k * path_phase(p, angles[q]);
            v += std::real(coeff[q] * std::complex<double>(std::cos(phase), std::sin(phase)));
        }
        return v;
    }

    Vec2 cosine_sum_gradient(const arma::cx_vec &coeff, const std::vector<PathAngles> &angles,
                             double lambda, Position p)
    {
        check_sizes(coeff, angles, lambda);
        const double k = two_pi / lambda;
        Vec2 g{0.0, 0.0};
        for (arma::uword q = 0; q < coeff.n_elem; ++q)
        {
            double phase = k * path_phase(p, angles[q]);
            // |w| sin(k rho + arg w) = Im{ w exp(j k rho) }
            double s = std::imag(coeff[q] * std::complex<double>(std::cos(phase), std::sin(phase)));
            double gx = std::sin(angles[q].theta) * std::cos(angles[q].phi);
            double gy = std::cos(angles[q].theta);
            g.x -= k * s * gx;
            g.y -= k * s * gy;
        }
        return g;
    }

    double curvature_bound(const arma::cx_vec &coeff, double lambda)
    {
        if (!(lambda > 0.0))
            throw std::invalid_argument("surrogate: wavelength must be positive");
        const double k = two_pi / lambda;
        double sum = 0.0;
        for (arma::uword q = 0; q < coeff.n_elem; ++q)
            sum += std::abs(coeff[q]);
        return 2.0 * k * k * sum;
    }

} // namespace faswipt
