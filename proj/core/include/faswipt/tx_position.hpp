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

#ifndef faswipt_tx_position_H
#define faswipt_tx_position_H

#include "rx_position.hpp" // InnerOptions
#include "surrogate.hpp"
#include "types.hpp"

#include <optional>

namespace faswipt
{

    // Per-antenna transmit repositioning. With every other antenna fixed, the
    // power harvested through antenna n depends on its position t only through
    //     y(t) = g(t)^H Ke g(t),   Ke = sigma_e^H f(r) f(r)^H sigma_e
    // and the information-receiver power through
    //     z(t) = g(t)^H Ki g(t),   Ki = sigma_i^H f(r0) f(r0)^H sigma_i,
    // both rank-one PSD kernels in the transmit field response. y is minorized
    // and ascended; z is minorized to keep a proxy SNR floor while moving.

    // Rank-one kernel of the per-antenna gain toward the energy receiver, for
    // the receive antenna at r (L_t x L_t)
    arma::cx_mat er_gain_kernel(Position r, const ChannelGeometry &geom);

    // Rank-one kernel of the per-antenna gain toward the information receiver,
    // whose antenna is fixed at geom.ir_position (L_t x L_t)
    arma::cx_mat ir_gain_kernel(const ChannelGeometry &geom);

    // Per-antenna gain g(t)^H K g(t) for either kernel
    double tx_objective(Position t, const arma::cx_mat &kernel, const ChannelGeometry &geom);

    // Joint linearization of both kernels at one expansion point
    struct TxSurrogate
    {
        arma::cx_vec er_coeff;      // entries of g(t_i)^H Ke
        double er_curvature = 0.0;  // Hessian bound of the ER cosine sum
        arma::cx_vec ir_coeff;      // entries of g(t_i)^H Ki
        double ir_curvature = 0.0;  // Hessian bound of the IR cosine sum
        Position expansion;
    };

    TxSurrogate make_tx_surrogate(Position t_i, const arma::cx_mat &er_kernel,
                                  const arma::cx_mat &ir_kernel, const ChannelGeometry &geom);

    // Halfplane {t : a . t >= d} with a unit normal
    struct Halfplane
    {
        Vec2 normal;
        double offset = 0.0;

        double margin(Position p) const { return normal.x * p.x + normal.y * p.y - offset; }
    };

    // Supporting halfplane of the pairwise spacing constraint ||t - t_other|| >= min_dist,
    // linearized at t_i: a = (t_i - t_other)/||t_i - t_other||, a . t >= min_dist + a . t_other.
    // Every point of the halfplane keeps the true spacing (Cauchy-Schwarz), and
    // t_i itself satisfies it whenever it currently does. Coincident positions
    // fall back to the +x unit normal.
    Halfplane distance_halfplane(Position t_i, Position t_other, double min_dist);

    // Closed disk ||t - center||^2 <= radius_sq
    struct Disk
    {
        Vec2 center;
        double radius_sq = 0.0;

        double margin(Position p) const
        {
            Vec2 d = {p.x - center.x, p.y - center.y};
            return radius_sq - norm_sq(d);
        }
    };

    // Disk form of the quadratic minorant of the proxy SNR floor
    //     ||h_i||^2 >= sinr_floor * noise_power / power
    // around the surrogate expansion point, where ||h_i||^2 splits into the
    // fixed-antenna part plus z(t). Returns std::nullopt when the minorant is
    // infeasible everywhere (negative squared radius); the caller then skips
    // this antenna's update. Requires s.ir_curvature > 0.
    std::optional<Disk> sinr_surrogate_disk(const TxSurrogate &s, double fixed_ir_power,
                                            double sinr_floor, double noise_power, double power,
                                            const ChannelGeometry &geom);

    // Feasible set of one per-antenna step
    struct TxConstraintSet
    {
        Region box;
        std::vector<Halfplane> halfplanes;
        std::optional<Disk> disk; // absent when the SNR floor is vacuous

        bool contains(Position p, double tol) const;
    };

    // Exact maximizer of the isotropic concave quadratic -||t - peak||^2 over
    // box, halfplanes and disk, computed as the Euclidean projection of `peak`
    // onto their intersection. In the plane the projection is either `peak`
    // itself, the foot of a perpendicular onto one active boundary, or a
    // crossing point of two boundaries, so all such candidates are enumerated
    // and the nearest feasible one returned. Throws std::runtime_error when no
    // candidate is feasible, i.e. the intersection is empty.
    Position solve_qcqp_2d(Position peak, const TxConstraintSet &constraints);

    struct TxOptimizeResult
    {
        Position t;
        int iterations = 0;
        bool skipped = false;           // surrogate floor infeasible at the expansion point
        std::vector<double> objectives; // ER gain after the initial point and each candidate
    };

    // Iterated surrogate ascent of antenna n's position with all others fixed.
    // The ER gain sequence is non-decreasing; spacing constraints against the
    // other antennas hold at every iterate; and whenever the floor disk is
    // present, the proxy SNR floor holds at the returned point.
    TxOptimizeResult optimize_tx_antenna(std::size_t n, const AntennaLayout &layout,
                                         const ChannelGeometry &geom, const Region &region,
                                         double min_dist, double sinr_floor, double noise_power,
                                         double power, const InnerOptions &opts = {});

} // namespace faswipt

#endif
