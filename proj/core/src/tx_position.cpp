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

#include "faswipt/tx_position.hpp"

#include "faswipt/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace faswipt
{

    static arma::cx_mat rank_one_kernel(const arma::cx_mat &sigma, Position r,
                                        const std::vector<PathAngles> &rx_angles, double lambda)
    {
        arma::cx_vec f = field_response_rx(r, rx_angles, lambda);
        arma::cx_vec v = sigma.t() * f; // L_t
        arma::cx_mat K = v * v.t();
        return 0.5 * (K + arma::cx_mat(K.t()));
    }

    arma::cx_mat er_gain_kernel(Position r, const ChannelGeometry &geom)
    {
        if (geom.sigma_e.n_rows != geom.n_rx_paths() || geom.sigma_e.n_cols != geom.n_tx_paths())
            throw std::invalid_argument("er_gain_kernel: path-response matrix does not match path counts");
        return rank_one_kernel(geom.sigma_e, r, geom.er_angles, geom.lambda);
    }

    arma::cx_mat ir_gain_kernel(const ChannelGeometry &geom)
    {
        if (geom.sigma_i.n_rows != geom.n_rx_paths() || geom.sigma_i.n_cols != geom.n_tx_paths())
            throw std::invalid_argument("ir_gain_kernel: path-response matrix does not match path counts");
        return rank_one_kernel(geom.sigma_i, geom.ir_position, geom.ir_angles, geom.lambda);
    }

    double tx_objective(Position t, const arma::cx_mat &kernel, const ChannelGeometry &geom)
    {
        if (kernel.n_rows != geom.n_tx_paths() || kernel.n_cols != geom.n_tx_paths())
            throw std::invalid_argument("tx_objective: kernel does not match transmit path count");
        arma::cx_vec g = field_response_tx(t, geom);
        return std::real(arma::as_scalar(g.t() * kernel * g));
    }

    TxSurrogate make_tx_surrogate(Position t_i, const arma::cx_mat &er_kernel,
                                  const arma::cx_mat &ir_kernel, const ChannelGeometry &geom)
    {
        if (er_kernel.n_rows != geom.n_tx_paths() || ir_kernel.n_rows != geom.n_tx_paths())
            throw std::invalid_argument("make_tx_surrogate: kernel does not match transmit path count");
        arma::cx_vec g = field_response_tx(t_i, geom);
        TxSurrogate s;
        s.er_coeff = (g.t() * er_kernel).st();
        s.ir_coeff = (g.t() * ir_kernel).st();
        s.er_curvature = curvature_bound(s.er_coeff, geom.lambda);
        s.ir_curvature = curvature_bound(s.ir_coeff, geom.lambda);
        s.expansion = t_i;
        return s;
    }

    Halfplane distance_halfplane(Position t_i, Position t_other, double min_dist)
    {
        if (!(min_dist >= 0.0))
            throw std::invalid_argument("distance_halfplane: negative minimum distance");
        Vec2 diff = t_i - t_other;
        double len = norm(diff);
        Halfplane h;
        // Coincident positions give no direction; fall back to +x.
        h.normal = (len == 0.0) ? Vec2{1.0, 0.0} : (1.0 / len) * diff;
        h.offset = min_dist + dot(h.normal, {t_other.x, t_other.y});
        return h;
    }

    std::optional<Disk> sinr_surrogate_disk(const TxSurrogate &s, double fixed_ir_power,
                                            double sinr_floor, double noise_power, double power,
                                            const ChannelGeometry &geom)
    {
        if (!(s.ir_curvature > 0.0))
            throw std::invalid_argument("sinr_surrogate_disk: zero curvature (constraint is constant)");
        if (!(power > 0.0) || !(noise_power > 0.0))
            throw std::invalid_argument("sinr_surrogate_disk: power and noise must be positive");

        const double gamma = s.ir_curvature;
        const Vec2 ti = {s.expansion.x, s.expansion.y};
        Vec2 grad = cosine_sum_gradient(s.ir_coeff, geom.tx_angles, geom.lambda, s.expansion);
        double z_i = cosine_sum_value(s.ir_coeff, geom.tx_angles, geom.lambda, s.expansion);

        // Quadratic minorant of the floor in t:
        //   -gamma t.t + 2 (grad + gamma t_i) . t + c0 >= 0
        double c0 = -2.0 * dot(grad, ti) - gamma * norm_sq(ti) + z_i + fixed_ir_power -
                    sinr_floor * noise_power / power;

        Disk d;
        d.center = (1.0 / gamma) * (grad + gamma * ti);
        d.radius_sq = c0 / gamma + norm_sq(d.center);
        if (d.radius_sq < 0.0)
            return std::nullopt;
        return d;
    }

    bool TxConstraintSet::contains(Position p, double tol) const
    {
        if (!box.contains(p, tol))
            return false;
        for (const auto &h : halfplanes)
            if (h.margin(p) < -tol)
                return false;
        if (disk && disk->margin(p) < -tol * std::max(1.0, std::abs(disk->radius_sq)))
            return false;
        return true;
    }

    Position solve_qcqp_2d(Position peak, const TxConstraintSet &constraints)
    {
        if (constraints.contains(peak, 0.0))
            return peak;

        // The projection of `peak` onto the intersection sits either on one
        // active boundary (foot of the perpendicular, or the nearest circle
        // point) or where two boundaries cross. Enumerating every such
        // candidate is finite and exact in the plane, and has none of the
        // slow-convergence failure modes of iterative projection schemes when
        // boundaries meet at grazing angles.
        std::vector<Halfplane> lines;
        lines.reserve(constraints.halfplanes.size() + 4);
        lines.push_back({{1.0, 0.0}, constraints.box.x_min});
        lines.push_back({{-1.0, 0.0}, -constraints.box.x_max});
        lines.push_back({{0.0, 1.0}, constraints.box.y_min});
        lines.push_back({{0.0, -1.0}, -constraints.box.y_max});
        lines.insert(lines.end(), constraints.halfplanes.begin(), constraints.halfplanes.end());

        std::vector<Position> candidates;
        candidates.reserve(4 * lines.size() + lines.size() * lines.size());

        // Feet of the perpendiculars from peak onto each boundary line.
        for (const auto &h : lines)
            candidates.push_back(peak + (-h.margin(peak)) * h.normal);

        // Crossing points of boundary-line pairs.
        for (std::size_t a = 0; a < lines.size(); ++a)
            for (std::size_t b = a + 1; b < lines.size(); ++b)
            {
                const Halfplane &ha = lines[a];
                const Halfplane &hb = lines[b];
                double det = ha.normal.x * hb.normal.y - ha.normal.y * hb.normal.x;
                if (std::abs(det) < 1e-12)
                    continue; // near-parallel: any crossing is far away and ill-conditioned
                candidates.push_back({(ha.offset * hb.normal.y - hb.offset * ha.normal.y) / det,
                                      (ha.normal.x * hb.offset - hb.normal.x * ha.offset) / det});
            }

        if (constraints.disk)
        {
            const Disk &d = *constraints.disk;
            const Position center{d.center.x, d.center.y};
            const double radius = std::sqrt(std::max(d.radius_sq, 0.0));

            // Nearest circle point to peak (center itself when they coincide).
            Vec2 off = peak - center;
            double len = norm(off);
            candidates.push_back(len == 0.0 ? Position{center.x + radius, center.y}
                                            : center + (radius / len) * off);

            // Line-circle crossings: p = p0 + s*t with p0 the line point nearest
            // the origin and t the unit tangent; |p - center|^2 = r^2 gives a
            // quadratic in s.
            for (const auto &h : lines)
            {
                Position p0{h.offset * h.normal.x, h.offset * h.normal.y};
                Vec2 tangent{-h.normal.y, h.normal.x};
                Vec2 rel = p0 - center;
                double b = dot(rel, tangent);
                double c = norm_sq(rel) - d.radius_sq;
                double disc = b * b - c;
                if (disc < 0.0)
                    continue;
                double root = std::sqrt(disc);
                candidates.push_back(p0 + (-b - root) * tangent);
                candidates.push_back(p0 + (-b + root) * tangent);
            }
        }

        bool found = false;
        Position best{0.0, 0.0};
        double best_dist_sq = std::numeric_limits<double>::infinity();
        for (const Position &cand : candidates)
        {
            if (!constraints.contains(cand, 1e-9))
                continue;
            double dist_sq = norm_sq(cand - peak);
            if (!found || dist_sq < best_dist_sq)
            {
                found = true;
                best = cand;
                best_dist_sq = dist_sq;
            }
        }
        if (!found)
            throw std::runtime_error("solve_qcqp_2d: empty constraint intersection");
        return best;
    }

    TxOptimizeResult optimize_tx_antenna(std::size_t n, const AntennaLayout &layout,
                                         const ChannelGeometry &geom, const Region &region,
                                         double min_dist, double sinr_floor, double noise_power,
                                         double power, const InnerOptions &opts)
    {
        if (n >= layout.tx.size())
            throw std::invalid_argument("optimize_tx_antenna: antenna index out of range");

        arma::cx_mat er_k = er_gain_kernel(layout.rx, geom);
        arma::cx_mat ir_k = ir_gain_kernel(geom);

        // IR power contributed by the antennas that stay fixed
        std::vector<Position> others;
        others.reserve(layout.tx.size() - 1);
        for (std::size_t l = 0; l < layout.tx.size(); ++l)
            if (l != n)
                others.push_back(layout.tx[l]);
        double fixed_ir_power = 0.0;
        if (!others.empty())
        {
            arma::cx_rowvec h_others = ir_channel(others, geom);
            fixed_ir_power = std::real(arma::as_scalar(h_others * h_others.t()));
        }
        const double floor_target = sinr_floor * noise_power / power;

        TxOptimizeResult res;
        res.t = layout.tx[n];

        double cur = tx_objective(res.t, er_k, geom);
        res.objectives.push_back(cur);

        while (res.iterations < opts.max_iter)
        {
            ++res.iterations;
            TxSurrogate s = make_tx_surrogate(res.t, er_k, ir_k, geom);
            if (s.er_curvature <= 0.0)
                break; // zero ER kernel: position is irrelevant to the objective

            TxConstraintSet constraints;
            constraints.box = region;
            for (const auto &other : others)
                constraints.halfplanes.push_back(distance_halfplane(res.t, other, min_dist));

            if (sinr_floor > 0.0)
            {
                if (s.ir_curvature > 0.0)
                {
                    auto disk = sinr_surrogate_disk(s, fixed_ir_power, sinr_floor, noise_power,
                                                    power, geom);
                    bool holds_here = disk && disk->margin(res.t) >=
                                                  -1e-9 * std::max(1.0, std::abs(disk->radius_sq));
                    if (!holds_here)
                    {
                        res.skipped = true; // minorant infeasible at the expansion point
                        break;
                    }
                    constraints.disk = disk;
                }
                else if (fixed_ir_power + tx_objective(res.t, ir_k, geom) < floor_target)
                {
                    res.skipped = true; // constant floor already violated
                    break;
                }
            }

            Vec2 grad = cosine_sum_gradient(s.er_coeff, geom.tx_angles, geom.lambda, res.t);
            Position peak = res.t + (1.0 / s.er_curvature) * grad;
            Position cand = solve_qcqp_2d(peak, constraints);

            double val = tx_objective(cand, er_k, geom);
            res.objectives.push_back(val);

            bool improved = val - cur > 1e-12 * std::abs(cur);
            if (improved)
                res.t = cand;
            if (val - cur < opts.tol * std::max(std::abs(cur), 1e-300))
                break;
            cur = val;
        }
        return res;
    }

} // namespace faswipt
