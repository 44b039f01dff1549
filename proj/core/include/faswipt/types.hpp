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

#ifndef faswipt_types_H
#define faswipt_types_H

#include <armadillo>
#include <cmath>
#include <vector>

namespace faswipt
{

    // All lengths are in carrier wavelengths; the wavelength itself is carried
    // explicitly so phase terms always read 2*pi/lambda * length.

    // Plain 2-D displacement / gradient vector
    struct Vec2
    {
        double x = 0.0;
        double y = 0.0;
    };

    inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
    inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }
    inline double norm(Vec2 v) { return std::sqrt(norm_sq(v)); }

    // Planar antenna position inside a movement region, in wavelengths
    struct Position
    {
        double x = 0.0;
        double y = 0.0;
    };

    inline Vec2 operator-(Position a, Position b) { return {a.x - b.x, a.y - b.y}; }
    inline Position operator+(Position p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
    inline double distance(Position a, Position b) { return norm(a - b); }

    // Axis-aligned rectangular movement region (closed set)
    struct Region
    {
        double x_min = 0.0;
        double x_max = 0.0;
        double y_min = 0.0;
        double y_max = 0.0;

        bool contains(Position p, double tol = 0.0) const
        {
            return p.x >= x_min - tol && p.x <= x_max + tol &&
                   p.y >= y_min - tol && p.y <= y_max + tol;
        }

        Position clip(Position p) const
        {
            return {std::clamp(p.x, x_min, x_max), std::clamp(p.y, y_min, y_max)};
        }

        Position center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
        double width() const { return x_max - x_min; }
        double height() const { return y_max - y_min; }
    };

    // Centered square region [c-side/2, c+side/2]^2 around the origin offset
    inline Region square_region(double side, Position origin = {0.0, 0.0})
    {
        return {origin.x, origin.x + side, origin.y, origin.y + side};
    }

    // Elevation/azimuth pair of one propagation path, both in [0, pi]
    struct PathAngles
    {
        double theta = 0.0; // elevation
        double phi = 0.0;   // azimuth
    };

    // Static propagation state between the transmitter and the two receivers.
    // Path counts are fixed; path-response matrices couple transmit paths to
    // receive paths (rows: receive paths, columns: transmit paths).
    struct ChannelGeometry
    {
        double lambda = 1.0;                 // carrier wavelength (normalization unit)
        std::vector<PathAngles> tx_angles;   // transmit-side path angles, size L_t
        std::vector<PathAngles> er_angles;   // receive-side path angles at the energy receiver, size L_r
        std::vector<PathAngles> ir_angles;   // receive-side path angles at the information receiver, size L_r
        arma::cx_mat sigma_e;                // path-response matrix to the energy receiver, L_r x L_t
        arma::cx_mat sigma_i;                // path-response matrix to the information receiver, L_r x L_t
        Position ir_position;                // fixed information-receiver antenna position

        arma::uword n_tx_paths() const { return tx_angles.size(); }
        arma::uword n_rx_paths() const { return er_angles.size(); }
    };

    // Positions of the N transmit antennas and of the energy-receiver antenna
    struct AntennaLayout
    {
        std::vector<Position> tx; // transmit antenna positions, size N
        Position rx;              // energy-receiver antenna position
    };

} // namespace faswipt

#endif
