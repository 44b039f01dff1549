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

#ifndef faswipt_rng_H
#define faswipt_rng_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace faswipt
{

    // SplitMix64 step, used to derive independent stream seeds from a master
    // seed. Derived streams are a pure function of their inputs, so trials can
    // run in any order (or in parallel) and still draw the same values.
    inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
    {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Seeded generator with explicit bit-to-double conversions. The raw engine
    // (mt19937_64) is fully specified by the standard; the conversions below are
    // pinned here instead of relying on std::*_distribution, whose output is
    // implementation-defined.
    class Rng
    {
      public:
        explicit Rng(std::uint64_t seed) : engine(seed) {}

        // Uniform on [0, 1) with 53-bit resolution
        double uniform()
        {
            return double(engine() >> 11) * 0x1.0p-53;
        }

        // Uniform on [lo, hi)
        double uniform(double lo, double hi)
        {
            return lo + (hi - lo) * uniform();
        }

        // Standard normal via Box-Muller (half the generated pair is discarded
        // to keep the draw count independent of call order)
        double normal()
        {
            double u1 = 0.0;
            do
                u1 = uniform();
            while (u1 <= 0.0);
            double u2 = uniform();
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
        }

        // Circularly symmetric complex normal with total variance `var`
        std::complex<double> complex_normal(double var)
        {
            double s = std::sqrt(0.5 * var);
            double re = normal();
            double im = normal();
            return {s * re, s * im};
        }

        std::uint64_t raw() { return engine(); }

      private:
        std::mt19937_64 engine;
    };

} // namespace faswipt

#endif
