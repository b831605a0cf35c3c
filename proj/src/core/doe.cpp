// Copyright 2026 The kpcabo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/doe.hpp"

#include <stdexcept>

#include "core/rng.hpp"

namespace kpcabo {

Design lhs(int n0, const Box& bounds, std::uint64_t rng_seed) {
    if (n0 < 1) throw std::invalid_argument("lhs: n0 must be positive");
    const int d = bounds.dim();
    for (int j = 0; j < d; ++j) {
        if (!(bounds.lower[j] < bounds.upper[j]))
            throw std::invalid_argument("lhs: degenerate bounds in coordinate " + std::to_string(j));
    }

    Rng rng(rng_seed);
    Design design;
    design.n0 = n0;
    design.points.resize(n0, d);
    for (int j = 0; j < d; ++j) {
        const std::vector<int> strata = rng.permutation(n0);
        const double width = (bounds.upper[j] - bounds.lower[j]) / n0;
        for (int i = 0; i < n0; ++i) {
            design.points(i, j) = bounds.lower[j] + (strata[i] + rng.uniform01()) * width;
        }
    }
    return design;
}

}  // namespace kpcabo
