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

#pragma once

#include <cstdint>

#include "core/types.hpp"

namespace kpcabo {

struct Design {
    Matrix points;  // n0 x d, every row inside the bounds
    int n0 = 0;
};

/// Latin hypercube sample: per coordinate, one point in each of the n0
/// equal-width strata, placed uniformly at random within its stratum.
Design lhs(int n0, const Box& bounds, std::uint64_t rng_seed);

}  // namespace kpcabo
