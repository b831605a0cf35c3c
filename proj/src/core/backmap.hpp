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

#include "core/kpca.hpp"
#include "core/rng.hpp"
#include "core/types.hpp"

namespace kpcabo {

struct PreimageResult {
    Vector x;        // clipped to the domain
    Vector weights;  // d nonnegative conical weights
    double residual = 0.0;  // ||z - F(sum_i w_i p_i)||^2 at the optimum
    bool clipped = false;   // combination left the domain before CLIP
};

/// Pre-image of a reduced-space point: draws d archive points without
/// replacement and fits a conical combination sum_i w_i p_i whose forward
/// image is closest to z, with an exponential penalty for leaving the
/// domain; the combination is then clipped to the box.
PreimageResult backward(const KpcaModel& model, const Vector& z, const Matrix& archive_points,
                        const Box& bounds, Rng& rng);

/// Out-of-domain penalty of Eq-style form exp(sum of bound violations);
/// equals exp(0) = 1 anywhere inside the box, a constant offset that leaves
/// the argmin untouched.
double out_of_domain_penalty(const Vector& x, const Box& bounds);

inline constexpr double kConicalWeightUpperBound = 10.0;

}  // namespace kpcabo
