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

#include <functional>
#include <vector>

#include "core/types.hpp"

namespace kpcabo {

/// Box-constrained minimization problem. When `gradient` is empty, central
/// finite differences with step 1e-6 * (1 + |x_i|) are used.
struct BoundedProblem {
    std::function<double(const Vector&)> objective;
    std::function<Vector(const Vector&)> gradient;  // optional
    Box bounds;
    int max_iters = 200;
};

struct OptResult {
    Vector x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Limited-memory BFGS (memory 10) with gradient projection onto the box.
/// Stops on projected-gradient sup-norm < 1e-8, relative value change
/// < 1e-10, or max_iters. The returned value never exceeds objective(x0).
OptResult minimize(const BoundedProblem& p, const Vector& x0);

/// Best of the per-start minimize results by value; ties keep the earliest
/// start. Throws only if every start fails.
OptResult minimize_multistart(const BoundedProblem& p, const std::vector<Vector>& starts);

/// Central finite-difference gradient used when no analytic gradient is given.
Vector finite_difference_gradient(const std::function<double(const Vector&)>& f, const Vector& x);

}  // namespace kpcabo
