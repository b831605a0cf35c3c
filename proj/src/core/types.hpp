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

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace kpcabo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Axis-aligned box constraint [lower_i, upper_i] per coordinate.
struct Box {
    Vector lower;
    Vector upper;

    int dim() const { return static_cast<int>(lower.size()); }

    static Box cube(int d, double lo, double hi) {
        Box b;
        b.lower = Vector::Constant(d, lo);
        b.upper = Vector::Constant(d, hi);
        return b;
    }

    bool contains(const Vector& x, double tol = 0.0) const {
        for (int i = 0; i < dim(); ++i) {
            if (x[i] < lower[i] - tol || x[i] > upper[i] + tol) return false;
        }
        return true;
    }

    Vector clip(const Vector& x) const {
        return x.cwiseMax(lower).cwiseMin(upper);
    }

    Vector midpoint() const { return 0.5 * (lower + upper); }
};

/// All points collapse after rescaling; no principal directions exist.
class DegenerateDataError : public std::runtime_error {
  public:
    explicit DegenerateDataError(const std::string& what) : std::runtime_error(what) {}
};

/// Covariance factorization failed even after nugget escalation.
class IllConditionedError : public std::runtime_error {
  public:
    explicit IllConditionedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kpcabo
