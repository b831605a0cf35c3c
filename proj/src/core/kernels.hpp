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

#include "core/types.hpp"

namespace kpcabo {

/// Kernel families used across the library: isotropic RBF for the feature map,
/// anisotropic Matern 5/2 for the surrogate, linear for the PCA baseline and
/// equivalence checks.
struct KernelSpec {
    enum class Family { rbf, matern52, linear };

    Family family = Family::rbf;
    double gamma = 1.0;            // rbf: exp(-gamma * ||x - y||^2)
    Vector length_scales;          // matern52, one per input dimension
    double signal_variance = 1.0;  // matern52

    static KernelSpec rbf(double gamma);
    static KernelSpec matern52(const Vector& length_scales, double signal_variance);
    static KernelSpec linear();
};

double kernel_eval(const KernelSpec& k, const Vector& x, const Vector& y);

/// Pairwise kernel matrix of the rows of X; symmetric PSD up to round-off.
Matrix gram(const KernelSpec& k, const Matrix& X);

/// Distance between the feature images of x and y:
/// sqrt(k(x,x) - 2 k(x,y) + k(y,y)). For the RBF kernel this is
/// sqrt(2 - 2 k(x,y)) < sqrt(2).
double feature_distance(const KernelSpec& k, const Vector& x, const Vector& y);

}  // namespace kpcabo
