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

#include "core/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace kpcabo {

KernelSpec KernelSpec::rbf(double gamma) {
    if (gamma <= 0.0) throw std::invalid_argument("rbf kernel requires gamma > 0");
    KernelSpec k;
    k.family = Family::rbf;
    k.gamma = gamma;
    return k;
}

KernelSpec KernelSpec::matern52(const Vector& length_scales, double signal_variance) {
    if ((length_scales.array() <= 0.0).any())
        throw std::invalid_argument("matern52 kernel requires positive length scales");
    if (signal_variance <= 0.0)
        throw std::invalid_argument("matern52 kernel requires positive signal variance");
    KernelSpec k;
    k.family = Family::matern52;
    k.length_scales = length_scales;
    k.signal_variance = signal_variance;
    return k;
}

KernelSpec KernelSpec::linear() {
    KernelSpec k;
    k.family = Family::linear;
    return k;
}

namespace {

double matern52_from_rho(double rho, double signal_variance) {
    const double a = std::sqrt(5.0) * rho;
    return signal_variance * (1.0 + a + a * a / 3.0) * std::exp(-a);
}

}  // namespace

double kernel_eval(const KernelSpec& k, const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("kernel_eval: dimension mismatch");
    switch (k.family) {
        case KernelSpec::Family::rbf:
            return std::exp(-k.gamma * (x - y).squaredNorm());
        case KernelSpec::Family::matern52: {
            if (k.length_scales.size() != x.size())
                throw std::invalid_argument("kernel_eval: length-scale dimension mismatch");
            const double rho2 = ((x - y).array() / k.length_scales.array()).square().sum();
            return matern52_from_rho(std::sqrt(rho2), k.signal_variance);
        }
        case KernelSpec::Family::linear:
            return x.dot(y);
    }
    throw std::logic_error("kernel_eval: unknown kernel family");
}

Matrix gram(const KernelSpec& k, const Matrix& X) {
    if (X.rows() == 0) throw std::invalid_argument("gram: empty point set");
    const int n = static_cast<int>(X.rows());
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = kernel_eval(k, X.row(i), X.row(i));
        for (int j = i + 1; j < n; ++j) {
            const double v = kernel_eval(k, X.row(i), X.row(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

double feature_distance(const KernelSpec& k, const Vector& x, const Vector& y) {
    const double r2 = kernel_eval(k, x, x) - 2.0 * kernel_eval(k, x, y) + kernel_eval(k, y, y);
    if (r2 < -1e-12) throw std::logic_error("feature_distance: negative squared distance");
    return std::sqrt(std::max(0.0, r2));
}

}  // namespace kpcabo
