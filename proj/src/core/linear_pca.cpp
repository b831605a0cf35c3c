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

#include "core/linear_pca.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kpcabo {

LinearPcaModel fit_linear_pca(const RescaledData& data, double eta, int max_components) {
    if (eta <= 0.0 || eta > 1.0)
        throw std::invalid_argument("fit_linear_pca: eta must be in (0, 1]");
    const int n = static_cast<int>(data.points.rows());
    const int d = static_cast<int>(data.points.cols());
    if (n < 2) throw std::invalid_argument("fit_linear_pca: need at least two points");

    LinearPcaModel model;
    model.center = data.center;
    model.mean_weight = data.weights.mean();
    model.row_mean = data.points.colwise().mean();

    const Matrix centered = data.points.rowwise() - model.row_mean.transpose();
    const Matrix covariance = centered.transpose() * centered / n;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(covariance);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("fit_linear_pca: eigendecomposition failed");

    Vector lambda = solver.eigenvalues().reverse();
    Matrix u = solver.eigenvectors().rowwise().reverse();
    const double top = std::max(0.0, lambda[0]);
    if (top <= 0.0)
        throw DegenerateDataError("fit_linear_pca: all points identical after rescaling");
    for (int i = 0; i < d; ++i) {
        if (lambda[i] < 1e-12 * top) lambda[i] = 0.0;
    }

    const double total = lambda.sum();
    double cumulative = 0.0;
    int r = d;
    for (int i = 0; i < d; ++i) {
        cumulative += lambda[i];
        if (cumulative >= eta * total) {
            r = i + 1;
            break;
        }
    }
    model.r = std::min(r, max_components);
    model.eigenvalues = lambda;
    model.components = u.leftCols(model.r);
    model.scores = centered * model.components;
    return model;
}

ReducedDomain linear_reduced_domain(const LinearPcaModel& model, const Box& original_bounds,
                                    const RescaledData& data) {
    const Vector mid = original_bounds.midpoint();
    Vector vertex(original_bounds.dim());
    for (int j = 0; j < original_bounds.dim(); ++j) {
        vertex[j] = model.center[j] > mid[j] ? original_bounds.lower[j] : original_bounds.upper[j];
    }
    const double w_max = data.weights.maxCoeff();
    double radius = (w_max * (vertex - model.center) - model.row_mean).norm();
    for (int i = 0; i < model.scores.rows(); ++i) {
        radius = std::max(radius, model.scores.row(i).norm());
    }

    ReducedDomain domain;
    domain.r = model.r;
    domain.radius = radius;
    domain.bounds = Box::cube(model.r, -radius, radius);
    return domain;
}

}  // namespace kpcabo
