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

#include "core/kpca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "core/localopt.hpp"

namespace kpcabo {

namespace {

constexpr double kEigClampRel = 1e-12;

Matrix double_center(const Matrix& g, Vector& col_means, double& total_mean) {
    const int n = static_cast<int>(g.rows());
    col_means = g.colwise().mean();
    total_mean = col_means.mean();
    Matrix centered = g;
    centered.rowwise() -= col_means.transpose();
    centered.colwise() -= col_means;
    centered.array() += total_mean;
    return centered;
}

/// Descending eigenvalues of the centered Gram matrix, clamped at zero.
Vector centered_gram_eigenvalues(const Matrix& centered) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(centered, Eigen::EigenvaluesOnly);
    Vector mu = solver.eigenvalues().reverse();
    const double top = std::max(0.0, mu[0]);
    for (int i = 0; i < mu.size(); ++i) {
        if (mu[i] < kEigClampRel * top) mu[i] = 0.0;
    }
    return mu;
}

int select_components(const Vector& eigenvalues, double eta, int max_components) {
    const double total = eigenvalues.sum();
    if (total <= 0.0) throw DegenerateDataError("kpca: all eigenvalues are zero");
    double cumulative = 0.0;
    int r = static_cast<int>(eigenvalues.size());
    for (int i = 0; i < eigenvalues.size(); ++i) {
        cumulative += eigenvalues[i];
        if (cumulative >= eta * total) {
            r = i + 1;
            break;
        }
    }
    return std::min(r, max_components);
}

}  // namespace

double percentile20(const Vector& y) {
    const int n = static_cast<int>(y.size());
    if (n < 1) throw std::invalid_argument("percentile20: empty values");
    std::vector<double> sorted(y.data(), y.data() + n);
    std::sort(sorted.begin(), sorted.end());
    const int k = static_cast<int>(std::ceil(0.2 * n));
    return sorted[std::max(0, k - 1)];
}

RescaledData rescale(const Matrix& X, const Vector& Y) {
    const int n = static_cast<int>(X.rows());
    if (n < 2) throw std::invalid_argument("rescale: need at least two points");
    if (Y.size() != n) throw std::invalid_argument("rescale: X/Y size mismatch");
    if (!Y.allFinite()) throw std::invalid_argument("rescale: non-finite objective values");

    // Ascending ranks on Y, ties broken by evaluation order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&Y](int a, int b) { return Y[a] < Y[b]; });

    Vector weights(n);
    const double log_n = std::log(static_cast<double>(n));
    for (int rank = 0; rank < n; ++rank) {
        weights[order[rank]] = log_n - std::log(static_cast<double>(rank + 1));
    }
    weights /= weights.sum();

    RescaledData data;
    data.center = X.colwise().mean();
    data.weights = weights;
    data.points = (X.rowwise() - data.center.transpose()).array().colwise() * weights.array();
    return data;
}

KpcaModel fit_kpca(const RescaledData& data, const KernelSpec& kernel, double eta,
                   int max_components) {
    if (eta <= 0.0 || eta > 1.0) throw std::invalid_argument("fit_kpca: eta must be in (0, 1]");
    if (max_components < 1) throw std::invalid_argument("fit_kpca: max_components must be >= 1");
    const int n = static_cast<int>(data.points.rows());
    if (n < 2) throw std::invalid_argument("fit_kpca: need at least two points");

    KpcaModel model;
    model.rescaled = data;
    model.kernel = kernel;
    model.mean_weight = data.weights.size() > 0 ? data.weights.mean() : 1.0 / n;

    const Matrix g = gram(kernel, data.points);
    const Matrix centered = double_center(g, model.gram_col_means, model.gram_total_mean);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(centered);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("fit_kpca: eigendecomposition failed");
    Vector mu = solver.eigenvalues().reverse();
    Matrix u = solver.eigenvectors().rowwise().reverse();

    const double top = std::max(0.0, mu[0]);
    if (top <= 0.0) throw DegenerateDataError("fit_kpca: all points identical after rescaling");
    for (int i = 0; i < n; ++i) {
        if (mu[i] < kEigClampRel * top) mu[i] = 0.0;
    }

    model.eigenvalues = mu / n;  // Gram eigenvalues -> covariance eigenvalues
    model.r = select_components(model.eigenvalues, eta, max_components);

    model.eig_coeffs.resize(model.r, n);
    model.scores.resize(n, model.r);
    for (int i = 0; i < model.r; ++i) {
        const double root = std::sqrt(mu[i]);
        model.eig_coeffs.row(i) = u.col(i).transpose() / root;  // unit Hilbert norm
        model.scores.col(i) = root * u.col(i);
    }
    return model;
}

KpcaModel fit_kpca(const RescaledData& data, double gamma, double eta, int max_components) {
    return fit_kpca(data, KernelSpec::rbf(gamma), eta, max_components);
}

double tune_gamma(const RescaledData& data, double eta, int max_iters) {
    const int n = static_cast<int>(data.points.rows());
    if (n < 2) throw std::invalid_argument("tune_gamma: need at least two points");

    auto objective = [&data, eta, n](const Vector& g) {
        const double gamma = std::clamp(g[0], 1e-12, 1e6);
        Vector col_means;
        double total_mean = 0.0;
        const Matrix centered =
            double_center(gram(KernelSpec::rbf(gamma), data.points), col_means, total_mean);
        const Vector lambda = centered_gram_eigenvalues(centered) / n;
        const double total = lambda.sum();
        if (total <= 0.0) throw DegenerateDataError("tune_gamma: degenerate data");
        double cumulative = 0.0;
        int r = static_cast<int>(lambda.size());
        for (int i = 0; i < lambda.size(); ++i) {
            cumulative += lambda[i];
            if (cumulative >= eta * total) {
                r = i + 1;
                break;
            }
        }
        return static_cast<double>(r) - lambda.head(r).sum() / total;
    };

    // Probing degeneracy once up front keeps the optimizer exception-free.
    {
        Vector probe(1);
        probe[0] = kGammaUpper;
        objective(probe);
    }

    BoundedProblem problem;
    problem.objective = objective;
    problem.bounds.lower = Vector::Constant(1, kGammaLower);
    problem.bounds.upper = Vector::Constant(1, kGammaUpper);
    problem.max_iters = max_iters;

    const double log_lo = std::log10(kGammaLower);
    const double log_hi = std::log10(kGammaUpper);
    double best_value = std::numeric_limits<double>::infinity();
    double best_gamma = kGammaLower;
    for (int i = 0; i < kGammaGridStarts; ++i) {
        Vector start(1);
        start[0] = std::pow(10.0, log_lo + (log_hi - log_lo) * i / (kGammaGridStarts - 1));
        const OptResult r = minimize(problem, start);
        // Ties break toward smaller gamma: smoother feature maps.
        if (r.value < best_value - 1e-12 ||
            (r.value <= best_value + 1e-12 && r.x[0] < best_gamma)) {
            best_value = std::min(best_value, r.value);
            best_gamma = r.x[0];
        }
    }
    return best_gamma;
}

Vector forward(const KpcaModel& model, const Vector& rescaled_x) {
    const int n = static_cast<int>(model.rescaled.points.rows());
    if (rescaled_x.size() != model.rescaled.points.cols())
        throw std::invalid_argument("forward: dimension mismatch");

    Vector k(n);
    for (int i = 0; i < n; ++i)
        k[i] = kernel_eval(model.kernel, rescaled_x, model.rescaled.points.row(i));
    const double k_mean = k.mean();
    // g_i = k(x, x_i) - mean_j k(x, x_j) - mean_j k(x_i, x_j) + mean_jl k(x_j, x_l)
    const Vector g = (k.array() - k_mean - model.gram_col_means.array() + model.gram_total_mean);
    return model.eig_coeffs * g;
}

ReducedDomain reduced_domain(const KpcaModel& model, const Box& original_bounds) {
    if (model.kernel.family != KernelSpec::Family::rbf)
        throw std::invalid_argument("reduced_domain: model must use the rbf kernel");

    // Vertex of the original hyperbox farthest from the data center, pushed
    // through the rescaling map with the largest training weight so that it
    // dominates every rescaled data point in feature distance.
    const Vector mid = original_bounds.midpoint();
    Vector vertex(original_bounds.dim());
    for (int j = 0; j < original_bounds.dim(); ++j) {
        vertex[j] = model.rescaled.center[j] > mid[j] ? original_bounds.lower[j]
                                                      : original_bounds.upper[j];
    }
    const double w_max = model.rescaled.weights.maxCoeff();
    const Vector x_max = w_max * (vertex - model.rescaled.center);

    const Vector origin = Vector::Zero(x_max.size());
    double radius = feature_distance(model.kernel, x_max, origin);
    // The projection of a feature image onto the component span never has a
    // larger norm than the image itself, but the vertex bound can still be
    // undercut by heavily weighted points; widen to the observed scores.
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
