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

#include "core/kernels.hpp"
#include "core/types.hpp"

namespace kpcabo {

/// Objective-aware rescaling: each point is centered at the unweighted mean
/// and multiplied by a rank-based weight proportional to ln n - ln R_i, where
/// R_i is the rank of its objective value (ascending, minimization). Weights
/// are normalized to sum to one; the worst point always gets weight zero.
struct RescaledData {
    Matrix points;   // n x d, row i = w_i * (x_i - center)
    Vector center;   // unweighted mean of the raw points
    Vector weights;  // nonnegative, nonincreasing in rank, sum 1
};

RescaledData rescale(const Matrix& X, const Vector& Y);

/// Trained feature-map state. Eigenfunctions are represented through their
/// coefficient rows a^(i) on the centered feature images of the training
/// points, normalized to unit Hilbert norm (a^T G~ a = 1).
struct KpcaModel {
    RescaledData rescaled;
    KernelSpec kernel;
    Matrix eig_coeffs;      // r x n
    Vector eigenvalues;     // n, nonincreasing, clamped at zero; lambda_i = mu_i / n
    int r = 0;
    Vector gram_col_means;  // n, column means of the raw Gram matrix
    double gram_total_mean = 0.0;
    Matrix scores;          // n x r training projections
    double mean_weight = 0.0;

    /// Out-of-sample rescaling: new points get the mean training weight.
    Vector rescale_point(const Vector& x_raw) const {
        return mean_weight * (x_raw - rescaled.center);
    }
};

/// Fits KPCA on already-rescaled data: builds the Gram matrix, double-centers
/// it, eigendecomposes, and selects the smallest r whose eigenvalues explain
/// at least eta of the total variance (capped at max_components).
KpcaModel fit_kpca(const RescaledData& data, const KernelSpec& kernel, double eta,
                   int max_components);

/// RBF convenience overload used by the optimizer loop.
KpcaModel fit_kpca(const RescaledData& data, double gamma, double eta, int max_components);

/// Minimizes  r(gamma) - sum_{i<=r} lambda_i / sum_i lambda_i  over
/// gamma in [1e-4, 2] with 16 log-spaced starts, each refined by the local
/// optimizer; ties break toward smaller gamma.
double tune_gamma(const RescaledData& data, double eta, int max_iters);

/// Projects an already-rescaled point onto the selected eigenfunctions via
/// kernel evaluations and the stored centering statistics.
Vector forward(const KpcaModel& model, const Vector& rescaled_x);

/// Reduced search domain: hyperbox [-radius, radius]^r covering the feature
/// ball that contains the training scores.
struct ReducedDomain {
    int r = 0;
    double radius = 0.0;
    Box bounds;
};

ReducedDomain reduced_domain(const KpcaModel& model, const Box& original_bounds);

/// The k-th smallest value of y with k = ceil(0.2 n): the 20%-percentile
/// order statistic used by the refit trigger.
double percentile20(const Vector& y);

inline constexpr double kGammaLower = 1e-4;
inline constexpr double kGammaUpper = 2.0;
inline constexpr int kGammaGridStarts = 16;

}  // namespace kpcabo
