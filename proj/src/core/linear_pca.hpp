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
#include "core/types.hpp"

namespace kpcabo {

/// Classical PCA on the rank-rescaled points; the linear counterpart of the
/// kernel model used by the PCA-BO baseline. Out-of-sample points enter with
/// the mean training weight and the backward map inverts that same affine
/// chain, so forward/backward round-trip exactly on the learned subspace.
struct LinearPcaModel {
    Vector center;       // unweighted mean of raw X (shared with rescale())
    Vector row_mean;     // mean of the rescaled rows
    Matrix components;   // d x r, orthonormal columns
    Vector eigenvalues;  // d (descending, clamped at zero)
    Matrix scores;       // n x r training projections
    double mean_weight = 0.0;
    int r = 0;

    Vector forward_new(const Vector& x_raw) const {
        return components.transpose() * (mean_weight * (x_raw - center) - row_mean);
    }

    Vector backward_unclipped(const Vector& z) const {
        return center + (row_mean + components * z) / mean_weight;
    }
};

LinearPcaModel fit_linear_pca(const RescaledData& data, double eta, int max_components);

/// Reduced search box for the linear model, mirroring the kernel construction
/// with the Euclidean (linear-kernel) feature distance.
ReducedDomain linear_reduced_domain(const LinearPcaModel& model, const Box& original_bounds,
                                    const RescaledData& data);

}  // namespace kpcabo
