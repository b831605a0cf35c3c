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

#include <atomic>
#include <memory>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace kpcabo {

/// In-house multimodal benchmark on [-5, 5]^d. Each instance applies a seeded
/// shift of the optimum (inside the central 80% of the box) and a seeded
/// orthogonal rotation to a base function whose global minimum is 0 at the
/// origin, then adds a seeded optimum value offset:
///
///   f(x) = f_opt + base(R (x - x_opt))
///
/// Evaluation is deterministic for a fixed (id, dim, instance_seed).
class BenchmarkFunction {
  public:
    BenchmarkFunction(const std::string& id, int dim, int instance_seed);

    BenchmarkFunction(BenchmarkFunction&&) = default;
    BenchmarkFunction& operator=(BenchmarkFunction&&) = default;

    /// Evaluates f(x) and increments the evaluation counter. Throws on
    /// dimension mismatch; staying inside the bounds is the caller's duty.
    double evaluate(const Vector& x) const;

    const std::string& id() const { return id_; }
    int dim() const { return dim_; }
    const Box& bounds() const { return bounds_; }
    int instance_seed() const { return instance_seed_; }
    double optimum_value() const { return optimum_value_; }
    const Vector& optimum_location() const { return optimum_location_; }
    const Matrix& rotation() const { return rotation_; }

    long long evaluation_count() const { return evaluations_->load(); }
    void reset_evaluation_count() { evaluations_->store(0); }

    static const std::vector<std::string>& supported_ids();

  private:
    enum class Id {
        rastrigin,
        weierstrass,
        schaffers,
        schwefel,
        griewank_rosenbrock,
        gallagher21,
        katsuura,
        lunacek,
        sphere,
        ellipsoid,
    };

    double base(const Vector& z) const;

    std::string id_;
    Id id_enum_;
    int dim_ = 0;
    int instance_seed_ = 0;
    Box bounds_;
    double optimum_value_ = 0.0;
    Vector optimum_location_;
    Matrix rotation_;
    // gallagher-21 instance data
    Matrix peak_locations_;
    Vector peak_heights_;
    Vector peak_widths_;
    // lunacek instance constants
    double lunacek_s_ = 0.0;
    double lunacek_mu1_ = 0.0;
    mutable std::unique_ptr<std::atomic<long long>> evaluations_;
};

/// Factory matching the CLI function ids verbatim. Throws on unknown id or
/// dim < 2.
BenchmarkFunction make_function(const std::string& id, int dim, int instance_seed);

}  // namespace kpcabo
