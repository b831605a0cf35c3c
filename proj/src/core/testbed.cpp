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

#include "core/testbed.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "core/rng.hpp"

namespace kpcabo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// argmax of w * sin(sqrt(w)) on [0, 500] and its value; the deceptive
// optimum of the classical Schwefel landscape.
constexpr double kSchwefelArgmax = 420.968746359982027;
constexpr double kSchwefelMax = 418.982887272433706;

const std::unordered_map<std::string, int>& id_index() {
    static const std::unordered_map<std::string, int> index = {
        {"rastrigin", 0}, {"weierstrass", 1},         {"schaffers", 2}, {"schwefel", 3},
        {"griewank-rosenbrock", 4}, {"gallagher-21", 5}, {"katsuura", 6},  {"lunacek", 7},
        {"sphere", 8},    {"ellipsoid", 9},
    };
    return index;
}

// Random orthogonal matrix: QR of a Gaussian matrix with the sign of the
// R diagonal fixed, which makes the factorization unique.
Matrix random_rotation(int d, Rng& rng) {
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = rng.normal();
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

double schwefel_g(double w) {
    const double aw = std::abs(w);
    if (aw <= 500.0) return w * std::sin(std::sqrt(aw));
    // Continue decreasingly beyond the classical domain so the deceptive
    // optimum stays the unique global maximum of g.
    const double edge = (w > 0.0 ? 500.0 : -500.0) * std::sin(std::sqrt(500.0));
    const double over = aw - 500.0;
    return edge - over * over / 1e4;
}

}  // namespace

const std::vector<std::string>& BenchmarkFunction::supported_ids() {
    static const std::vector<std::string> ids = {
        "rastrigin", "weierstrass", "schaffers",    "schwefel", "griewank-rosenbrock",
        "gallagher-21", "katsuura", "lunacek", "sphere",   "ellipsoid",
    };
    return ids;
}

BenchmarkFunction::BenchmarkFunction(const std::string& id, int dim, int instance_seed)
    : id_(id), dim_(dim), instance_seed_(instance_seed) {
    const auto it = id_index().find(id);
    if (it == id_index().end()) throw std::invalid_argument("unknown function id: " + id);
    if (dim < 2) throw std::invalid_argument("function dimension must be at least 2");
    id_enum_ = static_cast<Id>(it->second);
    bounds_ = Box::cube(dim, -5.0, 5.0);

    Rng rng(hash_combine(hash_combine(fnv1a64(id.data(), id.size()),
                                      static_cast<std::uint64_t>(dim)),
                         static_cast<std::uint64_t>(static_cast<std::int64_t>(instance_seed))));

    optimum_location_.resize(dim);
    for (int i = 0; i < dim; ++i) optimum_location_[i] = rng.uniform(-4.0, 4.0);
    rotation_ = random_rotation(dim, rng);
    optimum_value_ = std::round(rng.uniform(-100.0, 100.0) * 100.0) / 100.0;

    if (id_enum_ == Id::gallagher21) {
        const int peaks = 21;
        peak_locations_.resize(peaks, dim);
        peak_heights_.resize(peaks);
        peak_widths_.resize(peaks);
        peak_locations_.row(0).setZero();
        peak_heights_[0] = 10.0;
        peak_widths_[0] = 1.0;
        const std::vector<int> perm = rng.permutation(peaks - 1);
        for (int i = 1; i < peaks; ++i) {
            for (int j = 0; j < dim; ++j) peak_locations_(i, j) = rng.uniform(-4.9, 4.9);
            peak_heights_[i] = 1.1 + 8.0 * (i - 1) / 19.0;
            peak_widths_[i] = std::pow(1000.0, perm[i - 1] / 19.0);
        }
    }
    if (id_enum_ == Id::lunacek) {
        lunacek_s_ = 1.0 - 1.0 / (2.0 * std::sqrt(static_cast<double>(dim) + 20.0) - 8.2);
        lunacek_mu1_ = -std::sqrt((2.5 * 2.5 - 1.0) / lunacek_s_);
    }

    evaluations_ = std::make_unique<std::atomic<long long>>(0);
}

double BenchmarkFunction::evaluate(const Vector& x) const {
    if (x.size() != dim_) throw std::invalid_argument("evaluate: dimension mismatch");
    evaluations_->fetch_add(1, std::memory_order_relaxed);
    const Vector z = rotation_ * (x - optimum_location_);
    return optimum_value_ + base(z);
}

double BenchmarkFunction::base(const Vector& z) const {
    const int d = dim_;
    switch (id_enum_) {
        case Id::sphere:
            return z.squaredNorm();
        case Id::ellipsoid: {
            double sum = 0.0;
            for (int i = 0; i < d; ++i)
                sum += std::pow(10.0, 6.0 * i / (d - 1)) * z[i] * z[i];
            return sum;
        }
        case Id::rastrigin: {
            double cos_sum = 0.0;
            for (int i = 0; i < d; ++i) cos_sum += std::cos(kTwoPi * z[i]);
            return 10.0 * (d - cos_sum) + z.squaredNorm();
        }
        case Id::weierstrass: {
            double sum = 0.0;
            for (int i = 0; i < d; ++i) {
                double ak = 1.0;
                double bk = 1.0;
                for (int k = 0; k <= 11; ++k) {
                    sum += ak * (1.0 - std::cos(kTwoPi * bk * z[i]));
                    ak *= 0.5;
                    bk *= 3.0;
                }
            }
            return sum;
        }
        case Id::schaffers: {
            double acc = 0.0;
            for (int i = 0; i + 1 < d; ++i) {
                const double s = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
                const double sq = std::sqrt(s);
                const double t = std::sin(50.0 * std::pow(s, 0.2));
                acc += sq + sq * t * t;
            }
            acc /= (d - 1);
            return acc * acc;
        }
        case Id::schwefel: {
            double sum = 0.0;
            for (int i = 0; i < d; ++i)
                sum += kSchwefelMax - schwefel_g(100.0 * z[i] + kSchwefelArgmax);
            return sum;
        }
        case Id::griewank_rosenbrock: {
            double acc = 0.0;
            for (int i = 0; i + 1 < d; ++i) {
                const double zi = z[i] + 1.0;
                const double zn = z[i + 1] + 1.0;
                const double s = 100.0 * (zi * zi - zn) * (zi * zi - zn) + (zi - 1.0) * (zi - 1.0);
                acc += s / 4000.0 + 1.0 - std::cos(s);
            }
            return 10.0 * acc / (d - 1);
        }
        case Id::gallagher21: {
            double best = 0.0;
            for (int i = 0; i < peak_locations_.rows(); ++i) {
                const double dist2 = (z.transpose() - peak_locations_.row(i)).squaredNorm();
                const double v =
                    peak_heights_[i] * std::exp(-peak_widths_[i] / (2.0 * d) * dist2);
                best = std::max(best, v);
            }
            const double t = 10.0 - best;
            return t * t;
        }
        case Id::katsuura: {
            const double exponent = 10.0 / std::pow(d, 1.2);
            double prod = 1.0;
            for (int i = 0; i < d; ++i) {
                double inner = 0.0;
                for (int j = 1; j <= 32; ++j) {
                    const double t = std::ldexp(z[i], j);
                    inner += std::abs(t - std::nearbyint(t)) * std::ldexp(1.0, -j);
                }
                prod *= std::pow(1.0 + (i + 1) * inner, exponent);
            }
            return 10.0 / (d * d) * (prod - 1.0);
        }
        case Id::lunacek: {
            const double mu0 = 2.5;
            double s1 = 0.0, s2 = 0.0, cos_sum = 0.0;
            for (int i = 0; i < d; ++i) {
                const double xi = z[i] + mu0;
                s1 += (xi - mu0) * (xi - mu0);
                s2 += (xi - lunacek_mu1_) * (xi - lunacek_mu1_);
                cos_sum += std::cos(kTwoPi * (xi - mu0));
            }
            return std::min(s1, d + lunacek_s_ * s2) + 10.0 * (d - cos_sum);
        }
    }
    throw std::logic_error("base: unknown function id");
}

BenchmarkFunction make_function(const std::string& id, int dim, int instance_seed) {
    return BenchmarkFunction(id, dim, instance_seed);
}

}  // namespace kpcabo
