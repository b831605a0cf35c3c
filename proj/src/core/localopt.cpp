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

#include "core/localopt.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace kpcabo {

namespace {

constexpr double kProjGradTol = 1e-8;
constexpr double kRelValueTol = 1e-10;
constexpr double kArmijoC1 = 1e-4;
constexpr int kMemory = 10;
constexpr int kMaxLineSearchHalvings = 60;

struct Pair {
    Vector s;
    Vector y;
    double rho;
};

Vector two_loop_direction(const Vector& g, const std::deque<Pair>& history) {
    Vector q = g;
    std::vector<double> a(history.size());
    for (int i = static_cast<int>(history.size()) - 1; i >= 0; --i) {
        a[i] = history[i].rho * history[i].s.dot(q);
        q -= a[i] * history[i].y;
    }
    const Pair& last = history.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
    for (std::size_t i = 0; i < history.size(); ++i) {
        const double b = history[i].rho * history[i].y.dot(q);
        q += (a[i] - b) * history[i].s;
    }
    return -q;
}

struct LineSearchResult {
    Vector x;
    double value = 0.0;
    bool ok = false;
};

LineSearchResult projected_backtracking(const BoundedProblem& p, const Vector& x, double fx,
                                        const Vector& g, const Vector& dir, double alpha0) {
    LineSearchResult r;
    double alpha = alpha0;
    for (int ls = 0; ls < kMaxLineSearchHalvings; ++ls) {
        Vector cand = p.bounds.clip(x + alpha * dir);
        Vector step = cand - x;
        if (step.lpNorm<Eigen::Infinity>() == 0.0) return r;  // pinned against the box
        const double f_cand = p.objective(cand);
        if (std::isfinite(f_cand) && f_cand <= fx + kArmijoC1 * g.dot(step)) {
            r.x = std::move(cand);
            r.value = f_cand;
            r.ok = true;
            return r;
        }
        alpha *= 0.5;
    }
    return r;
}

}  // namespace

Vector finite_difference_gradient(const std::function<double(const Vector&)>& f, const Vector& x) {
    Vector g(x.size());
    Vector probe = x;
    for (int i = 0; i < x.size(); ++i) {
        const double h = 1e-6 * (1.0 + std::abs(x[i]));
        const double xi = x[i];
        probe[i] = xi + h;
        const double fp = f(probe);
        probe[i] = xi - h;
        const double fm = f(probe);
        probe[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

OptResult minimize(const BoundedProblem& p, const Vector& x0) {
    if (!p.objective) throw std::invalid_argument("minimize: missing objective");
    if (p.bounds.dim() != x0.size()) throw std::invalid_argument("minimize: dimension mismatch");

    Vector x = p.bounds.clip(x0);
    double fx = p.objective(x);
    if (!std::isfinite(fx))
        throw std::invalid_argument("minimize: objective is non-finite at the starting point");

    auto eval_gradient = [&p](const Vector& v) {
        return p.gradient ? p.gradient(v) : finite_difference_gradient(p.objective, v);
    };

    OptResult result;
    result.x = x;
    result.value = fx;

    std::deque<Pair> history;
    Vector g = eval_gradient(x);
    bool converged = false;
    int iter = 0;

    for (; iter < p.max_iters; ++iter) {
        const Vector projected_grad = x - p.bounds.clip(x - g);
        if (projected_grad.lpNorm<Eigen::Infinity>() < kProjGradTol) {
            converged = true;
            break;
        }

        Vector dir;
        if (history.empty()) {
            dir = -g;
        } else {
            dir = two_loop_direction(g, history);
            if (dir.dot(g) >= 0.0) {
                history.clear();
                dir = -g;
            }
        }

        const double alpha0 =
            history.empty() ? std::min(1.0, 1.0 / std::max(1e-12, g.lpNorm<Eigen::Infinity>()))
                            : 1.0;
        LineSearchResult ls = projected_backtracking(p, x, fx, g, dir, alpha0);
        if (!ls.ok && !history.empty()) {
            history.clear();
            dir = -g;
            ls = projected_backtracking(p, x, fx, g, dir,
                                        std::min(1.0, 1.0 / std::max(1e-12, g.lpNorm<Eigen::Infinity>())));
        }
        if (!ls.ok) break;  // no acceptable step along the descent direction

        Vector g_new = eval_gradient(ls.x);
        Vector s = ls.x - x;
        Vector yv = g_new - g;
        const double sy = s.dot(yv);
        if (sy > 1e-12 * s.norm() * yv.norm()) {
            history.push_back({std::move(s), std::move(yv), 1.0 / sy});
            if (static_cast<int>(history.size()) > kMemory) history.pop_front();
        }

        const double previous = fx;
        x = ls.x;
        fx = ls.value;
        g = std::move(g_new);
        if (fx < result.value) {
            result.x = x;
            result.value = fx;
        }
        if (std::abs(previous - fx) < kRelValueTol * (1.0 + std::abs(previous))) {
            ++iter;
            converged = true;
            break;
        }
    }

    result.iterations = iter;
    result.converged = converged;
    return result;
}

OptResult minimize_multistart(const BoundedProblem& p, const std::vector<Vector>& starts) {
    if (starts.empty()) throw std::invalid_argument("minimize_multistart: no starting points");

    bool have_result = false;
    OptResult best;
    std::exception_ptr last_error;
    for (const Vector& start : starts) {
        try {
            OptResult r = minimize(p, start);
            if (!have_result || r.value < best.value) {
                best = std::move(r);
                have_result = true;
            }
        } catch (...) {
            last_error = std::current_exception();
        }
    }
    if (!have_result) std::rethrow_exception(last_error);
    return best;
}

}  // namespace kpcabo
