// Copyright 2026 The photonshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonshift/optimizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "photonshift/error.hpp"

namespace photonshift {

std::string to_string(OptimizerStatus status) {
    switch (status) {
        case OptimizerStatus::converged: return "converged";
        case OptimizerStatus::max_iter: return "max_iter";
        case OptimizerStatus::line_search_failure: return "line_search_failure";
    }
    return "unknown";
}

namespace {

using Vec = Eigen::VectorXd;

std::span<const double> as_span(const Vec& v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

Vec to_vec(const std::vector<double>& v) {
    return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Counts every call so the trace can report evaluation totals.
class Counted {
   public:
    Counted(const CostFunction& f, const GradientFunction& g) : f_(f), g_(g) {}

    double cost(const Vec& x) {
        ++evaluations;
        const double v = f_(as_span(x));
        if (!std::isfinite(v)) throw ContractError("cost function returned a non-finite value");
        return v;
    }
    Vec grad(const Vec& x) {
        ++evaluations;
        const auto g = g_(as_span(x));
        if (static_cast<Eigen::Index>(g.size()) != x.size()) {
            throw DimensionError("gradient length differs from parameter count");
        }
        return to_vec(g);
    }

    std::uint64_t evaluations = 0;

   private:
    const CostFunction& f_;
    const GradientFunction& g_;
};

struct Trial {
    double alpha = 0.0;
    double f = 0.0;
    std::optional<Vec> g;
};

struct SearchResult {
    bool ok = false;
    Trial point;
    Trial best;  // lowest cost seen, for the noisy fallback
};

class LineSearch {
   public:
    LineSearch(Counted& fn, const OptimizerOptions& opt, const Vec& x, const Vec& p, double f0,
               double d0)
        : fn_(fn), opt_(opt), x_(x), p_(p), f0_(f0), d0_(d0) {
        best_.f = std::numeric_limits<double>::infinity();
    }

    SearchResult run(double alpha1) {
        Trial prev{0.0, f0_, std::nullopt};
        double prev_d = d0_;
        double alpha = alpha1;
        for (int i = 0; i < opt_.max_line_search; ++i) {
            Trial t = eval(alpha);
            if (t.f > f0_ + opt_.c1 * alpha * d0_ || (i > 0 && t.f >= prev.f)) {
                return zoom(prev, prev_d, t);
            }
            const double d = slope(t);
            if (std::abs(d) <= -opt_.c2 * d0_) return {true, t, best_};
            if (d >= 0) return zoom(t, d, prev);
            prev = t;
            prev_d = d;
            alpha = std::min(2.0 * alpha, opt_.max_step);
            if (alpha == prev.alpha) break;
        }
        return {false, {}, best_};
    }

   private:
    Trial eval(double alpha) {
        Trial t{alpha, fn_.cost(x_ + alpha * p_), std::nullopt};
        if (t.f < best_.f) best_ = t;
        return t;
    }

    double slope(Trial& t) {
        if (!t.g) t.g = fn_.grad(x_ + t.alpha * p_);
        if (t.alpha == best_.alpha) best_.g = t.g;
        return t.g->dot(p_);
    }

    SearchResult zoom(Trial lo, double lo_d, Trial hi) {
        for (int i = 0; i < opt_.max_line_search; ++i) {
            const double width = hi.alpha - lo.alpha;
            if (std::abs(width) < 1e-14 * std::max(1.0, std::abs(lo.alpha))) break;
            // quadratic through f(lo), f'(lo), f(hi), kept away from the ends
            double alpha = lo.alpha + 0.5 * width;
            const double denom = 2.0 * (hi.f - lo.f - lo_d * width);
            if (denom > 0) {
                const double a = lo.alpha - lo_d * width * width / denom;
                const double lower = std::min(lo.alpha, hi.alpha) + 0.1 * std::abs(width);
                const double upper = std::max(lo.alpha, hi.alpha) - 0.1 * std::abs(width);
                if (a > lower && a < upper) alpha = a;
            }
            Trial t = eval(alpha);
            if (t.f > f0_ + opt_.c1 * alpha * d0_ || t.f >= lo.f) {
                hi = t;
                continue;
            }
            const double d = slope(t);
            if (std::abs(d) <= -opt_.c2 * d0_) return {true, t, best_};
            if (d * (hi.alpha - lo.alpha) >= 0) hi = lo;
            lo = t;
            lo_d = d;
        }
        return {false, {}, best_};
    }

    Counted& fn_;
    const OptimizerOptions& opt_;
    const Vec& x_;
    const Vec& p_;
    double f0_;
    double d0_;
    Trial best_;
};

void record(OptimizerTrace& trace, int iteration, const Vec& x, double f, const Vec& g,
            std::uint64_t evaluations) {
    trace.iterates.push_back({iteration, to_std(x), f, g.norm(), evaluations});
    if (trace.best_params.empty() || f < trace.best_cost) {
        trace.best_params = to_std(x);
        trace.best_cost = f;
    }
}

}  // namespace

OptimizerTrace bfgs_minimize(const CostFunction& cost, const GradientFunction& grad,
                             std::vector<double> x0, const OptimizerOptions& options) {
    if (x0.empty()) throw ContractError("bfgs_minimize: empty starting point");
    Counted fn(cost, grad);
    OptimizerTrace trace;

    Vec x = to_vec(x0);
    const auto n = x.size();
    double f = fn.cost(x);
    Vec g = fn.grad(x);
    record(trace, 0, x, f, g, fn.evaluations);

    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    bool scaled = false;
    int failures = 0;
    trace.status = OptimizerStatus::max_iter;
    for (int it = 1; it <= options.max_iter; ++it) {
        if (g.norm() <= options.grad_tol) {
            trace.status = OptimizerStatus::converged;
            break;
        }
        // a stale noisy cost is biased low by selection, so draw a fresh one
        if (options.noisy && it > 1) f = fn.cost(x);
        Vec p = -h * g;
        double d0 = g.dot(p);
        if (!(d0 < 0)) {
            h.setIdentity();
            scaled = false;
            p = -g;
            d0 = g.dot(p);
        }
        // first step of unit length along the steepest descent direction
        const double alpha1 = scaled ? 1.0 : std::min(1.0, 1.0 / p.norm());

        LineSearch search(fn, options, x, p, f, d0);
        SearchResult res = search.run(alpha1);
        if (!res.ok) {
            ++failures;
            h.setIdentity();
            scaled = false;
            const bool fallback = options.noisy && res.best.f < f;
            if (fallback) {
                const Vec xn = x + res.best.alpha * p;
                g = res.best.g ? *res.best.g : fn.grad(xn);
                x = xn;
                f = res.best.f;
                record(trace, it, x, f, g, fn.evaluations);
            }
            if (failures >= options.max_line_search_failures) {
                trace.status = OptimizerStatus::line_search_failure;
                break;
            }
            continue;
        }
        failures = 0;
        const Vec s = res.point.alpha * p;
        const Vec gn = *res.point.g;
        const Vec y = gn - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            if (!scaled) {
                h = Eigen::MatrixXd::Identity(n, n) * (sy / y.dot(y));
                scaled = true;
            }
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd i_n = Eigen::MatrixXd::Identity(n, n);
            h = (i_n - rho * s * y.transpose()) * h * (i_n - rho * y * s.transpose()) +
                rho * s * s.transpose();
        }
        x += s;
        f = res.point.f;
        g = gn;
        record(trace, it, x, f, g, fn.evaluations);
    }
    if (trace.status == OptimizerStatus::max_iter && g.norm() <= options.grad_tol &&
        options.max_iter > 0) {
        trace.status = OptimizerStatus::converged;
    }
    trace.evaluations = fn.evaluations;
    return trace;
}

OptimizerTrace gradient_descent(const CostFunction& cost, const GradientFunction& grad,
                                std::vector<double> x0, const OptimizerOptions& options) {
    if (x0.empty()) throw ContractError("gradient_descent: empty starting point");
    Counted fn(cost, grad);
    OptimizerTrace trace;
    Vec x = to_vec(x0);
    double f = fn.cost(x);
    Vec g = fn.grad(x);
    record(trace, 0, x, f, g, fn.evaluations);
    trace.status = OptimizerStatus::max_iter;
    for (int it = 1; it <= options.max_iter; ++it) {
        if (g.norm() <= options.grad_tol) {
            trace.status = OptimizerStatus::converged;
            break;
        }
        x -= options.learning_rate * g;
        f = fn.cost(x);
        g = fn.grad(x);
        record(trace, it, x, f, g, fn.evaluations);
    }
    if (options.max_iter > 0 && g.norm() <= options.grad_tol) {
        trace.status = OptimizerStatus::converged;
    }
    trace.evaluations = fn.evaluations;
    return trace;
}

}  // namespace photonshift
