// Copyright 2026 The boolcube-vqml Authors
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
#include "boolcube/optimizers.hpp"

#include "boolcube/error.hpp"
#include "boolcube/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boolcube::opt {
namespace {

class Tracker {
  public:
    explicit Tracker(std::vector<double> x0) : best_x_(std::move(x0)) {}

    void offer(std::span<const double> x, double fx) {
        if (!std::isfinite(fx)) {
            throw NumericalError("objective returned a non-finite value");
        }
        ++evaluations_;
        if (fx < best_f_) {
            best_f_ = fx;
            best_x_.assign(x.begin(), x.end());
        }
    }
    void end_iteration() { trace_.push_back(best_f_); }
    /// Folds evaluations made after the last iteration into its trace entry.
    void refresh_last() {
        if (!trace_.empty()) {
            trace_.back() = best_f_;
        }
    }
    [[nodiscard]] double best() const noexcept { return best_f_; }

    Result finish() {
        Result r;
        r.x = std::move(best_x_);
        r.fx = best_f_;
        r.iterations = trace_.size();
        r.trace = std::move(trace_);
        r.evaluations = evaluations_;
        return r;
    }

  private:
    std::vector<double> best_x_;
    double best_f_ = INFINITY;
    std::vector<double> trace_;
    std::size_t evaluations_ = 0;
};

void check_start(const std::vector<double> &x0) {
    if (x0.empty()) {
        throw InvalidArgument("optimiser needs at least one parameter");
    }
}

} // namespace

Result nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &opts) {
    check_start(x0);
    const std::size_t n = x0.size();
    const double dn = static_cast<double>(n);
    const double rho = 1.0;
    const double chi = 1.0 + 2.0 / dn;
    const double gam = 0.75 - 1.0 / (2.0 * dn);
    const double sig = 1.0 - 1.0 / dn;

    Tracker tracker(x0);
    std::vector<std::vector<double>> simplex;
    std::vector<double> values;

    auto eval = [&](const std::vector<double> &x) {
        const double v = f(x);
        tracker.offer(x, v);
        return v;
    };
    auto build = [&](const std::vector<double> &centre, double step) {
        simplex.assign(n + 1, centre);
        values.assign(n + 1, 0.0);
        values[0] = eval(centre);
        for (std::size_t i = 0; i < n; ++i) {
            simplex[i + 1][i] += step;
            values[i + 1] = eval(simplex[i + 1]);
        }
    };

    build(x0, opts.initial_step);
    double step = opts.initial_step;
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);

    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
        if (tracker.best() < opts.target) {
            break;
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        double diameter = 0.0;
        for (std::size_t v = 0; v <= n; ++v) {
            for (std::size_t i = 0; i < n; ++i) {
                diameter = std::max(diameter, std::abs(simplex[v][i] - simplex[best][i]));
            }
        }
        if (diameter < opts.restart_diameter) {
            step = std::max(step * 0.5, 1e-3);
            const std::vector<double> centre = simplex[best];
            build(centre, step);
            tracker.end_iteration();
            continue;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v <= n; ++v) {
            if (v == worst) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[v][i] / dn;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            xr[i] = centroid[i] + rho * (centroid[i] - simplex[worst][i]);
        }
        const double fr = eval(xr);
        if (fr < values[best]) {
            for (std::size_t i = 0; i < n; ++i) {
                xe[i] = centroid[i] + chi * (xr[i] - centroid[i]);
            }
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                values[worst] = fe;
            } else {
                simplex[worst] = xr;
                values[worst] = fr;
            }
        } else if (fr < values[second]) {
            simplex[worst] = xr;
            values[worst] = fr;
        } else {
            const bool outside = fr < values[worst];
            for (std::size_t i = 0; i < n; ++i) {
                xc[i] = outside ? centroid[i] + gam * (xr[i] - centroid[i])
                                : centroid[i] - gam * (centroid[i] - simplex[worst][i]);
            }
            const double fc = eval(xc);
            if (fc < (outside ? fr : values[worst])) {
                simplex[worst] = xc;
                values[worst] = fc;
            } else {
                for (std::size_t v = 0; v <= n; ++v) {
                    if (v == best) {
                        continue;
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        simplex[v][i] = simplex[best][i] + sig * (simplex[v][i] - simplex[best][i]);
                    }
                    values[v] = eval(simplex[v]);
                }
            }
        }
        tracker.end_iteration();
    }
    return tracker.finish();
}

Result spsa(const Objective &f, std::vector<double> x0, const SpsaOptions &opts) {
    check_start(x0);
    const std::size_t n = x0.size();
    Tracker tracker(x0);
    std::vector<double> x = std::move(x0);
    tracker.offer(x, f(x));
    std::vector<double> plus(n), minus(n), delta(n);
    std::uint64_t counter = 0;
    for (std::size_t k = 0; k < opts.max_iterations; ++k) {
        if (tracker.best() < opts.target) {
            break;
        }
        const double kk = static_cast<double>(k + 1);
        const double ak = opts.a / std::pow(kk + opts.stability, opts.alpha);
        const double ck = opts.c / std::pow(kk, opts.gamma);
        for (std::size_t i = 0; i < n; ++i) {
            delta[i] = (counter_draw(opts.seed, counter++) & 1U) != 0 ? 1.0 : -1.0;
            plus[i] = x[i] + ck * delta[i];
            minus[i] = x[i] - ck * delta[i];
        }
        const double fp = f(plus);
        const double fm = f(minus);
        tracker.offer(plus, fp);
        tracker.offer(minus, fm);
        const double g = (fp - fm) / (2.0 * ck);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] -= ak * g / delta[i];
        }
        tracker.offer(x, f(x));
        tracker.end_iteration();
    }
    return tracker.finish();
}

Result adam(const ObjectiveWithGradient &f, std::vector<double> x0, const AdamOptions &opts) {
    check_start(x0);
    const std::size_t n = x0.size();
    Tracker tracker(x0);
    std::vector<double> x = std::move(x0);
    std::vector<double> g(n), m(n, 0.0), v(n, 0.0);
    double b1t = 1.0;
    double b2t = 1.0;
    for (std::size_t k = 0; k < opts.max_iterations; ++k) {
        const double fx = f(x, g);
        tracker.offer(x, fx);
        if (tracker.best() < opts.target) {
            tracker.end_iteration();
            break;
        }
        b1t *= opts.beta1;
        b2t *= opts.beta2;
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = opts.beta1 * m[i] + (1.0 - opts.beta1) * g[i];
            v[i] = opts.beta2 * v[i] + (1.0 - opts.beta2) * g[i] * g[i];
            const double mh = m[i] / (1.0 - b1t);
            const double vh = v[i] / (1.0 - b2t);
            x[i] -= opts.learning_rate * mh / (std::sqrt(vh) + opts.epsilon);
        }
        tracker.end_iteration();
    }
    std::vector<double> scratch(n);
    tracker.offer(x, f(x, scratch));
    tracker.refresh_last();
    return tracker.finish();
}

} // namespace boolcube::opt
