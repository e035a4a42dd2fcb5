/*   Copyright 2026 the liafz authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */
#include "lia/gridcheck.hpp"

#include <algorithm>
#include <cmath>

namespace lia {

std::vector<double> unit_grid(std::size_t points) {
    std::vector<double> g;
    if (points == 0) return g;
    if (points == 1) {
        g.push_back(0.0);
        return g;
    }
    g.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        g.push_back(static_cast<double>(i) / static_cast<double>(points - 1));
    g.front() = 0.0;
    g.back() = 1.0;
    return g;
}

namespace gridcheck {

bool non_increasing(const Fn1& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    double prev = f(g[0]);
    for (std::size_t i = 1; i < g.size(); ++i) {
        double cur = f(g[i]);
        if (cur > prev + tol) return false;
        prev = cur;
    }
    return true;
}

bool non_decreasing(const Fn1& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    double prev = f(g[0]);
    for (std::size_t i = 1; i < g.size(); ++i) {
        double cur = f(g[i]);
        if (cur < prev - tol) return false;
        prev = cur;
    }
    return true;
}

bool strictly_decreasing(const Fn1& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    double prev = f(g[0]);
    for (std::size_t i = 1; i < g.size(); ++i) {
        double cur = f(g[i]);
        if (cur >= prev - tol) return false;
        prev = cur;
    }
    return true;
}

bool grid_continuous(const Fn1& f, std::size_t points, double jump_bound) {
    auto g = unit_grid(points);
    double prev = f(g[0]);
    for (std::size_t i = 1; i < g.size(); ++i) {
        double cur = f(g[i]);
        if (std::fabs(cur - prev) > jump_bound) return false;
        prev = cur;
    }
    return true;
}

bool right_continuous(const Fn1& f, std::size_t points, double delta,
                      double jump_bound) {
    auto g = unit_grid(points);
    for (double x : g) {
        if (x + delta > 1.0) continue;
        if (std::fabs(f(x + delta) - f(x)) > jump_bound) return false;
    }
    return true;
}

bool left_continuous(const Fn1& f, std::size_t points, double delta,
                     double jump_bound) {
    auto g = unit_grid(points);
    for (double x : g) {
        if (x - delta < 0.0) continue;
        if (std::fabs(f(x - delta) - f(x)) > jump_bound) return false;
    }
    return true;
}

bool grid_injective(const Fn1& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    double prev = f(g[0]);
    for (std::size_t i = 1; i < g.size(); ++i) {
        double cur = f(g[i]);
        if (std::fabs(cur - prev) <= tol) return false;
        prev = cur;
    }
    return true;
}

bool non_decreasing_each_arg(const Fn2& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    for (double y : g) {
        double prev = f(g[0], y);
        for (std::size_t i = 1; i < g.size(); ++i) {
            double cur = f(g[i], y);
            if (cur < prev - tol) return false;
            prev = cur;
        }
    }
    for (double x : g) {
        double prev = f(x, g[0]);
        for (std::size_t i = 1; i < g.size(); ++i) {
            double cur = f(x, g[i]);
            if (cur < prev - tol) return false;
            prev = cur;
        }
    }
    return true;
}

bool commutative(const Fn2& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (std::fabs(f(g[i], g[j]) - f(g[j], g[i])) > tol) return false;
    return true;
}

bool associative(const Fn2& f, std::size_t points, double tol) {
    auto g = unit_grid(points);
    for (double x : g)
        for (double y : g)
            for (double z : g)
                if (std::fabs(f(f(x, y), z) - f(x, f(y, z))) > tol)
                    return false;
    return true;
}

bool left_continuous_each_arg(const Fn2& f, std::size_t points, double delta,
                              double jump_bound) {
    auto g = unit_grid(points);
    for (double x : g) {
        for (double y : g) {
            if (x - delta >= 0.0 &&
                std::fabs(f(x - delta, y) - f(x, y)) > jump_bound)
                return false;
            if (y - delta >= 0.0 &&
                std::fabs(f(x, y - delta) - f(x, y)) > jump_bound)
                return false;
        }
    }
    return true;
}

bool right_continuous_second_arg(const Fn2& f, std::size_t points,
                                 double delta, double jump_bound) {
    auto g = unit_grid(points);
    for (double x : g)
        for (double y : g) {
            if (y + delta > 1.0) continue;
            if (std::fabs(f(x, y + delta) - f(x, y)) > jump_bound)
                return false;
        }
    return true;
}

double sup_true_prefix(const std::function<bool(double)>& pred) {
    if (pred(1.0)) return 1.0;
    if (!pred(0.0)) return 0.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        if (pred(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace gridcheck
}  // namespace lia
