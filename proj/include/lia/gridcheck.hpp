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
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lia {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kDefaultGrid2d = 101;
inline constexpr std::size_t kDefaultGrid3d = 41;

/// Uniform grid on [0,1] with `points` nodes, endpoints included.
std::vector<double> unit_grid(std::size_t points);

/// How a claim was certified.  Grid checks are falsification sweeps, not
/// proofs; the record keeps the exact grid and tolerance used.
struct GridCert {
    std::size_t points = 0;
    double tol = 0.0;
    std::string note;  // "analytic-from-catalog" or "grid-checked"

    static GridCert analytic() { return {0, 0.0, "analytic-from-catalog"}; }
    static GridCert checked(std::size_t points, double tol) {
        return {points, tol, "grid-checked"};
    }
};

namespace gridcheck {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

/// f non-increasing along the grid (within tol).
bool non_increasing(const Fn1& f, std::size_t points, double tol);
bool non_decreasing(const Fn1& f, std::size_t points, double tol);

/// Strictly decreasing: every grid step drops by more than tol.
bool strictly_decreasing(const Fn1& f, std::size_t points, double tol);

/// Continuity heuristic: adjacent grid values never jump by more than
/// `jump_bound`.  A Lipschitz-1 map on a 1001-point grid moves by ~1e-3
/// per step, so a bound of a few percent separates the catalog's jumps
/// (which are O(1)) from smooth variation.
bool grid_continuous(const Fn1& f, std::size_t points, double jump_bound);

/// One-sided continuity probes: sample at x +/- delta and compare.
bool right_continuous(const Fn1& f, std::size_t points, double delta,
                      double jump_bound);
bool left_continuous(const Fn1& f, std::size_t points, double delta,
                     double jump_bound);

/// All adjacent values differ by more than tol (injectivity on the grid).
bool grid_injective(const Fn1& f, std::size_t points, double tol);

/// Binary-map sweeps over the grid square / cube.
bool non_decreasing_each_arg(const Fn2& f, std::size_t points, double tol);
bool commutative(const Fn2& f, std::size_t points, double tol);
bool associative(const Fn2& f, std::size_t points, double tol);

/// Left continuity of x -> f(x,y) and y -> f(x,y) probed at grid points.
bool left_continuous_each_arg(const Fn2& f, std::size_t points, double delta,
                              double jump_bound);
/// Right continuity of the second argument only.
bool right_continuous_second_arg(const Fn2& f, std::size_t points,
                                 double delta, double jump_bound);

/// Largest y in [0,1] with pred(y) true, assuming pred is true-then-false
/// along [0,1].  Returns 0 when pred(0) is already false.  Bisection to
/// ~1e-15.
double sup_true_prefix(const std::function<bool(double)>& pred);

}  // namespace gridcheck
}  // namespace lia
