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
#include "lia/properties.hpp"

#include <cmath>

namespace lia {

namespace {

PropertyResult pass(std::size_t grid, double tol) {
    PropertyResult r;
    r.holds = true;
    r.cert = GridCert::checked(grid, tol);
    return r;
}

PropertyResult fail(std::array<double, 3> w, std::size_t grid, double tol) {
    PropertyResult r;
    r.holds = false;
    r.witness = w;
    r.cert = GridCert::checked(grid, tol);
    return r;
}

}  // namespace

PropertyReport check_properties(const Implication& imp,
                                const CheckOptions& opts) {
    PropertyReport rep;
    const auto& f = imp.fn;
    const double tol = opts.tol;
    auto g2 = unit_grid(opts.grid2d);
    auto g3 = unit_grid(opts.grid3d);

    auto put = [&](const std::string& name, bool holds,
                   std::array<double, 3> w, std::size_t grid) {
        rep.entries[name] = holds ? pass(grid, tol) : fail(w, grid, tol);
    };

    // axioms
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double y : g2) {
            double prev = f(g2[0], y);
            for (std::size_t i = 1; i < g2.size() && ok; ++i) {
                double cur = f(g2[i], y);
                if (cur > prev + tol) {
                    ok = false;
                    w = {g2[i], y, 0.0};
                }
                prev = cur;
            }
            if (!ok) break;
        }
        put("I1", ok, w, opts.grid2d);
    }
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g2) {
            double prev = f(x, g2[0]);
            for (std::size_t i = 1; i < g2.size() && ok; ++i) {
                double cur = f(x, g2[i]);
                if (cur < prev - tol) {
                    ok = false;
                    w = {x, g2[i], 0.0};
                }
                prev = cur;
            }
            if (!ok) break;
        }
        put("I2", ok, w, opts.grid2d);
    }
    put("I3", std::abs(f(0.0, 0.0) - 1.0) <= 1e-12, {0.0, 0.0, 0.0}, 1);
    put("I4", std::abs(f(1.0, 1.0) - 1.0) <= 1e-12, {1.0, 1.0, 0.0}, 1);
    put("I5", std::abs(f(1.0, 0.0)) <= 1e-12, {1.0, 0.0, 0.0}, 1);
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double y : g2)
            if (std::abs(f(0.0, y) - 1.0) > 1e-12) {
                ok = false;
                w = {0.0, y, 0.0};
                break;
            }
        put("LB", ok, w, opts.grid2d);
    }
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g2)
            if (std::abs(f(x, 1.0) - 1.0) > 1e-12) {
                ok = false;
                w = {x, 1.0, 0.0};
                break;
            }
        put("RB", ok, w, opts.grid2d);
    }
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double y : g2)
            if (std::abs(f(1.0, y) - y) > tol) {
                ok = false;
                w = {1.0, y, 0.0};
                break;
            }
        put("NP", ok, w, opts.grid2d);
    }
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g2)
            if (std::abs(f(x, x) - 1.0) > tol) {
                ok = false;
                w = {x, x, 0.0};
                break;
            }
        put("IP", ok, w, opts.grid2d);
    }
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g3) {
            for (double y : g3) {
                for (double z : g3)
                    if (std::abs(f(x, f(y, z)) - f(y, f(x, z))) > tol) {
                        ok = false;
                        w = {x, y, z};
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) break;
        }
        put("EP", ok, w, opts.grid3d);
    }
    {
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g2) {
            for (double y : g2) {
                bool one = f(x, y) >= 1.0 - tol;
                bool le = x <= y + tol;
                if (one != le) {
                    ok = false;
                    w = {x, y, 0.0};
                    break;
                }
            }
            if (!ok) break;
        }
        put("OP", ok, w, opts.grid2d);
    }
    if (opts.op_u_neutral) {
        double e = *opts.op_u_neutral;
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g2) {
            for (double y : g2) {
                bool ge = f(x, y) >= e - tol;
                bool le = x <= y + tol;
                if (ge != le) {
                    ok = false;
                    w = {x, y, 0.0};
                    break;
                }
            }
            if (!ok) break;
        }
        put("OP_U", ok, w, opts.grid2d);
    }
    if (opts.cp_negation) {
        const auto& n = opts.cp_negation->fn;
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g2) {
            for (double y : g2)
                if (std::abs(f(x, y) - f(n(y), n(x))) > tol) {
                    ok = false;
                    w = {x, y, 0.0};
                    break;
                }
            if (!ok) break;
        }
        put("CP", ok, w, opts.grid2d);
    }
    if (opts.rp_aggregation) {
        const auto& a = opts.rp_aggregation->fn;
        bool ok = true;
        std::array<double, 3> w{};
        for (double x : g3) {
            for (double y : g3) {
                double axy = a(x, y);
                for (double z : g3) {
                    double iyz = f(y, z);
                    bool bad = (axy <= z - tol && x > iyz + tol) ||
                               (axy > z + tol && x <= iyz - tol);
                    if (bad) {
                        ok = false;
                        w = {x, y, z};
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        put("RP", ok, w, opts.grid3d);
    }

    // continuity heuristics; grid-consistent only, never a proof
    {
        const double delta = 1e-7, jump = 1e-3;
        auto g = unit_grid(opts.grid2d);
        bool left = true, right = true;
        std::array<double, 3> wl{}, wr{};
        for (double x : g) {
            for (double y : g) {
                if (left && x - delta >= 0.0 &&
                    std::abs(f(x - delta, y) - f(x, y)) > jump) {
                    left = false;
                    wl = {x, y, 0.0};
                }
                if (right && y + delta <= 1.0 &&
                    std::abs(f(x, y + delta) - f(x, y)) > jump) {
                    right = false;
                    wr = {x, y, 0.0};
                }
            }
        }
        put("left-continuous-first", left, wl, opts.grid2d);
        put("right-continuous-second", right, wr, opts.grid2d);
        rep.entries["left-continuous-first"].cert.note = "grid-consistent";
        rep.entries["right-continuous-second"].cert.note = "grid-consistent";
    }
    return rep;
}

PropertyResult check_lia(const Implication& i, const Aggregation& a,
                         std::size_t grid, double tol) {
    if (grid < 11) throw ParamError("LIA grid must be >= 11");
    auto g = unit_grid(grid);
    double worst = 0.0;
    std::array<double, 3> w{};
    for (double x : g)
        for (double y : g) {
            double axy = a.fn(x, y);
            for (double z : g) {
                double gap = std::abs(i.fn(axy, z) - i.fn(x, i.fn(y, z)));
                if (gap > worst) {
                    worst = gap;
                    w = {x, y, z};
                }
            }
        }
    PropertyResult r;
    r.cert = GridCert::checked(grid, tol);
    if (worst <= tol) {
        r.holds = true;
    } else {
        r.holds = false;
        r.witness = w;
    }
    return r;
}

}  // namespace lia
