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
#include "lia/functions.hpp"

#include <cmath>
#include <limits>

namespace lia {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Generator make_generator(const std::string& name) {
    Generator g;
    g.name = name;
    if (name == "neg-log") {
        g.increasing = false;
        g.fwd = [](double u) { return u <= 0.0 ? kInf : -std::log(u); };
        g.inv = [](double v) { return std::isinf(v) ? 0.0 : std::exp(-v); };
    } else if (name == "one-minus") {
        g.increasing = false;
        g.fwd = [](double u) { return 1.0 - u; };
        g.inv = [](double v) { return 1.0 - v; };
    } else if (name == "identity") {
        g.fwd = [](double u) { return u; };
        g.inv = [](double v) { return v; };
    } else if (name == "square") {
        g.fwd = [](double u) { return u * u; };
        g.inv = [](double v) { return std::sqrt(v); };
    } else if (name == "neg-log1m") {
        g.fwd = [](double u) { return u >= 1.0 ? kInf : -std::log(1.0 - u); };
        g.inv = [](double v) {
            return std::isinf(v) ? 1.0 : 1.0 - std::exp(-v);
        };
    } else if (name == "log") {
        g.fwd = [](double u) { return u <= 0.0 ? -kInf : std::log(u); };
        g.inv = [](double v) {
            if (std::isinf(v)) return v < 0.0 ? 0.0 : 1.0;
            double u = std::exp(v);
            return u > 1.0 ? 1.0 : u;
        };
    } else {
        throw ParamError("unknown generator: " + name);
    }
    return g;
}

Automorphism make_automorphism(const std::string& name, double power) {
    Automorphism a;
    a.name = name;
    if (name == "identity") {
        a.fwd = [](double x) { return x; };
        a.inv = [](double v) { return v; };
    } else if (name == "power") {
        if (!(power > 0.0) || !std::isfinite(power))
            throw ParamError("automorphism power must be positive");
        a.power = power;
        a.fwd = [power](double x) { return std::pow(x, power); };
        a.inv = [power](double v) { return std::pow(v, 1.0 / power); };
    } else {
        throw ParamError("unknown automorphism: " + name);
    }
    return a;
}

}  // namespace lia
