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

#include <functional>
#include <string>

#include "lia/error.hpp"

namespace lia {

/// A continuous, strictly monotone generator on [0,1].  Values may be
/// +infinity at an endpoint (e.g. -ln at 0); callers must branch on the
/// conventions for those cases before doing arithmetic.
struct Generator {
    std::string name;
    std::function<double(double)> fwd;
    std::function<double(double)> inv;
    bool increasing = true;

    double operator()(double x) const { return fwd(x); }
    double inverse(double v) const { return inv(v); }
};

/// Catalog generators.
///   decreasing, f(1)=0:  "neg-log"  f(u)=-ln u,    "one-minus" f(u)=1-u
///   increasing, g(0)=0:  "identity" g(u)=u, "square" g(u)=u*u,
///                        "neg-log1m" g(u)=-ln(1-u)
///   strictly monotone with f(0)=-inf (means): "log" f(u)=ln u
Generator make_generator(const std::string& name);

/// Increasing bijection of [0,1].
struct Automorphism {
    std::string name;
    double power = 1.0;  // "power" kind: x^p
    std::function<double(double)> fwd;
    std::function<double(double)> inv;

    double operator()(double x) const { return fwd(x); }
    double inverse(double v) const { return inv(v); }
};

Automorphism make_automorphism(const std::string& name, double power = 1.0);

}  // namespace lia
