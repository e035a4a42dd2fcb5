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

#include <array>
#include <map>
#include <optional>
#include <string>

#include "lia/aggregation.hpp"
#include "lia/gridcheck.hpp"
#include "lia/implication.hpp"
#include "lia/negation.hpp"

namespace lia {

struct PropertyResult {
    bool holds = false;
    /// A violating point; unused coordinates are set to 0.
    std::optional<std::array<double, 3>> witness;
    GridCert cert;
};

struct PropertyReport {
    std::map<std::string, PropertyResult> entries;

    bool holds(const std::string& name) const {
        auto it = entries.find(name);
        return it != entries.end() && it->second.holds;
    }
};

struct CheckOptions {
    std::optional<Negation> cp_negation;
    std::optional<Aggregation> rp_aggregation;
    std::optional<double> op_u_neutral;
    std::size_t grid2d = kDefaultGrid2d;
    std::size_t grid3d = kDefaultGrid3d;
    double tol = kDefaultTol;
};

/// Grid sweep over I1-I5, LB/RB, NP, IP, EP, OP, and the optional
/// CP(N), RP(A), OP_U(e) entries, plus one-sided continuity heuristics
/// ("left-continuous-first", "right-continuous-second", certified only as
/// grid-consistent).
PropertyReport check_properties(const Implication& i,
                                const CheckOptions& opts = {});

/// I(A(x,y),z) = I(x,I(y,z)) on the 3-D grid; on failure the witness is
/// the triple with the largest gap.
PropertyResult check_lia(const Implication& i, const Aggregation& a,
                         std::size_t grid = kDefaultGrid3d,
                         double tol = kDefaultTol);

}  // namespace lia
