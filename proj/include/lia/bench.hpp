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
#include <string>
#include <utility>
#include <vector>

namespace lia {

/// Per-stage operation counts.  The counting unit is one binary operator
/// application (aggregation, implication, or a lattice comparison in a
/// sup/inf fold); folds over k items count k-1.
struct OpCount {
    std::vector<std::pair<std::string, long long>> stages;

    long long total() const {
        long long t = 0;
        for (const auto& s : stages) t += s.second;
        return t;
    }
};

/// Closed-form predicted counts for one rule.  `input_sizes` are the input
/// universe cardinalities, `output_size` the output cardinality.
/// `support_cells` is the number of positive cells per input set (used only
/// by the SBR similarity stages; 1 for singleton inputs) and
/// `joint_support_cells` the positive cells of the joint input tensor.
OpCount predict_counts(const std::string& engine, const std::string& mode,
                       const std::vector<std::size_t>& input_sizes,
                       std::size_t output_size,
                       const std::vector<std::size_t>& support_cells = {},
                       std::size_t joint_support_cells = 1);

struct SizeSpec {
    std::vector<std::size_t> inputs;
    std::size_t output = 1;
};

/// Predicted totals plus peak stored-object shape for each (engine, mode)
/// over each size: classical engines materialize the full m-dimensional
/// joint tensor, hierarchical ones only per-stage vectors/matrices.
/// `csv` switches from the aligned text table to CSV rows.
std::string complexity_report(
    const std::vector<std::pair<std::string, std::string>>& engines,
    const std::vector<SizeSpec>& sizes, bool csv = false);

/// Render an OpCount as "stage,count" CSV rows plus a total row.
std::string to_csv(const OpCount& c);
/// Render an OpCount as an aligned text table.
std::string to_table(const OpCount& c);

}  // namespace lia
