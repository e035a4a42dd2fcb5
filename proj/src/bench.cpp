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
#include "lia/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "lia/error.hpp"

namespace lia {

namespace {

long long product(const std::vector<std::size_t>& v) {
    long long p = 1;
    for (std::size_t n : v) p *= static_cast<long long>(n);
    return p;
}

// Cost of folding m sets into the joint tensor left-to-right:
// n1*n2 + n1*n2*n3 + ... ; zero for a single set.
long long joint_cost(const std::vector<std::size_t>& v) {
    long long cost = 0, acc = static_cast<long long>(v.empty() ? 0 : v[0]);
    for (std::size_t k = 1; k < v.size(); ++k) {
        acc *= static_cast<long long>(v[k]);
        cost += acc;
    }
    return cost;
}

}  // namespace

OpCount predict_counts(const std::string& engine, const std::string& mode,
                       const std::vector<std::size_t>& input_sizes,
                       std::size_t output_size,
                       const std::vector<std::size_t>& support_cells,
                       std::size_t joint_support_cells) {
    if (input_sizes.empty()) throw ParamError("need at least one input size");
    for (std::size_t s : input_sizes)
        if (s == 0) throw ParamError("input sizes must be positive");
    if (output_size == 0) throw ParamError("output size must be positive");
    std::vector<std::size_t> supp = support_cells;
    if (supp.empty()) supp.assign(input_sizes.size(), 1);
    if (supp.size() != input_sizes.size())
        throw ParamError("support_cells must match input_sizes");

    const std::size_t m = input_sizes.size();
    const long long cells = product(input_sizes);
    const long long n = static_cast<long long>(output_size);
    const bool classical = mode == "classical";
    if (!classical && mode != "hierarchical")
        throw ParamError("mode must be classical or hierarchical");

    OpCount c;
    auto axis = [&](std::size_t i) { return std::to_string(i + 1); };

    // With a single input the classical and hierarchical decompositions
    // coincide; route through the per-axis form.
    if (classical && m >= 2) {
        if (engine == "bks") {
            c.stages = {{"joint antecedent", joint_cost(input_sizes)},
                        {"joint input", joint_cost(input_sizes)},
                        {"A(joint input, joint antecedent)", cells},
                        {"sup fold", cells - 1},
                        {"implication", n}};
        } else if (engine == "sbr") {
            c.stages = {{"joint antecedent", joint_cost(input_sizes)},
                        {"joint input", joint_cost(input_sizes)},
                        {"similarity",
                         2 * static_cast<long long>(joint_support_cells) - 1},
                        {"A(S, joint antecedent)", cells},
                        {"implication", cells * n},
                        {"sup fold", (cells - 1) * n}};
        } else if (engine == "tip") {
            c.stages = {{"joint antecedent", joint_cost(input_sizes)},
                        {"joint input", joint_cost(input_sizes)},
                        {"I(joint antecedent, B)", cells * n},
                        {"A(I, joint input)", cells * n},
                        {"sup fold", (cells - 1) * n}};
        } else {
            throw ParamError("unknown engine '" + engine + "'");
        }
        return c;
    }

    if (engine != "bks" && engine != "sbr" && engine != "tip")
        throw ParamError("unknown engine '" + engine + "'");
    // Per-axis stages, innermost (= last input) first.
    for (std::size_t k = m; k-- > 0;) {
        const long long ni = static_cast<long long>(input_sizes[k]);
        const long long si = static_cast<long long>(supp[k]);
        if (engine == "bks") {
            c.stages.emplace_back("A(D" + axis(k) + "', D" + axis(k) + ")",
                                  ni);
            c.stages.emplace_back("sup fold U" + axis(k), ni - 1);
            c.stages.emplace_back("implication stage " + axis(k), n);
        } else if (engine == "sbr") {
            c.stages.emplace_back("similarity " + axis(k), 2 * si - 1);
            c.stages.emplace_back("A(S" + axis(k) + ", D" + axis(k) + ")",
                                  ni);
            c.stages.emplace_back("implication stage " + axis(k), ni * n);
            c.stages.emplace_back("sup fold U" + axis(k), (ni - 1) * n);
        } else {
            c.stages.emplace_back("implication stage " + axis(k), ni * n);
            c.stages.emplace_back("A stage " + axis(k), ni * n);
            c.stages.emplace_back("sup fold U" + axis(k), (ni - 1) * n);
        }
    }
    return c;
}

std::string to_csv(const OpCount& c) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "stage,count\n";
    for (const auto& s : c.stages) os << s.first << "," << s.second << "\n";
    os << "total," << c.total() << "\n";
    return os.str();
}

std::string to_table(const OpCount& c) {
    std::size_t width = 5;
    for (const auto& s : c.stages) width = std::max(width, s.first.size());
    std::ostringstream os;
    os.imbue(std::locale::classic());
    for (const auto& s : c.stages)
        os << std::left << std::setw(static_cast<int>(width) + 2) << s.first
           << s.second << "\n";
    os << std::left << std::setw(static_cast<int>(width) + 2) << "total"
       << c.total() << "\n";
    return os.str();
}

std::string complexity_report(
    const std::vector<std::pair<std::string, std::string>>& engines,
    const std::vector<SizeSpec>& sizes, bool csv) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    auto shape = [](const SizeSpec& s) {
        std::string out;
        for (std::size_t i = 0; i < s.inputs.size(); ++i) {
            if (i) out += "x";
            out += std::to_string(s.inputs[i]);
        }
        return out + "->" + std::to_string(s.output);
    };
    auto storage = [](const std::string& mode, const SizeSpec& s) {
        if (mode == "classical" && s.inputs.size() >= 2) {
            std::string out;
            for (std::size_t i = 0; i < s.inputs.size(); ++i) {
                if (i) out += "x";
                out += std::to_string(s.inputs[i]);
            }
            return out + " tensor";
        }
        std::size_t ni = *std::max_element(s.inputs.begin(), s.inputs.end());
        return std::to_string(ni) + "x" + std::to_string(s.output) +
               " stage matrix";
    };

    if (csv) {
        os << "engine,mode,shape,total,peak_storage\n";
        for (const auto& e : engines)
            for (const auto& s : sizes)
                os << e.first << "," << e.second << "," << shape(s) << ","
                   << predict_counts(e.first, e.second, s.inputs, s.output)
                          .total()
                   << "," << storage(e.second, s) << "\n";
        return os.str();
    }
    os << std::left << std::setw(8) << "engine" << std::setw(14) << "mode"
       << std::setw(14) << "shape" << std::setw(10) << "total"
       << "peak storage\n";
    for (const auto& e : engines)
        for (const auto& s : sizes)
            os << std::left << std::setw(8) << e.first << std::setw(14)
               << e.second << std::setw(14) << shape(s) << std::setw(10)
               << predict_counts(e.first, e.second, s.inputs, s.output)
                      .total()
               << storage(e.second, s) << "\n";
    return os.str();
}

}  // namespace lia
