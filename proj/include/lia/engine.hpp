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

#include <map>

#include "lia/bench.hpp"
#include "lia/fuzzy.hpp"

namespace lia {

struct InferenceReport {
    OpCount counts;  // derived from dimensions, not instrumented
    /// Named scalar/vector intermediates of interest (similarity values,
    /// cascade stage outputs).  Recorded for the first rule only.
    std::map<std::string, std::vector<double>> intermediates;
    /// Admission-hypothesis ledger for the engines that gate on one.
    std::vector<std::pair<std::string, std::string>> admission;
};

struct InferenceResult {
    FuzzySet output;
    InferenceReport report;
};

/// Joint membership tensor A(...A(D1(x1),D2(x2))...,Dm(xm)), flattened
/// row-major (last input fastest).  For m > 2 the combiner must be
/// grid-associative so the fold order is immaterial.
std::vector<double> combine_antecedents(const Aggregation& a,
                                        const std::vector<FuzzySet>& sets);

InferenceResult bks_classical(const MISOSystem& sys,
                              const std::vector<FuzzySet>& inputs);
InferenceResult bks_hierarchical(const MISOSystem& sys,
                                 const std::vector<FuzzySet>& inputs);
InferenceResult sbr_classical(const MISOSystem& sys,
                              const std::vector<FuzzySet>& inputs);
InferenceResult sbr_hierarchical(const MISOSystem& sys,
                                 const std::vector<FuzzySet>& inputs);
InferenceResult tip_classical(const MISOSystem& sys,
                              const std::vector<FuzzySet>& inputs);
InferenceResult tip_hierarchical(const MISOSystem& sys,
                                 const std::vector<FuzzySet>& inputs);

InferenceResult bks_classical(const MISOSystem& sys, const SingletonInput& in);
InferenceResult bks_hierarchical(const MISOSystem& sys,
                                 const SingletonInput& in);
InferenceResult sbr_classical(const MISOSystem& sys, const SingletonInput& in);
InferenceResult sbr_hierarchical(const MISOSystem& sys,
                                 const SingletonInput& in);
InferenceResult tip_classical(const MISOSystem& sys, const SingletonInput& in);
InferenceResult tip_hierarchical(const MISOSystem& sys,
                                 const SingletonInput& in);

/// Dispatch by engine id {bks, sbr, tip} and mode {classical, hierarchical}.
InferenceResult run_engine(const std::string& engine, const std::string& mode,
                           const MISOSystem& sys,
                           const std::vector<FuzzySet>& inputs);

}  // namespace lia
