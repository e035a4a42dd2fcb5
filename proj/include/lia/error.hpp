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

#include <stdexcept>
#include <string>

namespace lia {

/// Base class for all liafz errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument fell outside the unit interval / unit square.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Malformed operator descriptor or parameters (bad generator, non-bijective
/// automorphism, kind unknown, ...).
class ParamError : public Error {
public:
    explicit ParamError(const std::string& what) : Error(what) {}
};

/// A construction was attempted whose hypotheses fail (non-associative
/// aggregation, candidate violating the implication axioms, ...).  The
/// message names the failed hypothesis and, when available, a witness.
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& what) : Error(what) {}
};

/// An inference engine refused a system because one of its admission
/// hypotheses does not hold.
class AdmissionError : public Error {
public:
    explicit AdmissionError(const std::string& what) : Error(what) {}
};

}  // namespace lia
