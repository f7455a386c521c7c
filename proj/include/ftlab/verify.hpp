// Copyright 2026 The ftlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace ftlab {

/// Outcome of one deterministic self-check suite.
struct SuiteResult {
    std::string name;
    bool passed = true;
    int checks = 0;
    std::vector<std::string> failures;
};

/// Which physical per-qubit gate realizes the logical S; the shipped
/// convention is the -pi/4 rotation (S_DAG). The flipped variant exists so
/// tests can prove the golden suite catches a wrong convention.
enum class SGateConvention { transversal_s_dag, transversal_s };

SuiteResult verify_pauli_suite();
SuiteResult verify_hamming_suite();
SuiteResult verify_codeword_suite();
SuiteResult verify_transversal_suite(
    SGateConvention convention = SGateConvention::transversal_s_dag);
SuiteResult verify_ec_suite();
SuiteResult verify_preparation_suite();
SuiteResult verify_tgadget_suite();
SuiteResult verify_recursion_suite();

/// All suites, optionally filtered by name.
std::vector<SuiteResult> run_verification_suites(const std::string& only = "");

std::vector<std::string> verification_suite_names();

}  // namespace ftlab
