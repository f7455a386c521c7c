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

#include "ftlab/pauli_decompose.hpp"

#include <stdexcept>

namespace ftlab {

PauliDecomposition pauli_decompose(const std::vector<cdouble>& flat, size_t rows, size_t cols) {
    if (rows != 2 || cols != 2 || flat.size() != 4) {
        throw std::invalid_argument("pauli_decompose requires a 2x2 matrix");
    }
    Mat2 u{{flat[0], flat[1], flat[2], flat[3]}};
    return pauli_decompose(u);
}

}  // namespace ftlab
