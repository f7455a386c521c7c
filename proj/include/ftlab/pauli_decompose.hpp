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

#include <array>
#include <complex>
#include <vector>

namespace ftlab {

using cdouble = std::complex<double>;

/// Dense 2x2 complex matrix, row-major: m[0] m[1] / m[2] m[3].
struct Mat2 {
    std::array<cdouble, 4> m{};

    cdouble& operator()(int r, int c) { return m[2 * r + c]; }
    const cdouble& operator()(int r, int c) const { return m[2 * r + c]; }

    Mat2 operator*(const Mat2& b) const {
        Mat2 out;
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                out(r, c) = (*this)(r, 0) * b(0, c) + (*this)(r, 1) * b(1, c);
            }
        }
        return out;
    }

    Mat2 operator+(const Mat2& b) const {
        Mat2 out;
        for (int k = 0; k < 4; k++) {
            out.m[k] = m[k] + b.m[k];
        }
        return out;
    }

    Mat2 scaled(cdouble s) const {
        Mat2 out;
        for (int k = 0; k < 4; k++) {
            out.m[k] = m[k] * s;
        }
        return out;
    }

    cdouble trace() const { return m[0] + m[3]; }

    static Mat2 of(cdouble a, cdouble b, cdouble c, cdouble d) {
        Mat2 m;
        m.m = {a, b, c, d};
        return m;
    }

    static Mat2 identity() { return of(1, 0, 0, 1); }
    static Mat2 pauli_x() { return of(0, 1, 1, 0); }
    static Mat2 pauli_y() { return of(0, {0, -1}, {0, 1}, 0); }
    static Mat2 pauli_z() { return of(1, 0, 0, -1); }
};

/// Coefficients of a 2x2 matrix in the I, X, Y, Z basis.
struct PauliDecomposition {
    cdouble alpha;  // I
    cdouble beta;   // X
    cdouble gamma;  // Y
    cdouble delta;  // Z

    /// |alpha|^2 + |beta|^2 + |gamma|^2 + |delta|^2; equals 1 for unitaries.
    double norm_squared() const {
        return std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
    }

    Mat2 reconstruct() const {
        return Mat2::identity().scaled(alpha) + Mat2::pauli_x().scaled(beta) +
               Mat2::pauli_y().scaled(gamma) + Mat2::pauli_z().scaled(delta);
    }
};

/// Projects a 2x2 matrix onto the Pauli basis via the trace inner product:
/// alpha = tr(u)/2, beta = tr(X u)/2, gamma = tr(Y u)/2, delta = tr(Z u)/2.
inline PauliDecomposition pauli_decompose(const Mat2& u) {
    return PauliDecomposition{
        u.trace() * 0.5,
        (Mat2::pauli_x() * u).trace() * 0.5,
        (Mat2::pauli_y() * u).trace() * 0.5,
        (Mat2::pauli_z() * u).trace() * 0.5,
    };
}

/// Validating adapter for dynamically-shaped input (row-major).
PauliDecomposition pauli_decompose(const std::vector<cdouble>& flat, size_t rows, size_t cols);

/// diag(1, e^{i theta}).
inline Mat2 rz_matrix(double theta) {
    return Mat2::of(1, 0, 0, std::polar(1.0, theta));
}

}  // namespace ftlab
