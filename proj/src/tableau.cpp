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

#include "ftlab/tableau.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ftlab {

StabilizerTableau::StabilizerTableau(uint32_t n)
    : n_(n), words_((n + 63) / 64), xs_((2 * n + 1) * words_), zs_((2 * n + 1) * words_),
      signs_(2 * n + 1) {
    if (n == 0) {
        throw std::invalid_argument("tableau needs at least one qubit");
    }
    reset_to_zero();
}

void StabilizerTableau::reset_to_zero() {
    std::fill(xs_.begin(), xs_.end(), 0);
    std::fill(zs_.begin(), zs_.end(), 0);
    std::fill(signs_.begin(), signs_.end(), 0);
    for (uint32_t q = 0; q < n_; q++) {
        xs(q, q >> 6) |= uint64_t{1} << (q & 63);           // destabilizer X_q
        zs(n_ + q, q >> 6) |= uint64_t{1} << (q & 63);      // stabilizer Z_q
    }
}

void StabilizerTableau::apply_gate(GateKind g, uint32_t q0, uint32_t q1, Rng* rng) {
    if (q0 >= n_ || (is_two_qubit(g) && q1 >= n_)) {
        throw std::invalid_argument("qubit index out of range");
    }
    const uint32_t rows = 2 * n_;
    const size_t stride = words_;
    const uint32_t w0 = q0 >> 6;
    const int sh0 = q0 & 63;
    const uint64_t b0 = uint64_t{1} << sh0;
    uint64_t* __restrict xp = xs_.data() + w0;
    uint64_t* __restrict zp = zs_.data() + w0;
    uint8_t* __restrict sp = signs_.data();
    switch (g) {
        case GateKind::H:
            for (uint32_t r = 0; r < rows; r++, xp += stride, zp += stride) {
                uint64_t x = *xp, z = *zp;
                sp[r] ^= uint8_t(((x & z) >> sh0) & 1);
                uint64_t diff = (x ^ z) & b0;
                *xp = x ^ diff;
                *zp = z ^ diff;
            }
            break;
        case GateKind::S:
            for (uint32_t r = 0; r < rows; r++, xp += stride, zp += stride) {
                uint64_t x = *xp, z = *zp;
                sp[r] ^= uint8_t(((x & z) >> sh0) & 1);
                *zp = z ^ (x & b0);
            }
            break;
        case GateKind::S_DAG:
            for (uint32_t r = 0; r < rows; r++, xp += stride, zp += stride) {
                uint64_t x = *xp, z = *zp;
                sp[r] ^= uint8_t(((x & ~z) >> sh0) & 1);
                *zp = z ^ (x & b0);
            }
            break;
        case GateKind::X:
            for (uint32_t r = 0; r < rows; r++, zp += stride) {
                sp[r] ^= uint8_t((*zp >> sh0) & 1);
            }
            break;
        case GateKind::Y:
            for (uint32_t r = 0; r < rows; r++, xp += stride, zp += stride) {
                sp[r] ^= uint8_t(((*xp ^ *zp) >> sh0) & 1);
            }
            break;
        case GateKind::Z:
            for (uint32_t r = 0; r < rows; r++, xp += stride) {
                sp[r] ^= uint8_t((*xp >> sh0) & 1);
            }
            break;
        case GateKind::CNOT: {
            // Control and target words can alias when the qubits share a
            // word, so these pointers stay unrestricted.
            const uint32_t w1 = q1 >> 6;
            const int sh1 = q1 & 63;
            uint64_t* xcp = xs_.data() + w0;
            uint64_t* zcp = zs_.data() + w0;
            uint64_t* xtp = xs_.data() + w1;
            uint64_t* ztp = zs_.data() + w1;
            for (uint32_t r = 0; r < rows;
                 r++, xcp += stride, zcp += stride, xtp += stride, ztp += stride) {
                uint64_t xc = (*xcp >> sh0) & 1;
                uint64_t zc = (*zcp >> sh0) & 1;
                uint64_t xt = (*xtp >> sh1) & 1;
                uint64_t zt = (*ztp >> sh1) & 1;
                sp[r] ^= uint8_t(xc & zt & ~(xt ^ zc) & 1);
                *xtp ^= xc << sh1;
                *zcp ^= zt << sh0;
            }
            break;
        }
        case GateKind::T:
            throw std::invalid_argument("T gate is not a Clifford operation; use the dense backend");
        case GateKind::MEASURE_Z:
        case GateKind::MEASURE_X:
            if (!rng) {
                throw std::invalid_argument("measurement gate requires an rng");
            }
            measure(q0, g == GateKind::MEASURE_Z ? 'Z' : 'X', *rng);
            break;
        case GateKind::PREP_ZERO: {
            if (!rng) {
                throw std::invalid_argument("reset requires an rng");
            }
            if (measure_z(q0, *rng) == 1) {
                apply_gate(GateKind::X, q0);
            }
            break;
        }
    }
}

void StabilizerTableau::apply_pauli(const PauliOperator& p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    // Conjugating each generator row by p flips the row sign exactly when
    // the two anticommute. The Pauli's own i-power is a global phase the
    // tableau does not represent.
    const auto& px = p.x_mask().words();
    const auto& pz = p.z_mask().words();
    for (uint32_t r = 0; r < 2 * n_; r++) {
        size_t overlap = 0;
        for (uint32_t w = 0; w < words_; w++) {
            overlap += std::popcount(xs(r, w) & pz[w]);
            overlap += std::popcount(zs(r, w) & px[w]);
        }
        signs_[r] ^= uint8_t(overlap & 1);
    }
}

void StabilizerTableau::mult_into(uint32_t h, uint32_t i) {
    // Phase of P_i * P_h accumulated from per-qubit i-power contributions.
    const uint64_t* xi = xs_.data() + size_t(i) * words_;
    const uint64_t* zi = zs_.data() + size_t(i) * words_;
    uint64_t* xh = xs_.data() + size_t(h) * words_;
    uint64_t* zh = zs_.data() + size_t(h) * words_;
    int g_sum = 0;
    for (uint32_t w = 0; w < words_; w++) {
        uint64_t x1 = xi[w], z1 = zi[w];
        uint64_t x2 = xh[w], z2 = zh[w];
        uint64_t pos = (x1 & ~z1 & x2 & z2)     // X*Y = iZ
                     | (x1 & z1 & ~x2 & z2)     // Y*Z = iX
                     | (~x1 & z1 & x2 & ~z2);   // Z*X = iY
        uint64_t neg = (x1 & ~z1 & ~x2 & z2)    // X*Z = -iY
                     | (x1 & z1 & x2 & ~z2)     // Y*X = -iZ
                     | (~x1 & z1 & x2 & z2);    // Z*Y = -iX
        g_sum += std::popcount(pos) - std::popcount(neg);
        xh[w] ^= x1;
        zh[w] ^= z1;
    }
    int total = 2 * signs_[h] + 2 * signs_[i] + g_sum;
    total = ((total % 4) + 4) % 4;
    if ((total & 1) && h >= n_) {
        // Stabilizer and scratch rows only ever multiply commuting partners;
        // destabilizer rows may pick up a meaningless +-i that is dropped.
        throw std::logic_error("stabilizer row product phase left the +-1 set");
    }
    signs_[h] = uint8_t((total >> 1) & 1);
}

bool StabilizerTableau::is_deterministic_z(uint32_t q) const {
    const uint32_t w = q >> 6;
    const uint64_t b = uint64_t{1} << (q & 63);
    for (uint32_t p = n_; p < 2 * n_; p++) {
        if (xs(p, w) & b) {
            return false;
        }
    }
    return true;
}

int StabilizerTableau::measure_z(uint32_t q, Rng& rng) {
    const uint32_t w = q >> 6;
    const uint64_t b = uint64_t{1} << (q & 63);
    const size_t stride = words_;
    uint32_t p = 2 * n_;
    {
        const uint64_t* xp = xs_.data() + size_t(n_) * stride + w;
        for (uint32_t r = n_; r < 2 * n_; r++, xp += stride) {
            if (*xp & b) {
                p = r;
                break;
            }
        }
    }
    if (p < 2 * n_) {
        // Random outcome: some stabilizer anticommutes with Z_q.
        const uint64_t* xp = xs_.data() + w;
        for (uint32_t r = 0; r < 2 * n_; r++, xp += stride) {
            if (r != p && (*xp & b)) {
                mult_into(r, p);
            }
        }
        // The measured row becomes the new destabilizer; Z_q replaces it.
        uint32_t d = p - n_;
        for (uint32_t k = 0; k < words_; k++) {
            xs(d, k) = xs(p, k);
            zs(d, k) = zs(p, k);
            xs(p, k) = 0;
            zs(p, k) = 0;
        }
        signs_[d] = signs_[p];
        zs(p, w) = b;
        int outcome = rng.coin() ? 1 : 0;
        signs_[p] = uint8_t(outcome);
        return outcome;
    }
    // Deterministic outcome: accumulate the stabilizer product that equals
    // +-Z_q into the scratch row.
    const uint32_t scratch = 2 * n_;
    for (uint32_t k = 0; k < words_; k++) {
        xs(scratch, k) = 0;
        zs(scratch, k) = 0;
    }
    signs_[scratch] = 0;
    for (uint32_t i = 0; i < n_; i++) {
        if (xs(i, w) & b) {
            mult_into(scratch, i + n_);
        }
    }
    return signs_[scratch];
}

int StabilizerTableau::measure(uint32_t q, char basis, Rng& rng) {
    if (q >= n_) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (basis == 'X') {
        apply_gate(GateKind::H, q);
        int bit = measure_z(q, rng);
        apply_gate(GateKind::H, q);
        return bit;
    }
    if (basis != 'Z') {
        throw std::invalid_argument("measurement basis must be 'Z' or 'X'");
    }
    return measure_z(q, rng);
}

PauliOperator StabilizerTableau::row(uint32_t r) const {
    if (r >= 2 * n_) {
        throw std::invalid_argument("row index out of range");
    }
    PauliOperator p(n_);
    int y_count = 0;
    for (uint32_t q = 0; q < n_; q++) {
        bool x = x_bit(r, q), z = z_bit(r, q);
        p.set_x(q, x);
        p.set_z(q, z);
        y_count += x && z;
    }
    // Rows read as words over I/X/Y/Z with a sign; translate Y = iXZ into
    // the explicit-phase normal form.
    p.set_phase(2 * signs_[r] + y_count);
    return p;
}

void StabilizerTableau::check_invariants() const {
    auto anticommute = [&](uint32_t a, uint32_t b) {
        size_t overlap = 0;
        for (uint32_t w = 0; w < words_; w++) {
            overlap += std::popcount(xs(a, w) & zs(b, w));
            overlap += std::popcount(zs(a, w) & xs(b, w));
        }
        return (overlap & 1) != 0;
    };
    for (uint32_t i = 0; i < n_; i++) {
        for (uint32_t j = 0; j < n_; j++) {
            if (anticommute(n_ + i, n_ + j)) {
                throw std::logic_error("stabilizer rows " + std::to_string(i) + "," +
                                       std::to_string(j) + " anticommute");
            }
            if (anticommute(i, j)) {
                throw std::logic_error("destabilizer rows " + std::to_string(i) + "," +
                                       std::to_string(j) + " anticommute");
            }
            bool expect = i == j;
            if (anticommute(i, n_ + j) != expect) {
                throw std::logic_error("destabilizer/stabilizer pairing broken at " +
                                       std::to_string(i) + "," + std::to_string(j));
            }
        }
    }
    // Row independence over GF(2): eliminate on the (x|z) matrix.
    std::vector<std::vector<uint64_t>> m(2 * n_);
    for (uint32_t r = 0; r < 2 * n_; r++) {
        m[r].resize(2 * words_);
        for (uint32_t w = 0; w < words_; w++) {
            m[r][w] = xs(r, w);
            m[r][words_ + w] = zs(r, w);
        }
    }
    uint32_t rank = 0;
    for (uint32_t col = 0; col < 2 * n_ && rank < 2 * n_; col++) {
        uint32_t cw = (col % n_) >> 6;
        if (col >= n_) {
            cw += words_;
        }
        uint64_t cb = uint64_t{1} << ((col % n_) & 63);
        uint32_t pivot = rank;
        while (pivot < 2 * n_ && !(m[pivot][cw] & cb)) {
            pivot++;
        }
        if (pivot == 2 * n_) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (uint32_t r = 0; r < 2 * n_; r++) {
            if (r != rank && (m[r][cw] & cb)) {
                for (uint32_t w = 0; w < 2 * words_; w++) {
                    m[r][w] ^= m[rank][w];
                }
            }
        }
        rank++;
    }
    if (rank != 2 * n_) {
        throw std::logic_error("tableau rows lost full rank");
    }
}

}  // namespace ftlab
