// Copyright 2026 The aqsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQSIM_KERNELS_HPP
#define AQSIM_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace aqsim {

using complexd = std::complex<double>;

/// Compressed-sparse-row matrix over complex doubles. Column indices within a
/// row are strictly increasing.
struct CsrMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::int64_t> row_ptr;  // size rows+1
  std::vector<std::int32_t> col;
  std::vector<complexd> val;

  std::int64_t nnz() const { return static_cast<std::int64_t>(val.size()); }
};

/// One Pauli tensor product in bit-mask form, acting on computational basis
/// states of n qubits (site i <-> bit i):
///
///   P |j> = coeff * parity(j & sign_mask) * |j ^ flip_mask>
///
/// where parity(x) = (-1)^popcount(x). coeff absorbs the i^(#Y) factor, so a
/// list of MaskedPauliTerm is a complete sparse representation of a Pauli sum.
struct MaskedPauliTerm {
  std::uint64_t flip_mask = 0;  // bits where the letter is X or Y
  std::uint64_t sign_mask = 0;  // bits where the letter is Y or Z
  complexd coeff{0.0, 0.0};
};

namespace kernels {

// y = A x. The OpenMP variants parallelize over output rows, so every y[k] is
// accumulated by exactly one thread in a fixed order: results are bitwise
// identical to the serial variants for any thread count.
void csr_matvec_serial(const CsrMatrix& a, const complexd* x, complexd* y);
void csr_matvec_omp(const CsrMatrix& a, const complexd* x, complexd* y);

// y = (sum of terms) x over dimension dim = 2^n. Gather form: for output
// index k the source index is k ^ flip_mask.
void pauli_matvec_serial(std::span<const MaskedPauliTerm> terms,
                         std::int64_t dim, const complexd* x, complexd* y);
void pauli_matvec_omp(std::span<const MaskedPauliTerm> terms, std::int64_t dim,
                      const complexd* x, complexd* y);

// Reductions use a fixed block decomposition folded in block order, so the
// parallel variants are bitwise identical to the serial ones.
complexd dot_serial(std::span<const complexd> a, std::span<const complexd> b);
complexd dot_omp(std::span<const complexd> a, std::span<const complexd> b);
double nrm2_serial(std::span<const complexd> a);
double nrm2_omp(std::span<const complexd> a);

void axpy_serial(complexd alpha, std::span<const complexd> x,
                 std::span<complexd> y);
void axpy_omp(complexd alpha, std::span<const complexd> x,
              std::span<complexd> y);
void scale(complexd alpha, std::span<complexd> x);

// Dispatchers: use the OpenMP variant above this many elements of work.
inline constexpr std::int64_t kParallelCutoff = 1 << 12;

void csr_matvec(const CsrMatrix& a, const complexd* x, complexd* y);
void pauli_matvec(std::span<const MaskedPauliTerm> terms, std::int64_t dim,
                  const complexd* x, complexd* y);
complexd dot(std::span<const complexd> a, std::span<const complexd> b);
double nrm2(std::span<const complexd> a);
void axpy(complexd alpha, std::span<const complexd> x, std::span<complexd> y);

}  // namespace kernels
}  // namespace aqsim

#endif  // AQSIM_KERNELS_HPP
