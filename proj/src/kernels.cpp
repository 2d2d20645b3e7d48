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

#include "aqsim/kernels.hpp"

#include <bit>
#include <cmath>

namespace aqsim::kernels {

namespace {

constexpr std::int64_t kReduceBlock = 4096;

inline double sign_of_parity(std::uint64_t x) {
  return (std::popcount(x) & 1) ? -1.0 : 1.0;
}

}  // namespace

void csr_matvec_serial(const CsrMatrix& a, const complexd* x, complexd* y) {
  for (std::int64_t r = 0; r < a.rows; ++r) {
    complexd acc{0.0, 0.0};
    for (std::int64_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      acc += a.val[k] * x[a.col[k]];
    }
    y[r] = acc;
  }
}

void csr_matvec_omp(const CsrMatrix& a, const complexd* x, complexd* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < a.rows; ++r) {
    complexd acc{0.0, 0.0};
    for (std::int64_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
      acc += a.val[k] * x[a.col[k]];
    }
    y[r] = acc;
  }
}

void pauli_matvec_serial(std::span<const MaskedPauliTerm> terms,
                         std::int64_t dim, const complexd* x, complexd* y) {
  for (std::int64_t k = 0; k < dim; ++k) {
    complexd acc{0.0, 0.0};
    for (const MaskedPauliTerm& t : terms) {
      const std::uint64_t j = static_cast<std::uint64_t>(k) ^ t.flip_mask;
      acc += t.coeff * sign_of_parity(j & t.sign_mask) * x[j];
    }
    y[k] = acc;
  }
}

void pauli_matvec_omp(std::span<const MaskedPauliTerm> terms, std::int64_t dim,
                      const complexd* x, complexd* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < dim; ++k) {
    complexd acc{0.0, 0.0};
    for (const MaskedPauliTerm& t : terms) {
      const std::uint64_t j = static_cast<std::uint64_t>(k) ^ t.flip_mask;
      acc += t.coeff * sign_of_parity(j & t.sign_mask) * x[j];
    }
    y[k] = acc;
  }
}

namespace {

inline complexd dot_block(const complexd* a, const complexd* b,
                          std::int64_t n) {
  complexd acc{0.0, 0.0};
  for (std::int64_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double nrm2sq_block(const complexd* a, std::int64_t n) {
  double acc = 0.0;
  for (std::int64_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

}  // namespace

complexd dot_serial(std::span<const complexd> a, std::span<const complexd> b) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  complexd acc{0.0, 0.0};
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t lo = blk * kReduceBlock;
    const std::int64_t len = std::min(kReduceBlock, n - lo);
    acc += dot_block(a.data() + lo, b.data() + lo, len);
  }
  return acc;
}

complexd dot_omp(std::span<const complexd> a, std::span<const complexd> b) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<complexd> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t lo = blk * kReduceBlock;
    const std::int64_t len = std::min(kReduceBlock, n - lo);
    partial[blk] = dot_block(a.data() + lo, b.data() + lo, len);
  }
  complexd acc{0.0, 0.0};
  for (complexd p : partial) acc += p;
  return acc;
}

double nrm2_serial(std::span<const complexd> a) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  double acc = 0.0;
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t lo = blk * kReduceBlock;
    const std::int64_t len = std::min(kReduceBlock, n - lo);
    acc += nrm2sq_block(a.data() + lo, len);
  }
  return std::sqrt(acc);
}

double nrm2_omp(std::span<const complexd> a) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < nblocks; ++blk) {
    const std::int64_t lo = blk * kReduceBlock;
    const std::int64_t len = std::min(kReduceBlock, n - lo);
    partial[blk] = nrm2sq_block(a.data() + lo, len);
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return std::sqrt(acc);
}

void axpy_serial(complexd alpha, std::span<const complexd> x,
                 std::span<complexd> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_omp(complexd alpha, std::span<const complexd> x,
              std::span<complexd> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(complexd alpha, std::span<complexd> x) {
  for (complexd& v : x) v *= alpha;
}

void csr_matvec(const CsrMatrix& a, const complexd* x, complexd* y) {
  if (a.nnz() >= kParallelCutoff) {
    csr_matvec_omp(a, x, y);
  } else {
    csr_matvec_serial(a, x, y);
  }
}

void pauli_matvec(std::span<const MaskedPauliTerm> terms, std::int64_t dim,
                  const complexd* x, complexd* y) {
  if (dim * static_cast<std::int64_t>(terms.size()) >= kParallelCutoff) {
    pauli_matvec_omp(terms, dim, x, y);
  } else {
    pauli_matvec_serial(terms, dim, x, y);
  }
}

complexd dot(std::span<const complexd> a, std::span<const complexd> b) {
  return a.size() >= kParallelCutoff ? dot_omp(a, b) : dot_serial(a, b);
}

double nrm2(std::span<const complexd> a) {
  return a.size() >= kParallelCutoff ? nrm2_omp(a) : nrm2_serial(a);
}

void axpy(complexd alpha, std::span<const complexd> x, std::span<complexd> y) {
  if (x.size() >= kParallelCutoff) {
    axpy_omp(alpha, x, y);
  } else {
    axpy_serial(alpha, x, y);
  }
}

}  // namespace aqsim::kernels
