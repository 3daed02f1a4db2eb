// Copyright 2026 The qmeas developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately separate from the library's computation paths.

#pragma once

#include <cmath>
#include <vector>

#include "qmeas/qmeas.hpp"

namespace oracle {

using qmeas::CMatrix;
using qmeas::Complex;
using qmeas::CVector;
using qmeas::Index;

// Kronecker product by the flat index formula
// (M (x) N)[i*n + k, j*n + l] = M[i, j] * N[k, l].
inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Partial trace over the second factor by direct summation over basis
// kets: <i| Tr_A[M] |j> = sum_k <i (x) k| M |j (x) k>, with the bras and
// kets built explicitly.
inline CMatrix partial_trace_second(const CMatrix &m, Index dimFirst,
                                    Index dimSecond) {
  auto basis_ket = [&](Index i, Index k) {
    CVector v = CVector::Zero(dimFirst * dimSecond);
    v(i * dimSecond + k) = 1.0;
    return v;
  };
  CMatrix out = CMatrix::Zero(dimFirst, dimFirst);
  for (Index i = 0; i < dimFirst; ++i)
    for (Index j = 0; j < dimFirst; ++j)
      for (Index k = 0; k < dimSecond; ++k)
        out(i, j) += basis_ket(i, k).dot(m * basis_ket(j, k));
  return out;
}

// Shannon entropy of an eigenvalue list in nats, 0 ln 0 = 0.
inline double entropy_from_eigenvalues(const std::vector<double> &lambdas) {
  double s = 0.0;
  for (double l : lambdas)
    if (l > 0.0) s -= l * std::log(l);
  return s;
}

// Entrywise sum_n E_n rho E_n through explicit index loops.
inline CMatrix nonselective_sum(const std::vector<CMatrix> &projectors,
                                const CMatrix &rho) {
  const Index d = rho.rows();
  CMatrix out = CMatrix::Zero(d, d);
  for (const CMatrix &e : projectors)
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (Index a = 0; a < d; ++a)
          for (Index b = 0; b < d; ++b)
            out(i, j) += e(i, a) * rho(a, b) * e(b, j);
  return out;
}

}  // namespace oracle
