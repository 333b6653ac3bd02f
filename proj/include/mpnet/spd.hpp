#pragma once

#include <functional>
#include <memory>

#include "mpnet/linalg.hpp"

namespace mpnet {

using ScalarFn = std::function<double(double)>;

// Eigendecomposition of a symmetric matrix: columns of `vectors` are the
// eigenvectors, `values` ascending. Ties keep the solver's first-occurrence
// column order. Downstream code must never rely on eigenvector sign.
struct EigenPair {
  Mat vectors;
  Vec values;
  int dim() const { return vectors.rows(); }
};

// Symmetric matrix; construction symmetrizes via (M + M^T)/2 so the
// invariant entries[i][j] == entries[j][i] holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Mat& m) : m_(symmetrize(m)) {}

  // Skips the symmetrizing pass. Caller guarantees exact symmetry (e.g.
  // the matrix was assembled entry-mirrored).
  static SymMatrix trusted(Mat m);

  int dim() const { return m_.rows(); }
  const Mat& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat m_;
};

// Symmetric positive definite matrix with a lazily computed, shared
// eigendecomposition cache. Positivity is checked by validate_spd, not at
// construction; operations that need the spectrum fail loudly instead.
class SpdMatrix {
 public:
  SpdMatrix() = default;
  explicit SpdMatrix(SymMatrix s) : s_(std::move(s)) {}
  SpdMatrix(SymMatrix s, EigenPair eig)
      : s_(std::move(s)), eig_(std::make_shared<EigenPair>(std::move(eig))) {}

  int dim() const { return s_.dim(); }
  const SymMatrix& sym() const { return s_; }
  const Mat& mat() const { return s_.mat(); }

  bool has_eigen() const { return eig_ != nullptr; }
  // Computes and caches on first call.
  const EigenPair& eigen() const;

 private:
  SymMatrix s_;
  mutable std::shared_ptr<EigenPair> eig_;
};

// Cyclic Jacobi eigensolver, threshold sweeps, 30-sweep cap. Deterministic:
// identical input bytes give identical output bytes. Throws InvalidInput on
// non-finite entries, NumericalFailure if the off-diagonal mass has not
// collapsed after the sweep cap.
EigenPair eigh_sym(const SymMatrix& m);

// U diag(f(lambda)) U^T from a precomputed decomposition. Throws DomainError
// if f returns a non-finite value on some eigenvalue.
SymMatrix sym_fun(const EigenPair& eig, const ScalarFn& f);

// Matrix function of an SPD matrix through its (cached) eigendecomposition.
SymMatrix spd_fun(const SpdMatrix& s, const ScalarFn& f);

// Exact differential of sym_fun/spd_fun: given the upstream gradient G of a
// scalar loss with respect to f(S), returns the gradient with respect to S:
//
//   U (L o (U^T G U)) U^T,   L_ij = (f(l_i) - f(l_j)) / (l_i - l_j)
//
// with the midpoint-derivative rule L_ij = f'((l_i + l_j)/2) whenever
// |l_i - l_j| <= 1e-10 * max|l| (continuous limit of the divided
// difference, covers repeated eigenvalues).
SymMatrix loewner_backward(const EigenPair& eig, const ScalarFn& f, const ScalarFn& fprime,
                           const SymMatrix& upstream);
SymMatrix loewner_backward(const SpdMatrix& s, const ScalarFn& f, const ScalarFn& fprime,
                           const SymMatrix& upstream);

// True iff m is symmetric within tol and its smallest eigenvalue exceeds tol.
bool validate_spd(const SymMatrix& m, double tol);

SymMatrix spd_log(const SpdMatrix& s);
SymMatrix sym_exp(const SymMatrix& m);

}  // namespace mpnet
