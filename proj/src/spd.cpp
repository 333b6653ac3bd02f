#include "mpnet/spd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mpnet/errors.hpp"

namespace mpnet {

SymMatrix SymMatrix::trusted(Mat m) {
  if (m.rows() != m.cols()) throw InvalidInput("SymMatrix: matrix not square");
  SymMatrix s;
  s.m_ = std::move(m);
  return s;
}

const EigenPair& SpdMatrix::eigen() const {
  if (!eig_) eig_ = std::make_shared<EigenPair>(eigh_sym(s_));
  return *eig_;
}

namespace {

// One Jacobi rotation zeroing a(p,q). Updates rows/columns p,q of a and
// columns p,q of u. Rotation parameters follow the symmetric Schur
// decomposition (stable t = sign(tau)/(|tau| + sqrt(1+tau^2)) form).
void jacobi_rotate(Mat& a, Mat& u, int p, int q) {
  const int n = a.rows();
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);

  const double tau = (aqq - app) / (2.0 * apq);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  double* rp = a.row(p);
  double* rq = a.row(q);
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = rp[k];
    const double akq = rq[k];
    rp[k] = c * akp - s * akq;
    rq[k] = s * akp + c * akq;
  }
  // Mirror the updated rows into the columns.
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    a(k, p) = rp[k];
    a(k, q) = rq[k];
  }

  for (int k = 0; k < n; ++k) {
    const double ukp = u(k, p);
    const double ukq = u(k, q);
    u(k, p) = c * ukp - s * ukq;
    u(k, q) = s * ukp + c * ukq;
  }
}

double offdiag_max(const Mat& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
  return m;
}

}  // namespace

EigenPair eigh_sym(const SymMatrix& m) {
  if (!all_finite(m.mat())) throw InvalidInput("eigh_sym: non-finite entries");
  const int n = m.dim();
  if (n < 1) throw InvalidInput("eigh_sym: empty matrix");

  Mat a = m.mat();
  Mat u = Mat::identity(n);

  const double scale = frob_norm(a);
  if (scale > 0.0 && n > 1) {
    constexpr int kMaxSweeps = 30;
    const double tol = 1e-15 * scale;
    const double skip = 1e-18 * scale;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (offdiag_max(a) <= tol) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q)
          if (std::fabs(a(p, q)) > skip) jacobi_rotate(a, u, p, q);
    }
    if (!converged && offdiag_max(a) > 1e-10 * scale)
      throw NumericalFailure("eigh_sym: Jacobi sweeps did not converge");
  }

  // Ascending eigenvalues; stable sort keeps first-occurrence column order
  // for ties.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenPair out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = u(i, order[j]);
  }
  return out;
}

SymMatrix sym_fun(const EigenPair& eig, const ScalarFn& f) {
  const int n = eig.dim();
  Vec fv(n);
  for (int i = 0; i < n; ++i) {
    fv[i] = f(eig.values[i]);
    if (!std::isfinite(fv[i])) throw DomainError("sym_fun: f undefined on eigenvalue");
  }
  // U diag(fv) U^T, assembled upper-triangle and mirrored so the result is
  // exactly symmetric.
  const Mat& u = eig.vectors;
  Mat out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += u(i, k) * fv[k] * u(j, k);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return SymMatrix::trusted(std::move(out));
}

SymMatrix spd_fun(const SpdMatrix& s, const ScalarFn& f) { return sym_fun(s.eigen(), f); }

SymMatrix loewner_backward(const EigenPair& eig, const ScalarFn& f, const ScalarFn& fprime,
                           const SymMatrix& upstream) {
  const int n = eig.dim();
  if (upstream.dim() != n) throw InvalidInput("loewner_backward: gradient dimension mismatch");

  Vec fv(n);
  double lmax = 0.0;
  for (int i = 0; i < n; ++i) {
    fv[i] = f(eig.values[i]);
    if (!std::isfinite(fv[i])) throw DomainError("loewner_backward: f undefined on eigenvalue");
    lmax = std::max(lmax, std::fabs(eig.values[i]));
  }
  const double tau_eig = 1e-10 * lmax;

  // L o (U^T G U), then back to the standard basis.
  Mat inner = matmul_tn(eig.vectors, matmul(upstream.mat(), eig.vectors));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double li = eig.values[i], lj = eig.values[j];
      double coeff;
      if (std::fabs(li - lj) > tau_eig)
        coeff = (fv[i] - fv[j]) / (li - lj);
      else
        coeff = fprime(0.5 * (li + lj));
      inner(i, j) *= coeff;
    }
  }
  Mat out = matmul(eig.vectors, matmul_nt(inner, eig.vectors));
  return SymMatrix(out);
}

SymMatrix loewner_backward(const SpdMatrix& s, const ScalarFn& f, const ScalarFn& fprime,
                           const SymMatrix& upstream) {
  return loewner_backward(s.eigen(), f, fprime, upstream);
}

bool validate_spd(const SymMatrix& m, double tol) {
  if (m.dim() < 1 || !all_finite(m.mat())) return false;
  // SymMatrix guarantees symmetry by construction. min eigenvalue > tol is
  // equivalent to M - tol*I being positive definite, which a Cholesky
  // factorization decides at a third of the eigensolver's cost.
  const int n = m.dim();
  Mat l(n, n);
  for (int j = 0; j < n; ++j) {
    double diag = m(j, j) - tol;
    for (int k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (diag <= 0.0 || !std::isfinite(diag)) return false;
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return true;
}

SymMatrix spd_log(const SpdMatrix& s) {
  const EigenPair& eig = s.eigen();
  if (eig.values.front() <= 0.0) throw DomainError("spd_log: matrix not positive definite");
  return sym_fun(eig, [](double x) { return std::log(x); });
}

SymMatrix sym_exp(const SymMatrix& m) {
  return sym_fun(eigh_sym(m), [](double x) { return std::exp(x); });
}

}  // namespace mpnet
