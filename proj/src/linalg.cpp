#include "mpnet/linalg.hpp"

#include <cmath>
#include <cstring>

#include "mpnet/errors.hpp"

namespace mpnet {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (!same_shape(o)) throw InvalidInput("Mat += shape mismatch");
  for (size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (!same_shape(o)) throw InvalidInput("Mat -= shape mismatch");
  for (size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& x : d_) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(Mat a, double s) { return a *= s; }
Mat operator*(double s, Mat a) { return a *= s; }

void axpy(double a, const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matmul: inner dimension mismatch");
  Mat c(a.rows(), b.cols());
  const int k_dim = a.cols(), n = b.cols();
  for (int i = 0; i < a.rows(); ++i) {
    double* ci = c.row(i);
    const double* ai = a.row(i);
    for (int k = 0; k < k_dim; ++k) {
      const double aik = ai[k];
      if (aik != 0.0) axpy(aik, b.row(k), ci, n);
    }
  }
  return c;
}

Mat matmul_nt(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw InvalidInput("matmul_nt: inner dimension mismatch");
  Mat c(a.rows(), b.rows());
  const int n = a.cols();
  for (int i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (int j = 0; j < b.rows(); ++j) ci[j] = dot(ai, b.row(j), n);
  }
  return c;
}

Mat matmul_tn(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw InvalidInput("matmul_tn: inner dimension mismatch");
  Mat c(a.cols(), b.cols());
  const int n = b.cols();
  for (int m = 0; m < a.rows(); ++m) {
    const double* am = a.row(m);
    const double* bm = b.row(m);
    for (int i = 0; i < a.cols(); ++i) {
      const double w = am[i];
      if (w != 0.0) axpy(w, bm, c.row(i), n);
    }
  }
  return c;
}

Mat gram(const Mat& a) { return gram_cols(a, 0, a.cols()); }

Mat gram_cols(const Mat& a, int c0, int c1) {
  if (c0 < 0 || c1 > a.cols() || c0 >= c1) throw InvalidInput("gram_cols: bad column range");
  const int d = a.rows(), n = c1 - c0;
  Mat c(d, d);
  for (int i = 0; i < d; ++i) {
    const double* ai = a.row(i) + c0;
    for (int j = i; j < d; ++j) {
      const double v = dot(ai, a.row(j) + c0, n);
      c(i, j) = v;
      c(j, i) = v;
    }
  }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat symmetrize(const Mat& a) {
  if (a.rows() != a.cols()) throw InvalidInput("symmetrize: matrix not square");
  Mat s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

double frob_norm(const Mat& a) {
  double s = 0.0;
  for (double x : a.raw()) s += x * x;
  return std::sqrt(s);
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (double x : a.raw()) m = std::max(m, std::fabs(x));
  return m;
}

double trace(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
  return s;
}

bool all_finite(const Mat& a) {
  for (double x : a.raw())
    if (!std::isfinite(x)) return false;
  return true;
}

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace mpnet
