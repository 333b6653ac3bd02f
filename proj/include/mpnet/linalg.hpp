#pragma once

#include <cstddef>
#include <vector>

namespace mpnet {

using Vec = std::vector<double>;

// Dense row-major matrix of doubles. The workhorse container for signals,
// feature maps and manifold points alike; kept deliberately small.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }

  double& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  double* row(int i) { return d_.data() + static_cast<size_t>(i) * cols_; }
  const double* row(int i) const { return d_.data() + static_cast<size_t>(i) * cols_; }

  double* data() { return d_.data(); }
  const double* data() const { return d_.data(); }

  std::vector<double>& raw() { return d_; }
  const std::vector<double>& raw() const { return d_; }

  static Mat identity(int n);

  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> d_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(Mat a, double s);
Mat operator*(double s, Mat a);

// c += a * b on raw spans.
void axpy(double a, const double* x, double* y, int n);
double dot(const double* x, const double* y, int n);

// C = A * B
Mat matmul(const Mat& a, const Mat& b);
// C = A * B^T
Mat matmul_nt(const Mat& a, const Mat& b);
// C = A^T * B
Mat matmul_tn(const Mat& a, const Mat& b);
// A * A^T, exploiting symmetry of the result.
Mat gram(const Mat& a);
// A[:, c0:c1] * A[:, c0:c1]^T without materializing the slice.
Mat gram_cols(const Mat& a, int c0, int c1);

Mat transpose(const Mat& a);
// (A + A^T) / 2
Mat symmetrize(const Mat& a);

double frob_norm(const Mat& a);
double max_abs(const Mat& a);
double trace(const Mat& a);
bool all_finite(const Mat& a);
bool all_finite(const Vec& v);

}  // namespace mpnet
