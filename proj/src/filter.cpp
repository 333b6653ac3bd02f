#include "mpnet/filter.hpp"

#include <algorithm>
#include <cmath>

#include "mpnet/errors.hpp"

namespace mpnet {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Analog prototype poles of a unity-cutoff Butterworth filter, left
// half-plane, conjugate-symmetric.
std::vector<cplx> butterworth_prototype(int order) {
  std::vector<cplx> poles;
  poles.reserve(order);
  for (int k = 1; k <= order; ++k) {
    const double theta = kPi * (2.0 * k + order - 1.0) / (2.0 * order);
    poles.emplace_back(std::cos(theta), std::sin(theta));
  }
  return poles;
}

double prewarp(double f_hz, double fs) { return 2.0 * fs * std::tan(kPi * f_hz / fs); }

cplx bilinear_pole(cplx s, double fs) { return (2.0 * fs + s) / (2.0 * fs - s); }

// Groups digital poles into real-coefficient quadratics. Complex poles are
// conjugate-paired; real poles are paired among themselves. Ordering is
// deterministic: ascending magnitude, then real part.
std::vector<std::pair<double, double>> pair_poles(const std::vector<cplx>& poles) {
  std::vector<cplx> reps;
  std::vector<double> reals;
  for (const cplx& p : poles) {
    if (std::fabs(p.imag()) > 1e-12 * std::max(1.0, std::fabs(p.real()))) {
      if (p.imag() > 0.0) reps.push_back(p);
    } else {
      reals.push_back(p.real());
    }
  }
  std::sort(reps.begin(), reps.end(), [](const cplx& a, const cplx& b) {
    const double ma = std::norm(a), mb = std::norm(b);
    if (ma != mb) return ma < mb;
    return a.real() < b.real();
  });
  std::sort(reals.begin(), reals.end());
  if (reals.size() % 2 != 0) throw NumericalFailure("pair_poles: odd number of real poles");

  std::vector<std::pair<double, double>> quads;  // (a1, a2) of z^2 + a1 z + a2
  for (const cplx& p : reps) quads.emplace_back(-2.0 * p.real(), std::norm(p));
  for (size_t i = 0; i + 1 < reals.size(); i += 2)
    quads.emplace_back(-(reals[i] + reals[i + 1]), reals[i] * reals[i + 1]);
  return quads;
}

cplx biquad_response(const Biquad& s, double theta) {
  const cplx z1 = std::polar(1.0, -theta);
  const cplx z2 = z1 * z1;
  return (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
}

}  // namespace

BandFilter design_butterworth_bandpass(int order, double low_hz, double high_hz, double fs) {
  if (order < 1) throw InvalidInput("bandpass design: order must be >= 1");
  if (!(0.0 < low_hz && low_hz < high_hz && high_hz < fs / 2.0))
    throw InvalidInput("bandpass design: need 0 < low < high < fs/2");

  const double w1 = prewarp(low_hz, fs);
  const double w2 = prewarp(high_hz, fs);
  const double bw = w2 - w1;
  const double w0sq = w1 * w2;

  // Lowpass-to-bandpass: each prototype pole p solves
  // s^2 - p*bw*s + w0^2 = 0, giving two analog poles.
  std::vector<cplx> analog;
  analog.reserve(2 * order);
  for (const cplx& p : butterworth_prototype(order)) {
    const cplx pb = p * bw;
    const cplx disc = std::sqrt(pb * pb - 4.0 * w0sq);
    analog.push_back((pb + disc) / 2.0);
    analog.push_back((pb - disc) / 2.0);
  }

  std::vector<cplx> digital;
  digital.reserve(analog.size());
  for (const cplx& s : analog) digital.push_back(bilinear_pole(s, fs));

  BandFilter f;
  f.order = order;
  f.low_hz = low_hz;
  f.high_hz = high_hz;
  f.fs = fs;

  // order zeros at z=+1 (from s=0) and order at z=-1 (from s=inf): each
  // section takes one of each, numerator (1, 0, -1), then unity gain at the
  // band center per section.
  const double theta_c = 2.0 * std::atan(std::sqrt(w0sq) / (2.0 * fs));
  for (const auto& [a1, a2] : pair_poles(digital)) {
    Biquad s;
    s.a1 = a1;
    s.a2 = a2;
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;
    const double g = std::abs(biquad_response(s, theta_c));
    if (g <= 0.0 || !std::isfinite(g))
      throw NumericalFailure("bandpass design: degenerate section gain");
    s.b0 /= g;
    s.b2 /= g;
    f.sections.push_back(s);
  }
  return f;
}

BandFilter design_butterworth_lowpass(int order, double cutoff_hz, double fs) {
  if (order < 1) throw InvalidInput("lowpass design: order must be >= 1");
  if (!(0.0 < cutoff_hz && cutoff_hz < fs / 2.0))
    throw InvalidInput("lowpass design: need 0 < cutoff < fs/2");

  const double wc = prewarp(cutoff_hz, fs);
  std::vector<cplx> digital;
  for (const cplx& p : butterworth_prototype(order)) digital.push_back(bilinear_pole(p * wc, fs));

  BandFilter f;
  f.order = order;
  f.low_hz = 0.0;
  f.high_hz = cutoff_hz;
  f.fs = fs;

  // All zeros sit at z=-1; per-section numerators (1,2,1) scaled for exact
  // unit DC gain.
  for (const auto& [a1, a2] : pair_poles(digital)) {
    Biquad s;
    s.a1 = a1;
    s.a2 = a2;
    const double k = (1.0 + a1 + a2) / 4.0;
    s.b0 = k;
    s.b1 = 2.0 * k;
    s.b2 = k;
    f.sections.push_back(s);
  }
  return f;
}

std::complex<double> sos_response(const std::vector<Biquad>& sections, double theta) {
  cplx h(1.0, 0.0);
  for (const Biquad& s : sections) h *= biquad_response(s, theta);
  return h;
}

double max_pole_magnitude(const std::vector<Biquad>& sections) {
  double m = 0.0;
  for (const Biquad& s : sections) {
    // Roots of z^2 + a1 z + a2.
    const cplx disc = std::sqrt(cplx(s.a1 * s.a1 - 4.0 * s.a2, 0.0));
    m = std::max(m, std::abs((-s.a1 + disc) / 2.0));
    m = std::max(m, std::abs((-s.a1 - disc) / 2.0));
  }
  return m;
}

void sos_filter_inplace(const std::vector<Biquad>& sections, double* x, int n) {
  for (const Biquad& s : sections) {
    double z1 = 0.0, z2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double xi = x[i];
      const double yi = s.b0 * xi + z1;
      z1 = s.b1 * xi - s.a1 * yi + z2;
      z2 = s.b2 * xi - s.a2 * yi;
      x[i] = yi;
    }
  }
}

namespace {

// Forward pass with per-section steady-state initial conditions scaled to
// the first sample, suppressing the start-up transient (the padded signal
// looks locally constant at its ends).
void sos_filter_steady(const std::vector<Biquad>& sections, double* x, int n) {
  for (const Biquad& s : sections) {
    const double denom = 1.0 + s.a1 + s.a2;
    const double h1 = std::fabs(denom) > 1e-300 ? (s.b0 + s.b1 + s.b2) / denom : 0.0;
    const double x0 = x[0];
    const double y0 = h1 * x0;
    double z2 = s.b2 * x0 - s.a2 * y0;
    double z1 = s.b1 * x0 - s.a1 * y0 + z2;
    for (int i = 0; i < n; ++i) {
      const double xi = x[i];
      const double yi = s.b0 * xi + z1;
      z1 = s.b1 * xi - s.a1 * yi + z2;
      z2 = s.b2 * xi - s.a2 * yi;
      x[i] = yi;
    }
  }
}

}  // namespace

Mat filter_zero_phase(const Mat& x, const BandFilter& f) {
  const int t = x.cols();
  const int pad = 3 * (2 * f.order);
  if (t <= 2 * f.order * 3) throw InvalidInput("filter_zero_phase: signal too short for padding");

  Mat out(x.rows(), t);
  std::vector<double> buf(t + 2 * pad);
  for (int ch = 0; ch < x.rows(); ++ch) {
    const double* row = x.row(ch);
    // Odd reflection about the end samples.
    for (int i = 0; i < pad; ++i) buf[i] = 2.0 * row[0] - row[pad - i];
    for (int i = 0; i < t; ++i) buf[pad + i] = row[i];
    for (int i = 0; i < pad; ++i) buf[pad + t + i] = 2.0 * row[t - 1] - row[t - 2 - i];

    const int n = static_cast<int>(buf.size());
    sos_filter_steady(f.sections, buf.data(), n);
    std::reverse(buf.begin(), buf.end());
    sos_filter_steady(f.sections, buf.data(), n);
    std::reverse(buf.begin(), buf.end());

    double* dst = out.row(ch);
    for (int i = 0; i < t; ++i) dst[i] = buf[pad + i];
  }
  return out;
}

}  // namespace mpnet
