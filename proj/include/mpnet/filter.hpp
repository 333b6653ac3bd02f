#pragma once

#include <complex>
#include <vector>

#include "mpnet/linalg.hpp"

namespace mpnet {

// One second-order section, direct form II transposed:
//   y[n] = b0 x[n] + z1;  z1' = b1 x[n] - a1 y[n] + z2;  z2' = b2 x[n] - a2 y[n]
struct Biquad {
  double b0 = 0, b1 = 0, b2 = 0;
  double a1 = 0, a2 = 0;
};

// Butterworth bandpass as a cascade of stable second-order sections.
struct BandFilter {
  int order = 0;
  double low_hz = 0, high_hz = 0, fs = 0;
  std::vector<Biquad> sections;
};

// Analog Butterworth prototype -> bandpass transform -> bilinear map with
// frequency pre-warping -> conjugate-paired second-order sections. Gain is
// normalized to unity at the geometric center of the band.
BandFilter design_butterworth_bandpass(int order, double low_hz, double high_hz, double fs);

// Lowpass variant (anti-alias filter for decimation). Unity gain at DC.
BandFilter design_butterworth_lowpass(int order, double cutoff_hz, double fs);

// Cascade frequency response at digital angular frequency theta = 2*pi*f/fs.
std::complex<double> sos_response(const std::vector<Biquad>& sections, double theta);

// Largest pole magnitude across sections (stability margin diagnostic).
double max_pole_magnitude(const std::vector<Biquad>& sections);

// Single forward pass of the cascade over one channel.
void sos_filter_inplace(const std::vector<Biquad>& sections, double* x, int n);

// Zero-phase forward-backward filtering of each row of x, with odd
// reflective edge padding of length 3*(2*order) and steady-state section
// initialization. Throws InvalidInput when rows are shorter than
// 6*order + 1 samples.
Mat filter_zero_phase(const Mat& x, const BandFilter& f);

}  // namespace mpnet
