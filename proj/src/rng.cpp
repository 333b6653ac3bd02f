#include "mpnet/rng.hpp"

namespace mpnet {

uint64_t Rng::mix(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double Rng::normal() {
  double s = 0.0;
  for (int i = 0; i < 12; ++i) s += uniform();
  return s - 6.0;
}

Mat Rng::uniform_mat(int rows, int cols, double lo, double hi) {
  Mat m(rows, cols);
  for (double& x : m.raw()) x = uniform(lo, hi);
  return m;
}

Mat Rng::normal_mat(int rows, int cols) {
  Mat m(rows, cols);
  for (double& x : m.raw()) x = normal();
  return m;
}

}  // namespace mpnet
