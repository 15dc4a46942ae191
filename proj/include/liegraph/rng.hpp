#pragma once

#include <cmath>
#include <cstdint>

namespace liegraph {

// Counter-based generator: one independent stream per (seed, stream) pair,
// so parallel trials can draw reproducibly regardless of scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : key_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream + 0x6a09e667f3bcc909ull)), counter_(0) {}

  uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // uniform in [0,1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0x1.0p-60) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // exact Poisson sampling; large means are split so Knuth's product
  // method never sees a mean above 30
  long long poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 30.0) {
      double half = mean / 2.0;
      return poisson(half) + poisson(mean - half);
    }
    double limit = std::exp(-mean), prod = uniform();
    long long n = 0;
    while (prod > limit) {
      prod *= uniform();
      ++n;
    }
    return n;
  }

  long long uniform_int(long long n) {  // in [0, n)
    return (long long)(uniform() * double(n)) % n;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }
  uint64_t key_;
  uint64_t counter_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace liegraph
