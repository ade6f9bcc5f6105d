#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace eiwe {

// Seeded generator with a fixed uniform/normal mapping.  std::mt19937_64 is
// bit-exact across platforms; the distribution adaptors in <random> are not,
// so the mappings live here.  Same seed, same stream, everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform double in [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace eiwe
