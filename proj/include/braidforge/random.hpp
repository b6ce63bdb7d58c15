#pragma once

#include <cstdint>
#include <random>

#include "braidforge/braid_word.hpp"

namespace braidforge {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Word of exactly `length` uniformly chosen letters.
BraidWord random_word(Rng& rng, int strands, int length);

/// Applies `moves` random defining-relation moves (free insertion and
/// cancellation, far commutation, braid relations with any signs). The
/// result represents the same element as `w`.
BraidWord random_rewrite(const BraidWord& w, Rng& rng, int moves);

}  // namespace braidforge

#include "braidforge/qp.hpp"

namespace braidforge {

/// Up to `max_bands` bands with random generators and conjugators of length
/// at most `max_conjugator`.
qp::QPCertificate random_certificate(Rng& rng, int strands, int max_bands, int max_conjugator);

}  // namespace braidforge
