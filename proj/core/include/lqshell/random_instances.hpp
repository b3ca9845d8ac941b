#pragma once

#include <cstdint>

#include "lqshell/ideal.hpp"

namespace lqshell {

/// Tiny deterministic generator (splitmix64). Identical output on every
/// platform and standard library, which the reproducibility contract of the
/// experiment reports depends on; <random> distributions do not promise
/// that.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound). bound must be positive.
  int below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }

  /// Uniform-ish value in [lo, hi] inclusive.
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

private:
  std::uint64_t state_ = 0;
};

/// Independent stream derived from a base seed, so trial k of an experiment
/// sees the same draws no matter how many workers run or in what order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct SamplerConfig {
  int min_nvars = 2;
  int max_nvars = 5;
  int max_degree = 6;  // cap on omega of the sampled ideals
};

/// Seeded source of test and experiment instances. The componentwise
/// polymatroidal families are closed constructions (Veronese type, principal
/// Borel, covering fat-point intersections, layered sums), so their samples
/// carry the property by construction.
class InstanceSampler {
public:
  explicit InstanceSampler(std::uint64_t seed, SamplerConfig config = {});

  Monomial random_monomial(int nvars, int degree);

  MonomialIdeal veronese();
  MonomialIdeal borel();
  MonomialIdeal fat_points();
  MonomialIdeal layered();

  /// One of the four families above, uniformly.
  MonomialIdeal cwp_ideal();

  /// A random equigenerated polymatroidal ideal (Veronese, Borel, a power of
  /// a variable ideal, or a product of two of these).
  MonomialIdeal polymatroidal();

  /// A random antichain with no structural guarantees.
  MonomialIdeal arbitrary_ideal();

  Rng& rng() { return rng_; }
  const SamplerConfig& config() const { return config_; }

private:
  Rng rng_;
  SamplerConfig config_;
};

}  // namespace lqshell
