#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/extremal.hpp"
#include "rrlat/extremal_set.hpp"
#include "rrlat/lattice.hpp"

namespace rrlat {

// Two rank algorithms disagreed.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LinearSystem {
  bool nonempty = false;
  std::optional<Divisor> witness;  // effective E with E ~ D
};

struct RankResult {
  Integer rank;
  // Effective E with deg(E) = rank + 1 and |D - E| empty.
  std::optional<Divisor> witness;
};

inline constexpr std::int64_t kDefaultRankBudget = 24;

LinearSystem linear_system_nonempty(const LatticeBasis& lattice, const Divisor& d);
// Straight from the definition.  Throws ResourceError when deg(D) > budget.
RankResult rank_bruteforce(const LatticeBasis& lattice, const Divisor& d,
                           std::int64_t budget = kDefaultRankBudget);
// min over extremal nu and lattice p of deg+(nu + p + D), minus one.
RankResult rank_extremal(const LatticeBasis& lattice, const Divisor& d, const ExtremalSet& ext);

enum class RankMethod { bruteforce, extremal, both };

// With both, throws VerificationError on disagreement.
Integer rank(const LatticeBasis& lattice, const Divisor& d, const ExtremalSet* ext,
             RankMethod method, std::int64_t budget = kDefaultRankBudget);

struct RrSample {
  Divisor d;
  Integer r_d;
  Integer r_kd;
  Integer residual;  // r(D) - r(K-D) - (deg D - g + 1)
  bool pass = false;
};

struct RrReport {
  Integer g;
  Divisor k;
  std::vector<RrSample> samples;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

RrReport verify_riemann_roch(const LatticeBasis& lattice, const ExtremalSet& ext, const Divisor& k,
                             const std::vector<Divisor>& samples,
                             RankMethod method = RankMethod::extremal,
                             std::int64_t budget = kDefaultRankBudget);

struct WeakRrSample {
  Divisor d;
  Integer r_d;
  Integer r_kd;
  Integer value;  // r(K-D) - r(D) + deg D
  Integer lower;  // 3 g_min - 2 g_max - 1
  Integer upper;  // g_max - 1
  std::optional<Integer> tight_lower;  // g_min - deg D - 1, compared with r(K-D) - r(D)
  bool pass = false;
};

struct WeakRrReport {
  Integer g_min;
  Integer g_max;
  Divisor k;
  bool exact_pairs = false;
  std::vector<WeakRrSample> samples;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

WeakRrReport verify_weak_rr(const LatticeBasis& lattice, const ExtremalSet& ext,
                            const CanonicalPoint& canonical, const std::vector<Divisor>& samples,
                            RankMethod method = RankMethod::extremal,
                            std::int64_t budget = kDefaultRankBudget);

// One representative per class of the given degree.
std::vector<Divisor> fundamental_domain(const LatticeBasis& lattice, const Integer& deg);

// All classes with 0 <= deg <= 2g-2, plus `random_count` random divisors with
// deg in [-g, 3g].
std::vector<Divisor> default_samples(const LatticeBasis& lattice, const Integer& g,
                                     std::uint64_t seed, std::size_t random_count = 50);

// Uniform random divisor of the given degree with coordinates near [-spread, spread].
Divisor random_divisor(Rng& rng, std::size_t size, const Integer& deg, std::int64_t spread);

}  // namespace rrlat
