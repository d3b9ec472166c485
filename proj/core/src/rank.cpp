#include "rrlat/rank.hpp"

#include <algorithm>
#include <set>

#include "enumerate.hpp"
#include "parallel.hpp"

namespace rrlat {

namespace {

constexpr unsigned kSmallBits = 24;

template <class T>
T sum_of(const std::vector<T>& v) {
  T s = 0;
  for (const auto& x : v) s += x;
  return s;
}

template <class T>
std::vector<T> convert(const Divisor& d);

template <>
std::vector<std::int64_t> convert(const Divisor& d) { return detail::to_i64(d); }
template <>
std::vector<Integer> convert(const Divisor& d) { return d.coords(); }

template <class T>
Divisor back(const std::vector<T>& v) {
  return Divisor(std::vector<Integer>(v.begin(), v.end()));
}

template <class T>
detail::Rows<T> hermite(const LatticeBasis& lattice);
template <>
detail::Rows<std::int64_t> hermite(const LatticeBasis& lattice) { return detail::hermite_i64(lattice); }
template <>
detail::Rows<Integer> hermite(const LatticeBasis& lattice) { return detail::hermite_big(lattice); }

bool small_enough(const LatticeBasis& lattice, const std::vector<const Divisor*>& ds,
                  const Integer& extra) {
  if (!detail::hermite_fits(lattice, kSmallBits)) return false;
  if (!fits_bits(extra, kSmallBits - 2)) return false;
  for (const Divisor* d : ds) {
    for (const auto& c : d->coords()) if (!fits_bits(c, kSmallBits - 2)) return false;
  }
  return true;
}

// Lattice points p <= D, returned as slacks D - p (all effective, degree deg D).
template <class T>
std::vector<std::vector<T>> slacks(const LatticeBasis& lattice, const std::vector<T>& d) {
  const T deg = sum_of(d);
  std::vector<T> lo(d.size()), hi = d;
  for (std::size_t i = 0; i < d.size(); ++i) lo[i] = d[i] - deg;
  auto h = hermite<T>(lattice);
  std::vector<std::vector<T>> out;
  detail::BoxEnumerator<T> e(h, lo, hi);
  e.run([&](const std::vector<T>& p) {
    std::vector<T> s(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) s[i] = d[i] - p[i];
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

template <class T>
RankResult bruteforce_impl(const LatticeBasis& lattice, const Divisor& dd) {
  const std::vector<T> d = convert<T>(dd);
  const std::size_t m = d.size();
  auto sl = slacks<T>(lattice, d);
  if (sl.empty()) return {Integer(-1), Divisor::zero(m)};
  const T deg = sum_of(d);
  // Effective E of degree s, in lexicographically decreasing order of E.
  std::vector<T> e(m, 0);
  for (T s = 1; s <= deg + 1; ++s) {
    std::fill(e.begin(), e.end(), T(0));
    e[0] = s;
    for (;;) {
      bool dominated = false;
      for (std::size_t k = 0; k < sl.size(); ++k) {
        const auto& v = sl[k];
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i) {
          if (e[i] > v[i]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          dominated = true;
          if (k) std::swap(sl[k], sl[0]);
          break;
        }
      }
      if (!dominated) return {Integer(s - 1), back(e)};
      // Next composition in lexicographically decreasing order.
      std::size_t i = m - 1;
      while (i > 0 && e[i - 1] == 0) --i;
      if (i == 0) break;
      --i;
      T tail = e[m - 1];
      e[m - 1] = 0;
      e[i] -= 1;
      e[i + 1] = tail + 1;
    }
  }
  throw std::logic_error("rank enumeration did not terminate");
}

template <class T>
RankResult extremal_impl(const LatticeBasis& lattice, const Divisor& dd, const ExtremalSet& ext) {
  const std::size_t m = dd.size();
  auto h = hermite<T>(lattice);
  struct Cls {
    std::vector<T> x0;
    T deg;
  };
  std::vector<Cls> cls;
  T best = 0;
  std::vector<T> best_x;
  bool have = false;
  for (const auto& nu : ext.representatives) {
    std::vector<T> x0 = convert<T>(nu + dd);
    T dp = 0;
    for (const auto& c : x0) if (c > 0) dp += c;
    if (!have || dp < best) {
      best = dp;
      best_x = x0;
      have = true;
    }
    cls.push_back({x0, sum_of(x0)});
  }
  if (!have) throw InvalidInput("empty extremal set");
  for (const auto& c : cls) {
    T floor_bound = c.deg > 0 ? c.deg : T(0);
    if (floor_bound >= best) continue;
    std::vector<T> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
      lo[i] = c.deg - best - c.x0[i];
      hi[i] = best - c.x0[i];
    }
    detail::BoxEnumerator<T> e(h, lo, hi);
    e.run([&](const std::vector<T>& p) {
      T dp = 0;
      for (std::size_t i = 0; i < m; ++i) {
        T x = c.x0[i] + p[i];
        if (x > 0) dp += x;
      }
      if (dp < best) {
        best = dp;
        for (std::size_t i = 0; i < m; ++i) best_x[i] = c.x0[i] + p[i];
      }
      return best > floor_bound;
    });
  }
  for (auto& x : best_x) if (x < 0) x = 0;
  return {Integer(best) - 1, back(best_x)};
}

}  // namespace

LinearSystem linear_system_nonempty(const LatticeBasis& lattice, const Divisor& d) {
  if (d.size() != lattice.ambient_dim()) throw InvalidInput("dimension mismatch");
  Integer deg = degree(d);
  if (deg < 0) return {false, std::nullopt};
  if (effective(d)) return {true, d};
  Divisor lo = d, hi = d;
  for (std::size_t i = 0; i < d.size(); ++i) lo[i] -= deg;
  LinearSystem out;
  for_each_lattice_point(lattice, {lo, hi}, [&](const Divisor& p) {
    out = {true, d - p};
    return false;
  });
  return out;
}

RankResult rank_bruteforce(const LatticeBasis& lattice, const Divisor& d, std::int64_t budget) {
  if (d.size() != lattice.ambient_dim()) throw InvalidInput("dimension mismatch");
  Integer deg = degree(d);
  if (deg < 0) return {Integer(-1), Divisor::zero(d.size())};
  if (deg > budget) {
    throw ResourceError("rank_bruteforce: degree " + deg.str() + " exceeds budget " +
                        std::to_string(budget));
  }
  if (small_enough(lattice, {&d}, deg)) return bruteforce_impl<std::int64_t>(lattice, d);
  return bruteforce_impl<Integer>(lattice, d);
}

RankResult rank_extremal(const LatticeBasis& lattice, const Divisor& d, const ExtremalSet& ext) {
  if (d.size() != lattice.ambient_dim()) throw InvalidInput("dimension mismatch");
  std::vector<const Divisor*> ds{&d};
  for (const auto& r : ext.representatives) ds.push_back(&r);
  Integer spread = 0;
  for (const auto& r : ext.representatives) {
    Integer s = deg_plus(r + d) - degree(r + d);
    if (s > spread) spread = s;
    s = deg_plus(r + d);
    if (s > spread) spread = s;
  }
  if (small_enough(lattice, ds, spread * 4)) return extremal_impl<std::int64_t>(lattice, d, ext);
  return extremal_impl<Integer>(lattice, d, ext);
}

Integer rank(const LatticeBasis& lattice, const Divisor& d, const ExtremalSet* ext,
             RankMethod method, std::int64_t budget) {
  switch (method) {
    case RankMethod::bruteforce:
      return rank_bruteforce(lattice, d, budget).rank;
    case RankMethod::extremal:
      if (!ext) throw InvalidInput("extremal rank needs an extremal set");
      return rank_extremal(lattice, d, *ext).rank;
    case RankMethod::both: {
      if (!ext) throw InvalidInput("extremal rank needs an extremal set");
      Integer a = rank_bruteforce(lattice, d, budget).rank;
      Integer b = rank_extremal(lattice, d, *ext).rank;
      if (a != b) {
        throw VerificationError("rank mismatch at " + to_string(d) + ": bruteforce " + a.str() +
                                ", extremal " + b.str());
      }
      return a;
    }
  }
  throw InvalidInput("unknown rank method");
}

RrReport verify_riemann_roch(const LatticeBasis& lattice, const ExtremalSet& ext, const Divisor& k,
                             const std::vector<Divisor>& samples, RankMethod method,
                             std::int64_t budget) {
  RrReport rep;
  rep.g = ext.g_max;
  rep.k = k;
  rep.samples.resize(samples.size());
  detail::parallel_for(samples.size(), [&](std::size_t i) {
    RrSample s;
    s.d = samples[i];
    s.r_d = rank(lattice, s.d, &ext, method, budget);
    s.r_kd = rank(lattice, k - s.d, &ext, method, budget);
    s.residual = s.r_d - s.r_kd - (degree(s.d) - rep.g + 1);
    s.pass = s.residual == 0;
    rep.samples[i] = std::move(s);
  });
  for (const auto& s : rep.samples) if (!s.pass) ++rep.failures;
  return rep;
}

WeakRrReport verify_weak_rr(const LatticeBasis& lattice, const ExtremalSet& ext,
                            const CanonicalPoint& canonical, const std::vector<Divisor>& samples,
                            RankMethod method, std::int64_t budget) {
  WeakRrReport rep;
  rep.g_min = ext.g_min;
  rep.g_max = ext.g_max;
  rep.k = canonical.k;
  rep.exact_pairs = canonical.exact_pairs;
  rep.samples.resize(samples.size());
  detail::parallel_for(samples.size(), [&](std::size_t i) {
    WeakRrSample s;
    s.d = samples[i];
    s.r_d = rank(lattice, s.d, &ext, method, budget);
    s.r_kd = rank(lattice, canonical.k - s.d, &ext, method, budget);
    Integer deg = degree(s.d);
    s.value = s.r_kd - s.r_d + deg;
    s.lower = 3 * rep.g_min - 2 * rep.g_max - 1;
    s.upper = rep.g_max - 1;
    s.pass = s.lower <= s.value && s.value <= s.upper;
    if (rep.exact_pairs) {
      s.tight_lower = rep.g_min - deg - 1;
      s.pass = s.pass && *s.tight_lower <= s.r_kd - s.r_d;
    }
    rep.samples[i] = std::move(s);
  });
  for (const auto& s : rep.samples) if (!s.pass) ++rep.failures;
  return rep;
}

std::vector<Divisor> fundamental_domain(const LatticeBasis& lattice, const Integer& deg) {
  const std::size_t n = lattice.rank();
  const auto& h = lattice.hermite_rows();
  std::vector<Integer> y(n, 0);
  std::vector<Divisor> out;
  for (;;) {
    Divisor d = Divisor::zero(n + 1);
    Integer s = 0;
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = y[k];
      s += y[k];
    }
    d[n] = deg - s;
    out.push_back(std::move(d));
    std::size_t k = 0;
    while (k < n && ++y[k] == h[k][k]) y[k++] = 0;
    if (k == n) break;
  }
  return out;
}

Divisor random_divisor(Rng& rng, std::size_t size, const Integer& deg, std::int64_t spread) {
  Divisor d = Divisor::zero(size);
  Integer s = 0;
  for (std::size_t i = 0; i + 1 < size; ++i) {
    d[i] = uniform_int(rng, -spread, spread);
    s += d[i];
  }
  d[size - 1] = deg - s;
  return d;
}

std::vector<Divisor> default_samples(const LatticeBasis& lattice, const Integer& g,
                                     std::uint64_t seed, std::size_t random_count) {
  std::vector<Divisor> out;
  for (Integer deg = 0; deg <= 2 * g - 2; ++deg) {
    for (auto& d : fundamental_domain(lattice, deg)) out.push_back(std::move(d));
  }
  Rng rng(seed);
  const std::int64_t lo = (-g).convert_to<std::int64_t>();
  const std::int64_t hi = (3 * g).convert_to<std::int64_t>();
  const std::int64_t spread = std::max<std::int64_t>(2, hi);
  for (std::size_t i = 0; i < random_count; ++i) {
    Integer deg = uniform_int(rng, lo, hi);
    out.push_back(random_divisor(rng, lattice.ambient_dim(), deg, spread));
  }
  return out;
}

}  // namespace rrlat
