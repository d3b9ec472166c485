#pragma once

#include <cstdint>
#include <vector>

#include "rrlat/lattice.hpp"

namespace rrlat::detail {

inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t cdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}
inline Integer fdiv(const Integer& a, const Integer& b) { return floor_div(a, b); }
inline Integer cdiv(const Integer& a, const Integer& b) { return ceil_div(a, b); }

template <class T>
using Rows = std::vector<std::vector<T>>;

// Hermite rows with magnitudes below 2^bits, converted to int64.
bool hermite_fits(const LatticeBasis& lattice, unsigned bits);
Rows<std::int64_t> hermite_i64(const LatticeBasis& lattice);
Rows<Integer> hermite_big(const LatticeBasis& lattice);
std::vector<std::int64_t> to_i64(const Divisor& d);
Divisor from_i64(const std::vector<std::int64_t>& v);

// Enumerates lattice points x with lo <= x <= hi, where the lattice is given
// by Hermite rows h (n rows, n+1 columns, upper triangular on the first n
// columns).  Coefficients are bounded level by level: the first k
// coordinates of a point depend only on the first k coefficients.  The
// remaining-sum constraint (points have degree 0) prunes each level.
template <class T>
class BoxEnumerator {
 public:
  BoxEnumerator(const Rows<T>& h, std::vector<T> lo, std::vector<T> hi)
      : h_(h), lo_(std::move(lo)), hi_(std::move(hi)) {
    const std::size_t m = lo_.size();
    slo_.assign(m + 1, T(0));
    shi_.assign(m + 1, T(0));
    for (std::size_t j = m; j-- > 0;) {
      slo_[j] = slo_[j + 1] + lo_[j];
      shi_[j] = shi_[j + 1] + hi_[j];
    }
    cur_.assign(m, T(0));
  }

  // visit(const std::vector<T>&) -> bool (false stops).
  template <class F>
  bool run(F&& visit) {
    for (std::size_t j = 0; j < lo_.size(); ++j) {
      if (lo_[j] > hi_[j]) return true;
    }
    if (slo_[0] > 0 || shi_[0] < 0) return true;
    return level(0, T(0), visit);
  }

 private:
  template <class F>
  bool level(std::size_t k, const T& prefix, F& visit) {
    const std::size_t n = h_.size();
    if (k == n) return visit(cur_);
    // cur_[k] holds the contribution of rows 0..k-1.
    T a = lo_[k];
    T b = hi_[k];
    T fa = -prefix - shi_[k + 1];
    T fb = -prefix - slo_[k + 1];
    if (fa > a) a = fa;
    if (fb < b) b = fb;
    if (a > b) return true;
    const T& piv = h_[k][k];
    const T off = cur_[k];
    T cmin = cdiv(T(a - off), piv);
    T cmax = fdiv(T(b - off), piv);
    if (cmin > cmax) return true;
    const std::size_t m = lo_.size();
    for (std::size_t j = k; j < m; ++j) cur_[j] += cmin * h_[k][j];
    bool keep = true;
    for (T c = cmin;; ++c) {
      if (!level(k + 1, T(prefix + cur_[k]), visit)) {
        keep = false;
      }
      if (!keep || c == cmax) {
        T used = c;
        for (std::size_t j = k; j < m; ++j) cur_[j] -= used * h_[k][j];
        break;
      }
      for (std::size_t j = k; j < m; ++j) cur_[j] += h_[k][j];
    }
    return keep;
  }

  const Rows<T>& h_;
  std::vector<T> lo_, hi_, slo_, shi_, cur_;
};

}  // namespace rrlat::detail
