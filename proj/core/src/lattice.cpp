#include "rrlat/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "enumerate.hpp"

namespace rrlat {

namespace {

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

void row_sub(Divisor& a, const Divisor& b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}

void row_sub(std::vector<Integer>& a, const std::vector<Integer>& b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}

}  // namespace

LatticeBasis::LatticeBasis(std::vector<Divisor> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw InvalidInput("lattice needs at least one row");
  for (const auto& r : rows_) {
    if (r.size() != n + 1) throw InvalidInput("lattice rows must have length n+1");
    if (degree(r) != 0) throw InvalidInput("lattice row " + to_string(r) + " is not in A_n");
  }
  hermite_ = rows_;
  transform_.assign(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) transform_[i][i] = 1;

  for (std::size_t k = 0; k < n; ++k) {
    // Euclid on column k among rows k..n-1.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = k; i < n; ++i) {
        if (hermite_[i][k] != 0 &&
            (best == n || abs_int(hermite_[i][k]) < abs_int(hermite_[best][k]))) {
          best = i;
        }
      }
      if (best == n) throw InvalidInput("lattice rows are not of full rank");
      std::swap(hermite_[k], hermite_[best]);
      std::swap(transform_[k], transform_[best]);
      bool done = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (hermite_[i][k] == 0) continue;
        Integer q = floor_div(hermite_[i][k], hermite_[k][k]);
        row_sub(hermite_[i], hermite_[k], q);
        row_sub(transform_[i], transform_[k], q);
        if (hermite_[i][k] != 0) done = false;
      }
      if (done) break;
    }
    if (hermite_[k][k] < 0) {
      hermite_[k] = -hermite_[k];
      for (auto& u : transform_[k]) u = -u;
    }
    for (std::size_t i = 0; i < k; ++i) {
      Integer q = floor_div(hermite_[i][k], hermite_[k][k]);
      row_sub(hermite_[i], hermite_[k], q);
      row_sub(transform_[i], transform_[k], q);
    }
  }
}

std::optional<std::vector<Integer>> LatticeBasis::hermite_coefficients(const Divisor& v) const {
  const std::size_t n = rank();
  if (v.size() != n + 1) throw InvalidInput("dimension mismatch");
  if (degree(v) != 0) return std::nullopt;
  Divisor r = v;
  std::vector<Integer> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (r[k] % hermite_[k][k] != 0) return std::nullopt;
    c[k] = r[k] / hermite_[k][k];
    row_sub(r, hermite_[k], c[k]);
  }
  return c;
}

bool LatticeBasis::contains(const Divisor& v) const { return hermite_coefficients(v).has_value(); }

bool LatticeBasis::contains(const RationalPoint& v) const {
  return v.integral() && contains(v.to_divisor());
}

std::optional<std::vector<Integer>> LatticeBasis::coefficients(const Divisor& v) const {
  auto ch = hermite_coefficients(v);
  if (!ch) return std::nullopt;
  const std::size_t n = rank();
  std::vector<Integer> c(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if ((*ch)[k] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) c[j] += (*ch)[k] * transform_[k][j];
  }
  return c;
}

Divisor LatticeBasis::combination(const std::vector<Integer>& coeffs) const {
  if (coeffs.size() != rank()) throw InvalidInput("coefficient count mismatch");
  Divisor r = Divisor::zero(ambient_dim());
  for (std::size_t k = 0; k < rank(); ++k) r += rows_[k] * coeffs[k];
  return r;
}

Divisor LatticeBasis::reduce(const Divisor& v) const {
  if (v.size() != ambient_dim()) throw InvalidInput("dimension mismatch");
  Divisor r = v;
  for (std::size_t k = 0; k < rank(); ++k) {
    row_sub(r, hermite_[k], floor_div(r[k], hermite_[k][k]));
  }
  return r;
}

bool LatticeBasis::same_lattice(const LatticeBasis& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (const auto& r : other.rows()) if (!contains(r)) return false;
  for (const auto& r : rows_) if (!other.contains(r)) return false;
  return true;
}

bool lattice_contains(const LatticeBasis& lattice, const Divisor& v) { return lattice.contains(v); }

std::vector<Integer> picard_invariant_factors(const LatticeBasis& lattice) {
  const std::size_t n = lattice.rank();
  Matrix a(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t k = 0; k < n; ++k) {
      s += lattice.rows()[i][k];
      a[i][k] = s;
    }
  }
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] != 0 && (bi == n || abs_int(a[i][j]) < abs_int(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n) throw InvalidInput("lattice rows are not of full rank");
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        Integer q = a[i][t] / a[t][t];
        row_sub(a[i], a[t], q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = a[t][j] / a[t][t];
        if (q != 0) {
          for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < n; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs_int(a[t][t]));
  }
  return diag;
}

Integer picard_cardinality(const LatticeBasis& lattice) {
  Integer p = 1;
  for (const auto& d : picard_invariant_factors(lattice)) p *= d;
  return p;
}

namespace detail {

bool hermite_fits(const LatticeBasis& lattice, unsigned bits) {
  for (const auto& r : lattice.hermite_rows()) {
    for (const auto& c : r.coords()) if (!fits_bits(c, bits)) return false;
  }
  return true;
}

Rows<std::int64_t> hermite_i64(const LatticeBasis& lattice) {
  Rows<std::int64_t> h;
  for (const auto& r : lattice.hermite_rows()) h.push_back(to_i64(r));
  return h;
}

Rows<Integer> hermite_big(const LatticeBasis& lattice) {
  Rows<Integer> h;
  for (const auto& r : lattice.hermite_rows()) h.push_back(r.coords());
  return h;
}

std::vector<std::int64_t> to_i64(const Divisor& d) {
  std::vector<std::int64_t> v;
  v.reserve(d.size());
  for (const auto& c : d.coords()) v.push_back(c.convert_to<std::int64_t>());
  return v;
}

Divisor from_i64(const std::vector<std::int64_t>& v) {
  std::vector<Integer> c(v.begin(), v.end());
  return Divisor(std::move(c));
}

}  // namespace detail

bool for_each_lattice_point(const LatticeBasis& lattice, const LatticeBox& box,
                            const std::function<bool(const Divisor&)>& visit) {
  const std::size_t m = lattice.ambient_dim();
  if (box.lower.size() != m || box.upper.size() != m) throw InvalidInput("box dimension mismatch");
  bool small = detail::hermite_fits(lattice, 24);
  for (std::size_t j = 0; j < m && small; ++j) {
    small = fits_bits(box.lower[j], 24) && fits_bits(box.upper[j], 24);
  }
  if (small) {
    auto h = detail::hermite_i64(lattice);
    detail::BoxEnumerator<std::int64_t> e(h, detail::to_i64(box.lower), detail::to_i64(box.upper));
    return e.run([&](const std::vector<std::int64_t>& x) { return visit(detail::from_i64(x)); });
  }
  auto h = detail::hermite_big(lattice);
  detail::BoxEnumerator<Integer> e(h, box.lower.coords(), box.upper.coords());
  return e.run([&](const std::vector<Integer>& x) { return visit(Divisor(x)); });
}

std::vector<Divisor> enumerate_lattice_points(const LatticeBasis& lattice, const LatticeBox& box) {
  std::vector<Divisor> out;
  for_each_lattice_point(lattice, box, [&](const Divisor& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

LatticeBasis parse_lattice(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InvalidInput("empty lattice file");
  Integer dim = parse_integer(lines[0].substr(0, lines[0].find_last_not_of(" \t\r") + 1)
                                  .substr(lines[0].find_first_not_of(" \t")));
  if (dim < 2) throw InvalidInput("lattice dimension must be at least 2");
  std::size_t m = dim.convert_to<std::size_t>();
  if (lines.size() != m) {
    throw InvalidInput("lattice file must contain n = " + std::to_string(m - 1) + " rows");
  }
  std::vector<Divisor> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Divisor r = parse_divisor(lines[i]);
    if (r.size() != m) throw InvalidInput("lattice row has wrong length");
    rows.push_back(std::move(r));
  }
  return LatticeBasis(std::move(rows));
}

std::string format_lattice(const LatticeBasis& lattice) {
  std::string s = std::to_string(lattice.ambient_dim()) + "\n";
  for (const auto& r : lattice.rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) s += ' ';
      s += r[j].str();
    }
    s += '\n';
  }
  return s;
}

}  // namespace rrlat
