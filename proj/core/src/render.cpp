#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rrlat/geometry.hpp"

namespace rrlat {

namespace {

constexpr double kScale = 24.0;
constexpr int kRays = 32;  // per side of the direction square

struct Canvas {
  double half;  // half-width in user units
  std::string body;

  std::pair<double, double> map(const RationalPoint& x) const {
    double a = x[0].convert_to<double>();
    double b = x[1].convert_to<double>();
    double c = x[2].convert_to<double>();
    double px = (a - b) / std::sqrt(2.0);
    double py = (a + b - 2 * c) / std::sqrt(6.0);
    return {half + kScale * px, half - kScale * py};
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
  }

  void circle(const RationalPoint& x, double r, const char* cls) {
    auto [px, py] = map(x);
    body += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) +
            "\" r=\"" + fmt(r) + "\"/>\n";
  }

  void polygon(const std::vector<RationalPoint>& pts, const char* cls) {
    body += "  <polygon class=\"" + std::string(cls) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto [px, py] = map(pts[i]);
      if (i) body += ' ';
      body += fmt(px) + "," + fmt(py);
    }
    body += "\"/>\n";
  }

  void line(const RationalPoint& a, const RationalPoint& b, const char* cls) {
    auto [ax, ay] = map(a);
    auto [bx, by] = map(b);
    body += "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt(ax) + "\" y1=\"" + fmt(ay) +
            "\" x2=\"" + fmt(bx) + "\" y2=\"" + fmt(by) + "\"/>\n";
  }
};

bool in_window(const RationalPoint& x, const Integer& radius) {
  for (const auto& c : x.coords()) {
    if (c > Rational(radius) || c < Rational(-radius)) return false;
  }
  return true;
}

// Boundary of the Voronoi cell of O along the ray s*u, s >= 0.
Rational ray_exit(const Divisor& u, const std::vector<Divisor>& competitors) {
  Integer top = u[0];
  for (const auto& c : u.coords()) if (c > top) top = c;
  std::optional<Rational> best;
  for (const auto& p : competitors) {
    std::optional<Rational> allowed;
    bool unbounded = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (p[i] > 0) continue;
      if (u[i] == top) {
        unbounded = true;
        break;
      }
      Rational s(Integer(-p[i]), Integer(top - u[i]));
      if (!allowed || s > *allowed) allowed = s;
    }
    if (unbounded) continue;
    Rational s = allowed ? *allowed : Rational(0);
    if (!best || s < *best) best = s;
  }
  if (!best) throw std::logic_error("Voronoi ray is unbounded");
  return *best;
}

std::vector<RationalPoint> voronoi_cell(const LatticeBasis& lattice, const Rational& cov) {
  Integer c = ceil(cov);
  Divisor lo = Divisor::zero(3), hi = Divisor::zero(3);
  for (std::size_t i = 0; i < 3; ++i) {
    lo[i] = -3 * c;
    hi[i] = 6 * c;
  }
  std::vector<Divisor> comp;
  for_each_lattice_point(lattice, {lo, hi}, [&](const Divisor& p) {
    if (p != Divisor::zero(3)) comp.push_back(p);
    return true;
  });
  // Directions a(1,-1,0) + b(1,0,-1) around the square max(|a|,|b|) = kRays.
  std::vector<std::pair<int, int>> dirs;
  for (int k = -kRays; k < kRays; ++k) dirs.emplace_back(kRays, k);
  for (int k = kRays; k > -kRays; --k) dirs.emplace_back(k, kRays);
  for (int k = kRays; k > -kRays; --k) dirs.emplace_back(-kRays, k);
  for (int k = -kRays; k < kRays; ++k) dirs.emplace_back(k, -kRays);
  std::vector<RationalPoint> pts;
  for (auto [a, b] : dirs) {
    Divisor u{a + b, -a, -b};
    Rational s = ray_exit(u, comp);
    pts.push_back(RationalPoint(u) * s);
  }
  return pts;
}

}  // namespace

std::string svg_render_2d(const LatticeBasis& lattice, const ExtremalSet& ext,
                          const RenderLayers& layers, const Integer& radius) {
  if (lattice.ambient_dim() != 3) throw InvalidInput("rendering supports A_2 sub-lattices only");
  if (radius <= 0) throw InvalidInput("render radius must be positive");
  Canvas cv;
  double r = radius.convert_to<double>();
  cv.half = kScale * r * 1.3 + 20;
  const double size = 2 * cv.half;
  Rational cov = covering_number(ext);
  const Divisor one = Divisor::ones(3);

  std::vector<std::string> notes;
  Divisor lo = Divisor::zero(3), hi = Divisor::zero(3);
  for (std::size_t i = 0; i < 3; ++i) {
    lo[i] = -radius;
    hi[i] = radius;
  }
  std::vector<Divisor> points = enumerate_lattice_points(lattice, {lo, hi});

  std::vector<RationalPoint> crit;
  for (const auto& nu : ext.representatives) {
    RationalPoint base = project_H0(nu - one);
    Divisor plo = Divisor::zero(3), phi = Divisor::zero(3);
    for (std::size_t i = 0; i < 3; ++i) {
      plo[i] = ceil(Rational(-radius) - base[i]);
      phi[i] = floor(Rational(radius) - base[i]);
    }
    for_each_lattice_point(lattice, {plo, phi}, [&](const Divisor& p) {
      crit.push_back(base + RationalPoint(p));
      return true;
    });
  }

  // Axes.
  RationalPoint ax0(std::vector<Rational>{Rational(radius), Rational(-radius), 0});
  RationalPoint ax1(std::vector<Rational>{Rational(radius), 0, Rational(-radius)});
  cv.line(-ax0, ax0, "axis");
  cv.line(-ax1, ax1, "axis");

  if (layers.arrangement_t) {
    const Rational& t = *layers.arrangement_t;
    if (t < 0 || t > cov) throw InvalidInput("arrangement t must lie in [0, Cov]");
    for (const auto& p : points) {
      SimplexBall ball(RationalPoint(p), t, Orientation::down);
      cv.polygon(ball.vertices(), "b-ball");
    }
    for (const auto& c : crit) {
      SimplexBall ball(c, cov - t, Orientation::up);
      cv.polygon(ball.vertices(), "a-ball");
    }
  }
  if (layers.voronoi) {
    auto cell = voronoi_cell(lattice, cov);
    for (const auto& x : cell) {
      if (!in_window(x, radius)) {
        notes.push_back("window too small to contain the Voronoi cell of O");
        break;
      }
    }
    cv.polygon(cell, "voronoi");
    for (const auto& v : critical_vertices_of_origin(lattice, ext)) cv.circle(v, 3.5, "cell-vertex");
  }
  if (layers.lattice) {
    for (const auto& p : points) cv.circle(RationalPoint(p), 2.5, "lattice");
  }
  if (layers.critical) {
    for (const auto& c : crit) cv.circle(c, 2.0, "critical");
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + Canvas::fmt(size) +
         "\" height=\"" + Canvas::fmt(size) + "\" viewBox=\"0 0 " + Canvas::fmt(size) + " " +
         Canvas::fmt(size) + "\">\n";
  out +=
      "  <style>.axis{stroke:#bbb;stroke-width:0.5}.lattice{fill:#000}.critical{fill:#c00}"
      ".cell-vertex{fill:none;stroke:#c00;stroke-width:1}"
      ".voronoi{fill:#dfe8f7;stroke:#24c;stroke-width:1}"
      ".b-ball{fill:#9c9;fill-opacity:0.35;stroke:#363;stroke-width:0.5}"
      ".a-ball{fill:#f96;fill-opacity:0.35;stroke:#930;stroke-width:0.5}</style>\n";
  for (const auto& n : notes) {
    out += "  <!-- warning: " + n + " -->\n";
    out += "  <text x=\"8\" y=\"16\" font-size=\"12\" fill=\"#c00\">warning: " + n + "</text>\n";
  }
  out += cv.body;
  out += "</svg>\n";
  return out;
}

}  // namespace rrlat
