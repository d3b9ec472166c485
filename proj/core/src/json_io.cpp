#include "rrlat/json_io.hpp"

#include "json.hpp"

namespace rrlat {

namespace {

using Json = nlohmann::ordered_json;

Json num(const Integer& z) {
  if (fits_bits(z, 62)) return z.convert_to<std::int64_t>();
  return z.str();
}

Json vec(const Divisor& d) {
  Json a = Json::array();
  for (const auto& c : d.coords()) a.push_back(num(c));
  return a;
}

Rational entry(const Json& e) {
  if (e.is_number_integer()) return Rational(e.get<std::int64_t>());
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_array() && e.size() == 2) {
    Integer den = e.at(1).is_string() ? parse_integer(e.at(1).get<std::string>())
                                      : Integer(e.at(1).get<std::int64_t>());
    Integer n = e.at(0).is_string() ? parse_integer(e.at(0).get<std::string>())
                                    : Integer(e.at(0).get<std::int64_t>());
    if (den == 0) throw InvalidInput("zero denominator");
    return Rational(n, den);
  }
  throw InvalidInput("simplex coordinate must be an integer, \"p/q\" or [p, q]");
}

}  // namespace

std::string extremal_to_json(const ExtremalSet& ext, const Classification* cls,
                             const CanonicalPoint* canonical) {
  Json j;
  j["dimension"] = ext.ambient_dim;
  Json classes = Json::array();
  for (const auto& r : ext.representatives) {
    classes.push_back(Json{{"representative", vec(r)}, {"degree", num(degree(r))}});
  }
  j["classes"] = classes;
  j["class_count"] = ext.class_count();
  j["g_min"] = num(ext.g_min);
  j["g_max"] = num(ext.g_max);
  j["uniform"] = ext.uniform();
  if (cls) {
    j["reflection_invariant"] = cls->reflection_invariant;
    j["strongly_reflection_invariant"] = cls->strongly_reflection_invariant;
    j["t"] = cls->t ? vec(*cls->t) : Json(nullptr);
  } else if (ext.reflection_vector) {
    j["t"] = vec(*ext.reflection_vector);
  }
  if (canonical) {
    j["K"] = vec(canonical->k);
    j["exact_pairs"] = canonical->exact_pairs;
  }
  return j.dump();
}

std::string report_to_json(const RrReport& rep) {
  Json j;
  j["g"] = num(rep.g);
  j["K"] = vec(rep.k);
  j["sample_count"] = rep.samples.size();
  j["failures"] = rep.failures;
  Json s = Json::array();
  for (const auto& x : rep.samples) {
    s.push_back(Json{{"D", vec(x.d)},
                     {"r_D", num(x.r_d)},
                     {"r_K_minus_D", num(x.r_kd)},
                     {"residual", num(x.residual)},
                     {"pass", x.pass}});
  }
  j["samples"] = s;
  return j.dump();
}

std::string report_to_json(const WeakRrReport& rep) {
  Json j;
  j["g_min"] = num(rep.g_min);
  j["g_max"] = num(rep.g_max);
  j["K"] = vec(rep.k);
  j["exact_pairs"] = rep.exact_pairs;
  j["sample_count"] = rep.samples.size();
  j["failures"] = rep.failures;
  Json s = Json::array();
  for (const auto& x : rep.samples) {
    Json e{{"D", vec(x.d)},
           {"r_D", num(x.r_d)},
           {"r_K_minus_D", num(x.r_kd)},
           {"value", num(x.value)},
           {"lower", num(x.lower)},
           {"upper", num(x.upper)}};
    e["tight_lower"] = x.tight_lower ? num(*x.tight_lower) : Json(nullptr);
    e["pass"] = x.pass;
    s.push_back(e);
  }
  j["samples"] = s;
  return j.dump();
}

std::string script_to_json(const std::vector<std::size_t>& script) {
  return Json(script).dump();
}

RationalSimplex parse_simplex_json(std::string_view text) {
  std::vector<std::vector<Rational>> verts;
  try {
    Json j = Json::parse(text);
    if (j.is_object()) j = j.at("vertices");
    if (!j.is_array()) throw InvalidInput("simplex must be a list of vertices");
    for (const auto& v : j) {
      if (!v.is_array()) throw InvalidInput("simplex vertex must be a list");
      std::vector<Rational> p;
      for (const auto& e : v) p.push_back(entry(e));
      verts.push_back(std::move(p));
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad simplex JSON: ") + e.what());
  }
  return RationalSimplex(std::move(verts));
}

}  // namespace rrlat
