// rrlat: command-line front end for the rrlat library.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or resource error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrlat/a2.hpp"
#include "rrlat/chipfire.hpp"
#include "rrlat/extremal.hpp"
#include "rrlat/geometry.hpp"
#include "rrlat/graph.hpp"
#include "rrlat/json_io.hpp"
#include "rrlat/lattice.hpp"
#include "rrlat/rank.hpp"
#include "rrlat/reduction.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace rrlat;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultRankBudget;
  std::string graph, digraph, lattice;
};

// A lattice together with the graph it came from, if any.
struct Input {
  LatticeBasis lattice;
  std::shared_ptr<const Multigraph> graph;
  std::optional<std::vector<Divisor>> laplacian;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load(const Options& o) {
  int given = !o.graph.empty() + !o.digraph.empty() + !o.lattice.empty();
  if (given != 1) throw InvalidInput("give exactly one of --graph, --digraph, --lattice");
  if (!o.graph.empty()) {
    auto g = std::make_shared<const Multigraph>(parse_graph(read_file(o.graph)));
    return {laplacian_lattice(*g), g, laplacian_matrix(*g)};
  }
  if (!o.digraph.empty()) {
    auto d = parse_digraph(read_file(o.digraph));
    return {laplacian_lattice(d), nullptr, laplacian_matrix(d)};
  }
  return {parse_lattice(read_file(o.lattice)), nullptr, std::nullopt};
}

bool positive_off_diagonal(const std::vector<Divisor>& q) {
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (i != j && q[i][j] >= 0) return false;
  return true;
}

ExtremalSet extremals(const Input& in) {
  if (in.graph) return extremal_set_graphical(*in.graph);
  if (in.laplacian && positive_off_diagonal(*in.laplacian)) return extremal_set_laplacian(*in.laplacian);
  return extremal_set_general(in.lattice);
}

Json num(const Integer& z) {
  if (fits_bits(z, 62)) return z.convert_to<std::int64_t>();
  return z.str();
}

Json vec(const Divisor& d) {
  Json a = Json::array();
  for (const auto& c : d.coords()) a.push_back(num(c));
  return a;
}

Json rvec(const RationalPoint& x) {
  Json a = Json::array();
  for (const auto& c : x.coords()) a.push_back(to_string(c));
  return a;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump() << '\n';
  else std::cout << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_rank(const Options& o, const std::string& divisor) {
  Input in = load(o);
  Divisor d = parse_divisor(divisor);
  if (d.size() != in.lattice.ambient_dim()) throw InvalidInput("divisor has the wrong length");
  ExtremalSet ext = extremals(in);
  Integer r = rank_extremal(in.lattice, d, ext).rank;
  std::optional<Integer> brute;
  if (degree(d) <= o.budget) brute = rank_bruteforce(in.lattice, d, o.budget).rank;
  else if (in.graph) std::cerr << "note: degree exceeds --budget, brute-force check skipped\n";
  bool agree = !brute || *brute == r;
  Json j{{"D", vec(d)}, {"rank", num(r)}, {"bruteforce", brute ? num(*brute) : Json(nullptr)},
         {"agree", agree}};
  std::string text = "r(D) = " + r.str() + "\n";
  if (brute) text += "brute force: " + brute->str() + (agree ? " (agrees)\n" : " (MISMATCH)\n");
  emit(o, j, text);
  return agree ? kOk : kVerificationFailed;
}

int cmd_genus(const Options& o) {
  Input in = load(o);
  ExtremalSet ext = extremals(in);
  Json j{{"g_min", num(ext.g_min)}, {"g_max", num(ext.g_max)}, {"uniform", ext.uniform()}};
  std::string text = "g_min = " + ext.g_min.str() + "\ng_max = " + ext.g_max.str() + "\n";
  if (in.graph) {
    j["graph_genus"] = in.graph->genus();
    text += "graph genus = " + std::to_string(in.graph->genus()) + "\n";
    if (ext.g_min != in.graph->genus()) {
      emit(o, j, text);
      return kVerificationFailed;
    }
  }
  emit(o, j, text);
  return kOk;
}

int cmd_extremals(const Options& o) {
  Input in = load(o);
  ExtremalSet ext = extremals(in);
  std::string text = std::to_string(ext.class_count()) + " classes\n";
  for (const auto& r : ext.representatives) text += to_string(r) + "  deg " + degree(r).str() + "\n";
  if (o.format == "json") std::cout << extremal_to_json(ext) << '\n';
  else std::cout << text;
  return kOk;
}

int cmd_canonical(const Options& o) {
  Input in = load(o);
  ExtremalSet ext = extremals(in);
  CanonicalPoint cp = canonical_point(ext, in.lattice);
  Json j{{"K", vec(cp.k)}, {"exact_pairs", cp.exact_pairs}};
  std::string text = "K = " + to_string(cp.k) + "\n";
  bool ok = true;
  if (in.graph) {
    Divisor kg = canonical_divisor(*in.graph);
    ok = in.lattice.contains(cp.k - kg);
    j["graph_K"] = vec(kg);
    j["equivalent"] = ok;
    text += "graph K = " + to_string(kg) + (ok ? " (equivalent)\n" : " (NOT equivalent)\n");
  }
  emit(o, j, text);
  return ok ? kOk : kVerificationFailed;
}

int cmd_classify(const Options& o) {
  Input in = load(o);
  ExtremalSet ext = extremals(in);
  Classification c = classify(ext, in.lattice);
  if (o.format == "json") {
    std::cout << extremal_to_json(ext, &c) << '\n';
    return kOk;
  }
  std::cout << "classes: " << ext.class_count() << "\n"
            << "uniform: " << yes_no(c.uniform) << "\n"
            << "reflection invariant: " << yes_no(c.reflection_invariant) << "\n"
            << "strongly reflection invariant: " << yes_no(c.strongly_reflection_invariant) << "\n";
  if (c.t) std::cout << "t = " << to_string(*c.t) << "\n";
  return kOk;
}

int cmd_verify_rr(const Options& o, const std::string& method_name, std::size_t random_count) {
  Input in = load(o);
  ExtremalSet ext = extremals(in);
  RankMethod method = RankMethod::extremal;
  if (method_name == "bruteforce") method = RankMethod::bruteforce;
  else if (method_name == "both") method = RankMethod::both;
  CanonicalPoint cp = canonical_point(ext, in.lattice);
  auto samples = default_samples(in.lattice, ext.g_max, o.seed, random_count);
  if (ext.uniform()) {
    Divisor k = cp.k;
    if (in.graph) {
      // Same class; the graph form is the familiar representative.
      k = canonical_divisor(*in.graph);
      if (!in.lattice.contains(k - cp.k)) {
        std::cerr << "graph canonical divisor is not equivalent to " << to_string(cp.k) << '\n';
        return kVerificationFailed;
      }
    }
    RrReport rep = verify_riemann_roch(in.lattice, ext, k, samples, method, o.budget);
    if (o.format == "json") {
      std::cout << report_to_json(rep) << '\n';
    } else {
      std::cout << "g = " << rep.g << "\nK = " << to_string(rep.k) << "\n"
                << rep.samples.size() - rep.failures << "/" << rep.samples.size()
                << " samples satisfy r(D) - r(K-D) = deg D - g + 1\n";
      for (const auto& s : rep.samples)
        if (!s.pass) std::cout << "  fails at " << to_string(s.d) << " residual " << s.residual << "\n";
    }
    return rep.ok() ? kOk : kVerificationFailed;
  }
  WeakRrReport rep = verify_weak_rr(in.lattice, ext, cp, samples, method, o.budget);
  if (o.format == "json") {
    std::cout << report_to_json(rep) << '\n';
  } else {
    std::cout << "g_min = " << rep.g_min << ", g_max = " << rep.g_max << "\nK = " << to_string(rep.k)
              << "\n"
              << rep.samples.size() - rep.failures << "/" << rep.samples.size()
              << " samples within the two-sided bound\n";
  }
  return rep.ok() ? kOk : kVerificationFailed;
}

int cmd_picard(const Options& o) {
  Input in = load(o);
  Integer card = picard_cardinality(in.lattice);
  auto factors = picard_invariant_factors(in.lattice);
  Json f = Json::array();
  std::string text = "|Pic| = " + card.str() + "\ninvariant factors:";
  for (const auto& x : factors) {
    f.push_back(num(x));
    text += " " + x.str();
  }
  text += "\n";
  Json j{{"order", num(card)}, {"invariant_factors", f}};
  bool ok = true;
  if (in.graph) {
    Integer trees = spanning_tree_count(*in.graph);
    ok = trees == card;
    j["spanning_trees"] = num(trees);
    text += "spanning trees = " + trees.str() + "\n";
  }
  emit(o, j, text);
  return ok ? kOk : kVerificationFailed;
}

int cmd_chipfire(const Options& o, const std::string& config) {
  Input in = load(o);
  if (!in.graph) throw InvalidInput("chipfire needs --graph");
  Configuration cfg(parse_divisor(config), in.graph);
  Winnability w = winnable(cfg);
  Json j{{"winnable", w.winnable},
         {"target", w.target ? vec(*w.target) : Json(nullptr)},
         {"script", w.script ? Json::parse(script_to_json(*w.script)) : Json(nullptr)}};
  std::string text = "winnable: " + yes_no(w.winnable) + "\n";
  if (w.target) text += "reaches " + to_string(*w.target) + "\n";
  if (w.script) {
    text += "fire:";
    for (auto v : *w.script) text += " " + std::to_string(v);
    text += "\n";
  }
  emit(o, j, text);
  return kOk;
}

int cmd_a2(const Options& o) {
  Input in = load(o);
  DigraphBasis b = digraph_basis(in.lattice);
  A2Classification c = classify_a2(in.lattice);
  Json j{{"basis", Json::array({vec(b.b0), vec(b.b1), vec(b.b2)})},
         {"steps", b.steps},
         {"critical_classes", c.critical_classes},
         {"multi_tree", c.multi_tree},
         {"strong", c.strong}};
  std::ostringstream t;
  t << "digraph basis: " << to_string(b.b0) << " " << to_string(b.b1) << " " << to_string(b.b2)
    << "\ncritical classes: " << c.critical_classes << "\nmulti-tree: " << yes_no(c.multi_tree)
    << "\nstrongly reflection invariant: " << yes_no(c.strong) << "\n";
  emit(o, j, t.str());
  return kOk;
}

int cmd_reduce(const Options& o, const std::string& path) {
  RationalSimplex s = parse_simplex_json(read_file(path));
  MembershipInstance m = reduce_simplex_to_membership(s);
  bool inside = simplex_has_integer_point(s);
  Json rows = Json::array();
  for (const auto& r : m.lattice.rows()) rows.push_back(vec(r));
  Json j{{"lattice", rows}, {"D", vec(m.d)}, {"N", num(m.scale)}, {"x", rvec(m.x)},
         {"has_integer_point", inside}};
  std::ostringstream t;
  t << format_lattice(m.lattice) << "D = " << to_string(m.d) << "\nN = " << m.scale
    << "\ninteger point: " << yes_no(inside) << "\n";
  emit(o, j, t.str());
  return kOk;
}

int cmd_render(const Options& o, const std::string& layers, const std::string& t,
               std::int64_t radius, const std::string& output) {
  Input in = load(o);
  if (in.lattice.ambient_dim() != 3) throw InvalidInput("render supports A_2 sub-lattices only");
  RenderLayers l;
  l.lattice = layers.find("lattice") != std::string::npos;
  l.critical = layers.find("critical") != std::string::npos;
  l.voronoi = layers.find("voronoi") != std::string::npos;
  if (!t.empty()) l.arrangement_t = parse_rational(t);
  std::string svg = svg_render_2d(in.lattice, extremals(in), l, Integer(radius));
  if (output.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(output);
    if (!out) throw InvalidInput("cannot write " + output);
    out << svg;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-Roch rank, genus and Voronoi tools for sub-lattices of A_n"};
  app.require_subcommand(1);
  app.footer(
      "Inputs:\n"
      "  graph JSON   {\"vertices\": k, \"edges\": [[i, j, mult], ...]} or lines \"i j mult\"\n"
      "  digraph      same, with ordered arcs\n"
      "  lattice      first line n+1, then n rows of n+1 integers\n"
      "  divisor      space-separated integers, e.g. \"1 0 -1\"\n"
      "  simplex      JSON list of vertices; entries are integers, \"p/q\" or [p, q]\n"
      "Exit codes: 0 success, 1 verification failure, 2 usage or resource error.");

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for sampled divisors")->capture_default_str();
  app.add_option("--budget", o.budget, "Largest degree handed to brute-force rank")
      ->capture_default_str();

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Undirected multigraph file");
    sub->add_option("--digraph", o.digraph, "Regular digraph file");
    sub->add_option("--lattice", o.lattice, "Lattice basis file");
  };

  std::string divisor, config, simplex, layers = "lattice,critical,voronoi", t, output, method = "extremal";
  std::int64_t radius = 30;
  std::size_t random_count = 50;

  auto* rank = app.add_subcommand("rank", "Rank r(D) by both algorithms");
  inputs(rank);
  rank->add_option("--divisor", divisor, "Divisor D")->required();
  auto* genus = app.add_subcommand("genus", "Min- and max-genus");
  inputs(genus);
  auto* ext = app.add_subcommand("extremals", "Classes of extremal points of the Sigma-region");
  inputs(ext);
  auto* canon = app.add_subcommand("canonical", "Canonical divisor K");
  inputs(canon);
  auto* cls = app.add_subcommand("classify", "Uniformity and reflection invariance");
  inputs(cls);
  auto* rr = app.add_subcommand("verify-rr", "Check the Riemann-Roch formula on sampled divisors");
  inputs(rr);
  rr->add_option("--method", method, "Rank algorithm")
      ->check(CLI::IsMember({"extremal", "bruteforce", "both"}))
      ->capture_default_str();
  rr->add_option("--random", random_count, "Random divisors added to the band samples")
      ->capture_default_str();
  auto* pic = app.add_subcommand("picard", "Order and invariant factors of A_n / L");
  inputs(pic);
  auto* chip = app.add_subcommand("chipfire", "Winnability and firing script");
  inputs(chip);
  chip->add_option("--config", config, "Chip configuration")->required();
  auto* a2 = app.add_subcommand("a2", "Regular-digraph basis and strong reflection invariance");
  inputs(a2);
  auto* red = app.add_subcommand("reduce-simplex", "Reduce simplex integer-point search to rank");
  red->add_option("--simplex", simplex, "Simplex JSON file")->required();
  auto* render = app.add_subcommand("render", "SVG picture of an A_2 sub-lattice");
  inputs(render);
  render->add_option("--layers", layers, "Comma-separated: lattice, critical, voronoi")
      ->capture_default_str();
  render->add_option("--arrangement", t, "Draw the simplex arrangement at level t");
  render->add_option("--radius", radius, "Coordinate bound of the drawn window")->capture_default_str();
  render->add_option("-o,--output", output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*rank) return cmd_rank(o, divisor);
    if (*genus) return cmd_genus(o);
    if (*ext) return cmd_extremals(o);
    if (*canon) return cmd_canonical(o);
    if (*cls) return cmd_classify(o);
    if (*rr) return cmd_verify_rr(o, method, random_count);
    if (*pic) return cmd_picard(o);
    if (*chip) return cmd_chipfire(o, config);
    if (*a2) return cmd_a2(o);
    if (*red) return cmd_reduce(o, simplex);
    if (*render) return cmd_render(o, layers, t, radius, output);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
