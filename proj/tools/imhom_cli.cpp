// Command-line front end: load complexes and maps from JSON files or the
// built-in example corpus, run rank computations and property suites, and
// print fixed-width tables or machine-readable JSON.
//
// Exit codes: 0 when all requested checks pass, 1 when a check fails, 2 on
// input or validation errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "imhom/corpus.hpp"
#include "imhom/imcore.hpp"
#include "imhom/json_io.hpp"
#include "imhom/mayer_vietoris.hpp"
#include "imhom/stratify.hpp"

using json = nlohmann::json;
using namespace imh;

namespace {

struct Options {
  int subdivide = 0;
  std::string format = "table";
  unsigned seed = 0;  // accepted for interface stability; everything is deterministic
};

struct Input {
  std::string name;
  ComplexPtr complex;
  std::map<int, std::set<Simplex>> strat;  // user-supplied skeleta, if any
  std::optional<int> formal_dim;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ComplexPtr resolve_complex(const std::string& ref) {
  if (std::filesystem::exists(ref)) return parse_complex_document(read_file(ref)).complex;
  return build_corpus(ref).complex;
}

Input load_input(const std::string& ref, int subdivide) {
  Input in;
  if (std::filesystem::exists(ref)) {
    ComplexDocument doc = parse_complex_document(read_file(ref));
    in.name = doc.name.empty() ? ref : doc.name;
    in.complex = doc.complex;
    in.strat = doc.stratification;
    in.formal_dim = doc.formal_dim;
  } else {
    CorpusEntry e = build_corpus(ref);
    in.name = e.name;
    in.complex = e.complex;
  }
  for (int i = 0; i < subdivide; ++i) {
    if (!in.strat.empty()) {
      // carry the user skeleta through as named subcomplexes
      auto marked = std::make_shared<SimplicialComplex>(*in.complex);
      for (const auto& [c, simplices] : in.strat)
        marked->add_subcomplex("__skeleton" + std::to_string(c), simplices);
      ComplexPtr sub = barycentric_subdivision(marked).complex;
      std::map<int, std::set<Simplex>> lifted;
      for (const auto& [c, simplices] : in.strat)
        lifted[c] = sub->subcomplex("__skeleton" + std::to_string(c));
      in.complex = sub;
      in.strat = std::move(lifted);
    } else {
      in.complex = barycentric_subdivision(in.complex).complex;
    }
  }
  return in;
}

Stratification pick_stratification(const Input& in) {
  if (!in.strat.empty())
    return Stratification::make(in.complex, in.formal_dim.value_or(in.complex->dim()),
                                in.strat, true);
  return canonical_stratification(in.complex, true);
}

Perversity parse_perversity(const std::string& spec, int top_dim) {
  if (spec == "middle") return Perversity::middle(top_dim);
  if (spec == "zero") return Perversity::zero(top_dim);
  if (spec == "top") return Perversity::top(top_dim);
  if (spec.rfind("custom:", 0) == 0) {
    std::vector<int> values;
    std::stringstream ss(spec.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(std::stoi(tok));
    return Perversity::custom(top_dim, values);
  }
  throw std::invalid_argument("unknown perversity: " + spec +
                              " (use middle|zero|top|custom:v2,v3,...)");
}

std::string simplex_names(const SimplicialComplex& k, const Simplex& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += k.vertex_name(s[i]);
  }
  return out + "}";
}

void emit(const Options& opt, const json& report) {
  if (opt.format == "json") {
    std::printf("%s\n", report.dump(2).c_str());
    return;
  }
  // fixed-width table rendering of the common report fields
  if (report.contains("name")) std::printf("space: %s\n", report["name"].get<std::string>().c_str());
  if (report.contains("ranks")) {
    const json& ranks = report["ranks"];
    std::printf("%8s", "degree");
    for (const auto& [key, vals] : ranks.items()) std::printf("%10s", key.c_str());
    std::printf("\n");
    size_t depth = 0;
    for (const auto& [key, vals] : ranks.items()) depth = std::max(depth, vals.size());
    for (size_t d = 0; d < depth; ++d) {
      std::printf("%8zu", d);
      for (const auto& [key, vals] : ranks.items()) {
        if (d < vals.size())
          std::printf("%10d", vals[d].get<int>());
        else
          std::printf("%10s", "-");
      }
      std::printf("\n");
    }
  }
  for (const char* key : {"components", "strata", "representatives", "per_component"}) {
    if (!report.contains(key)) continue;
    std::printf("%s:\n", key);
    for (const json& line : report[key]) std::printf("  %s\n", line.dump().c_str());
  }
  if (report.contains("checks")) {
    for (const json& c : report["checks"]) {
      std::printf("%-60s %s\n", c["name"].get<std::string>().c_str(),
                  c["pass"].get<bool>() ? "PASS" : "FAIL");
      if (c.contains("detail"))
        std::printf("    %s\n", c["detail"].get<std::string>().c_str());
    }
  }
  if (report.contains("pass"))
    std::printf("overall: %s\n", report["pass"].get<bool>() ? "PASS" : "FAIL");
}

json ranks_json(const std::vector<int>& v) { return json(v); }

int run_homology(const Options& opt, const std::string& ref, std::optional<int> degree) {
  Input in = load_input(ref, opt.subdivide);
  json report;
  report["command"] = "homology";
  report["name"] = in.name;
  if (degree) {
    HomologySpace h(in.complex, *degree);
    report["ranks"]["H"] = json::array({h.rank()});
    json reps = json::array();
    for (const SparseVec& z : h.representatives()) {
      json chain = json::object();
      for (const auto& [i, coef] : z)
        chain[simplex_names(*in.complex, in.complex->simplex_at(*degree, i))] =
            to_string(coef);
      reps.push_back(std::move(chain));
    }
    report["representatives"] = std::move(reps);
  } else {
    report["ranks"]["H"] = ranks_json(homology_ranks(in.complex));
  }
  emit(opt, report);
  return 0;
}

int run_ih(const Options& opt, const std::string& ref, const std::string& perversity,
           std::optional<int> degree) {
  Input in = load_input(ref, opt.subdivide);
  Stratification s = pick_stratification(in);
  Perversity p = parse_perversity(perversity, std::max(2, s.formal_dim()));
  json report;
  report["command"] = "ih";
  report["name"] = in.name;
  report["perversity"] = p.name();
  if (degree) {
    report["ranks"]["IH"] = json::array({intersection_homology(s, p, *degree).rank});
  } else {
    report["ranks"]["IH"] = ranks_json(ih_ranks(s, p));
  }
  emit(opt, report);
  return 0;
}

int run_im_ker(const Options& opt, const std::string& ref, bool kernel_mode) {
  Input in = load_input(ref, opt.subdivide);
  ImAnalysis a(in.complex);
  json report;
  report["command"] = kernel_mode ? "ker" : "im";
  report["name"] = in.name;
  report["ranks"]["H"] = ranks_json(a.h_ranks());
  report["ranks"][kernel_mode ? "KER" : "IM"] =
      ranks_json(kernel_mode ? a.ker_ranks() : a.im_ranks());
  json breakdown = json::array();
  for (int d = 0; d <= in.complex->dim(); ++d) {
    const ImageHomology& im = a.image(d);
    json row;
    row["degree"] = d;
    json per = json::array();
    for (const Subspace& s : im.per_component) per.push_back(s.rank());
    row["component_image_ranks"] = std::move(per);
    breakdown.push_back(std::move(row));
  }
  report["per_component"] = std::move(breakdown);
  emit(opt, report);
  return 0;
}

int run_components(const Options& opt, const std::string& ref) {
  Input in = load_input(ref, opt.subdivide);
  auto comps = irreducible_components(*in.complex);
  json report;
  report["command"] = "components";
  report["name"] = in.name;
  json list = json::array();
  for (size_t i = 0; i < comps.size(); ++i) {
    int dim = 0;
    for (const Simplex& s : comps[i]) dim = std::max(dim, static_cast<int>(s.size()) - 1);
    json row;
    row["index"] = i;
    row["dim"] = dim;
    row["simplices"] = comps[i].size();
    list.push_back(std::move(row));
  }
  report["components"] = std::move(list);
  emit(opt, report);
  return 0;
}

int run_strata(const Options& opt, const std::string& ref) {
  Input in = load_input(ref, opt.subdivide);
  Stratification s = canonical_stratification(in.complex, true);
  json report;
  report["command"] = "strata";
  report["name"] = in.name;
  report["formal_dim"] = s.formal_dim();
  json list = json::array();
  for (int c : s.codims()) {
    json row;
    row["codim"] = c;
    json simplices = json::array();
    for (const Simplex& sx : s.skeleton(c))
      simplices.push_back(simplex_names(*s.complex(), sx));
    row["skeleton"] = std::move(simplices);
    list.push_back(std::move(row));
  }
  report["strata"] = std::move(list);
  emit(opt, report);
  return 0;
}

int run_map(const Options& opt, const std::string& path, std::optional<int> degree) {
  MapDocument doc = parse_map_document(read_file(path), resolve_complex);
  ImAnalysis dom(doc.map.domain), cod(doc.map.codomain);
  int max_degree = std::max(doc.map.domain->dim(), doc.map.codomain->dim());
  int lo = degree.value_or(0), hi = degree.value_or(max_degree);

  json report;
  report["command"] = "map";
  report["name"] = doc.domain + " -> " + doc.codomain;
  report["label"] = doc.label;
  json checks = json::array();
  bool all_pass = true;
  for (int d = lo; d <= hi; ++d) {
    MapCheck push = check_pushforward(doc.map, d, dom, cod);
    MapCheck pull = check_ker_pullback(doc.map, d, dom, cod);
    bool expect_equal = doc.label == "algebraic-model";
    bool expect_fail = doc.label == "non-algebraic-model";
    bool pass = true;
    std::string verdict;
    if (expect_equal) {
      pass = push.contained && push.equal && pull.contained && pull.equal;
      verdict = pass ? "pushforward/pullback equality holds" : "equality fails";
    } else if (expect_fail) {
      pass = true;  // informational: report containment failures as expected
      verdict = push.contained ? "containment holds" : "containment fails (expected-fail)";
    } else {
      verdict = push.contained ? "containment holds" : "containment fails";
    }
    all_pass = all_pass && pass;
    json c;
    c["name"] = "degree " + std::to_string(d);
    c["pass"] = pass;
    c["detail"] = verdict + "; pushed rank " + std::to_string(push.moved_rank) +
                  ", target rank " + std::to_string(push.target_rank) +
                  "; kernel pullback contained=" + (pull.contained ? "yes" : "no") +
                  " equal=" + (pull.equal ? "yes" : "no");
    c["pushforward_contained"] = push.contained;
    c["pushforward_equal"] = push.equal;
    c["pullback_contained"] = pull.contained;
    c["pullback_equal"] = pull.equal;
    if (expect_fail && !push.contained) c["expected_fail"] = true;
    checks.push_back(std::move(c));
  }
  report["checks"] = std::move(checks);
  report["pass"] = all_pass;
  emit(opt, report);
  return all_pass ? 0 : 1;
}

int run_mv(const Options& opt, const std::string& ref, const std::string& a,
           const std::string& b, int degree) {
  Input in = load_input(ref, opt.subdivide);
  MayerVietoris mv(in.complex, a, b);
  MvImCheck r = mv_im_check(in.complex, a, b, degree);
  int conn_rank = rank(mv.connecting(degree));

  json report;
  report["command"] = "mv";
  report["name"] = in.name;
  report["degree"] = degree;
  report["connecting_rank"] = conn_rank;
  json checks = json::array();
  json c1;
  c1["name"] = "boundary of IM_" + std::to_string(degree) + " lands in IM_" +
               std::to_string(degree - 1) + "(A n B)";
  c1["pass"] = r.contained;
  checks.push_back(std::move(c1));
  report["checks"] = std::move(checks);
  report["exactness_defect"] = r.defect;
  report["kernel_rank"] = r.kernel_rank;
  report["image_rank"] = r.image_rank;
  report["pass"] = r.contained;
  emit(opt, report);
  if (opt.format == "table")
    std::printf("exactness defect at IM_%d(A n B): %d\n", degree - 1, r.defect);
  return r.contained ? 0 : 1;
}

int run_check(const Options& opt, const std::string& ref, const std::string& suite) {
  Input in = load_input(ref, opt.subdivide);
  json report;
  report["command"] = "check";
  report["name"] = in.name;
  report["suite"] = suite;
  json checks = json::array();
  bool all_pass = true;

  if (suite == "invariance" || suite == "all") {
    CheckReport r = check_invariance(in.complex);
    for (const CheckItem& item : r.items) {
      json c;
      c["name"] = item.name;
      c["pass"] = item.pass;
      c["detail"] = item.detail;
      checks.push_back(std::move(c));
      all_pass = all_pass && item.pass;
    }
  }
  if (suite == "smooth" || suite == "all") {
    ImAnalysis a(in.complex);
    bool im_eq_h = a.im_ranks() == a.h_ranks();
    std::vector<int> kr = a.ker_ranks();
    bool ker_zero = std::all_of(kr.begin(), kr.end(), [](int r) { return r == 0; });
    json c1;
    c1["name"] = "IM=H in all degrees";
    c1["pass"] = im_eq_h;
    checks.push_back(std::move(c1));
    json c2;
    c2["name"] = "KER=0 in all degrees";
    c2["pass"] = ker_zero;
    checks.push_back(std::move(c2));
    all_pass = all_pass && im_eq_h && ker_zero;
  }
  if (suite != "invariance" && suite != "smooth" && suite != "all")
    throw std::invalid_argument("unknown suite: " + suite + " (use invariance|smooth|all)");

  report["checks"] = std::move(checks);
  report["pass"] = all_pass;
  emit(opt, report);
  return all_pass ? 0 : 1;
}

int run_corpus(const Options& opt, const std::string& name, const std::string& out_path) {
  CorpusEntry e = build_corpus(name);
  std::string text;
  if (!e.maps.empty() && (name == "normalization_map" || name == "torus_collapse_map")) {
    text = serialize_map_document(name, e.maps[0]);
  } else {
    text = serialize_complex_document(e);
  }
  if (out_path.empty() || out_path == "-") {
    std::printf("%s\n", text.c_str());
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << text;
  }
  if (opt.format == "table" && !out_path.empty() && out_path != "-")
    std::printf("wrote %s\n", out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection/image homology calculator for simplicial pseudomanifolds"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--subdivide", opt.subdivide, "apply N barycentric subdivisions first")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", opt.seed, "accepted and ignored; output is deterministic");

  std::string ref, a_name, b_name, perversity = "middle", suite = "all", out_path;
  std::optional<int> degree;
  int mv_degree = 1;

  auto add_degree = [&](CLI::App* cmd) {
    cmd->add_option_function<int>(
        "--degree", [&](int d) { degree = d; }, "restrict to one degree");
  };

  CLI::App* homology_cmd = app.add_subcommand("homology", "ordinary homology ranks");
  homology_cmd->add_option("input", ref, "JSON file or corpus name")->required();
  add_degree(homology_cmd);

  CLI::App* ih_cmd = app.add_subcommand("ih", "intersection homology ranks");
  ih_cmd->add_option("input", ref)->required();
  ih_cmd->add_option("--perversity", perversity, "middle|zero|top|custom:v2,v3,...");
  add_degree(ih_cmd);

  CLI::App* im_cmd = app.add_subcommand("im", "image homology ranks per degree");
  im_cmd->add_option("input", ref)->required();
  CLI::App* ker_cmd = app.add_subcommand("ker", "kernel cohomology ranks per degree");
  ker_cmd->add_option("input", ref)->required();

  CLI::App* comp_cmd = app.add_subcommand("components", "irreducible component listing");
  comp_cmd->add_option("input", ref)->required();

  CLI::App* strata_cmd = app.add_subcommand("strata", "canonical stratification report");
  strata_cmd->add_option("input", ref)->required();

  CLI::App* map_cmd = app.add_subcommand("map", "pushforward/pullback report for a map");
  map_cmd->add_option("input", ref, "map JSON file")->required();
  add_degree(map_cmd);

  CLI::App* mv_cmd = app.add_subcommand("mv", "Mayer-Vietoris image check");
  mv_cmd->add_option("input", ref)->required();
  mv_cmd->add_option("--a", a_name, "first cover subcomplex")->required();
  mv_cmd->add_option("--b", b_name, "second cover subcomplex")->required();
  mv_cmd->add_option("--degree", mv_degree, "degree of the connecting map")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "property suites");
  check_cmd->add_option("input", ref)->required();
  check_cmd->add_option("--suite", suite, "invariance|smooth|all");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "emit a corpus entry as JSON");
  corpus_cmd->add_option("name", ref, "corpus entry name")->required();
  corpus_cmd->add_option("--emit", out_path, "output file (default stdout)");

  // allow the global flags to appear after a subcommand as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (homology_cmd->parsed()) return run_homology(opt, ref, degree);
    if (ih_cmd->parsed()) return run_ih(opt, ref, perversity, degree);
    if (im_cmd->parsed()) return run_im_ker(opt, ref, false);
    if (ker_cmd->parsed()) return run_im_ker(opt, ref, true);
    if (comp_cmd->parsed()) return run_components(opt, ref);
    if (strata_cmd->parsed()) return run_strata(opt, ref);
    if (map_cmd->parsed()) return run_map(opt, ref, degree);
    if (mv_cmd->parsed()) return run_mv(opt, ref, a_name, b_name, mv_degree);
    if (check_cmd->parsed()) return run_check(opt, ref, suite);
    if (corpus_cmd->parsed()) return run_corpus(opt, ref, out_path);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 2;
  }
  return 2;
}
