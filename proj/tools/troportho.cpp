// Command-line driver. Prints one JSON document on stdout (also on input errors
// and exhausted limits, with an "error" member) and a short summary on stderr.
//
// Exit codes: 0 success, 1 a requested property check failed, 2 usage or
// input error, 3 a search limit was hit (inconclusive).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trop/border.hpp"
#include "trop/error.hpp"
#include "trop/families.hpp"
#include "trop/graphs.hpp"
#include "trop/ortho.hpp"
#include "trop/parallel.hpp"
#include "trop/report.hpp"
#include "trop/search.hpp"

using namespace trop;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr std::uint64_t kEdgeExportCap = 2'000'000;

// A file path, or an inline matrix with rows separated by '/'.
NormalMatrix load_matrix(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read '" + arg + "'");
    std::ostringstream text;
    text << in.rdbuf();
    std::string s = text.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return parse_matrix(s);
  }
  if (arg.find_first_not_of("0-/") != std::string::npos) {
    throw ParseError("'" + arg + "' is neither a readable file nor an inline matrix such as 0-/-0");
  }
  std::string s = arg;
  std::replace(s.begin(), s.end(), '/', '\n');
  return parse_matrix(s);
}

BorderVector parse_vector(const std::string& text) {
  if (text.empty() || static_cast<int>(text.size()) >= kMaxOrder) {
    throw ParseError("border vector '" + text + "' has a bad length");
  }
  BorderVector v{static_cast<int>(text.size()), 0};
  for (std::size_t t = 0; t < text.size(); ++t) {
    if (text[t] == '0') {
      v.zeros |= static_cast<LineMask>(1u << t);
    } else if (text[t] != '-') {
      throw ParseError("border vector '" + text + "' may only hold '0' and '-'");
    }
  }
  return v;
}

Json pair_json(const NormalMatrix& a, const NormalMatrix& b) {
  return Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}};
}

struct Context {
  Json doc;
  int exit_code = 0;
  std::string summary;
};

struct Options {
  std::vector<std::string> matrices;
  int n = 0;
  int k = 0;
  int m = 0;
  int variant = 0;
  int budget = -1;
  int max_sigma = -1;
  int index = 0;
  std::string mode = "exhaustive";
  std::string set;
  std::string within = "all";
  std::string kind = "ortho";
  std::string inner, v, w;
  std::uint64_t node_limit = 0;
  double time_limit = 0.0;
  int threads = 0;
  bool expect_zero = false;
  bool timing = false;
  bool stats = false;
  bool edges = false;
};

SearchLimits limits_of(const Options& o) { return {o.node_limit, o.time_limit, o.threads}; }

VertexSet parse_vertex_set(const std::string& s) {
  if (s == "all") return VertexSet::all_normal;
  if (s == "ortho") return VertexSet::ortho;
  if (s == "vnl") return VertexSet::vnl;
  if (s == "wnl") return VertexSet::wnl;
  throw InvalidArgument("unknown vertex set '" + s + "', expected all, ortho, vnl or wnl");
}

void require_matrices(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.matrices.size() < lo || o.matrices.size() > hi) {
    throw InvalidArgument("expected " + std::to_string(lo) +
                          (lo == hi ? "" : "-" + std::to_string(hi)) + " matrix argument(s), got " +
                          std::to_string(o.matrices.size()));
  }
}

void run_mul(const Options& o, Context& ctx) {
  require_matrices(o, 2, 2);
  const NormalMatrix a = load_matrix(o.matrices[0]);
  const NormalMatrix b = load_matrix(o.matrices[1]);
  const NormalMatrix ab = odot(a, b);
  ctx.doc["result"] = {{"AB", matrix_json(ab)},
                       {"BA", matrix_json(odot(b, a))},
                       {"A+B", matrix_json(oplus(a, b))},
                       {"AB_is_zero", ab.is_all_zero()},
                       {"orthogonal", is_orthogonal(a, b)}};
  ctx.summary = std::string("AB ") + (ab.is_all_zero() ? "is" : "is not") + " the zero matrix";
  if (o.expect_zero && !ab.is_all_zero()) ctx.exit_code = kExitCheckFailed;
}

void run_indicator(const Options& o, Context& ctx) {
  require_matrices(o, 2, 2);
  const IndicatorReport rep = indicator(load_matrix(o.matrices[0]), load_matrix(o.matrices[1]));
  ctx.doc["result"] = indicator_json(rep);
  ctx.summary = "prop " + std::to_string(rep.prop_count) + ", cost " +
                std::to_string(rep.cost_count) + ", gift " + std::to_string(rep.gift_count) +
                ", duplicates " + std::to_string(rep.duplicate_count) +
                (rep.indicator.is_all_zero() ? ", orthogonal" : ", not orthogonal");
}

void run_classify(const Options& o, Context& ctx) {
  require_matrices(o, 2, 2);
  const NormalMatrix a = load_matrix(o.matrices[0]);
  const NormalMatrix b = load_matrix(o.matrices[1]);
  const auto variant = classify_minimal_family(a, b);
  Json result;
  result["family"] = variant ? variant_json(*variant) : Json(nullptr);
  if (a == b) {
    result["from_indicator"] = nullptr;
  } else {
    const auto km = recover_minimal_family(indicator(a, b));
    result["from_indicator"] = km ? Json{{"k", km->first + 1}, {"m", km->second + 1}} : Json(nullptr);
  }
  ctx.doc["result"] = result;
  ctx.summary = variant ? "generic pair, variant " + std::to_string(variant->variant) + " at (" +
                              std::to_string(variant->k + 1) + "," + std::to_string(variant->m + 1) + ")"
                        : "not a generic minimal-family pair";
}

void run_orth_set(const Options& o, Context& ctx) {
  require_matrices(o, 1, 1);
  const NormalMatrix a = load_matrix(o.matrices[0]);
  const VertexSet set = parse_vertex_set(o.within);
  const auto members = orth_set(a, set);
  Json list = Json::array();
  for (const auto& b : members) list.push_back(matrix_json(b));
  ctx.doc["result"] = {{"within", to_string(set)}, {"count", members.size()}, {"members", list}};
  ctx.summary = std::to_string(members.size()) + " orthogonal matrices";
}

void run_generic(const Options& o, Context& ctx) {
  const FamilySpec spec = FamilySpec::parse(o.n, o.set);
  ctx.doc["result"] = family_json(spec);
  ctx.summary = "generic matrix of " + spec.to_string();
}

void run_mm(const Options& o, Context& ctx) {
  const MinimalVariant v{o.k - 1, o.m - 1, o.variant};
  const auto [fa, fb] = minimal_family_specs(o.n, v);
  const NormalMatrix a = fa.generic(), b = fb.generic();
  const IndicatorReport rep = indicator(a, b);
  ctx.doc["result"] = {{"family", variant_json(v)},
                       {"A_set", fa.to_string()},
                       {"B_set", fb.to_string()},
                       {"A", matrix_json(a)},
                       {"B", matrix_json(b)},
                       {"orthogonal", rep.indicator.is_all_zero()},
                       {"weight", pair_weight(a, b)},
                       {"prop", rep.prop_count},
                       {"gift", rep.gift_count}};
  ctx.summary = "weight " + std::to_string(pair_weight(a, b));
}

void run_theta(const Options& o, Context& ctx) {
  ThetaCertificate cert;
  if (o.mode == "exhaustive") {
    cert = exhaustive_pair_minimum(o.n, limits_of(o));
  } else if (o.mode == "bounded") {
    if (o.budget < 0) throw InvalidArgument("--mode bounded needs --budget");
    cert = bounded_pair_minimum(o.n, o.budget, limits_of(o));
  } else {
    throw InvalidArgument("unknown mode '" + o.mode + "', expected exhaustive or bounded");
  }
  ctx.doc["result"] = certificate_json(cert, o.timing);
  ctx.summary = "value " + std::to_string(cert.value) + " (" + to_string(cert.completeness) + ")";
}

void run_theta_delta(const Options& o, Context& ctx) {
  const ThetaCertificate cert = exhaustive_self_minimum(o.n, limits_of(o));
  ctx.doc["result"] = certificate_json(cert, o.timing);
  ctx.summary = "value " + std::to_string(cert.value) + ", " + std::to_string(cert.witness_total) +
                " minimizers";
}

void run_enumerate(const Options& o, Context& ctx) {
  const auto pairs = enumerate_orthogonal_pairs(o.n, o.max_sigma, limits_of(o));
  Json list = Json::array();
  for (const auto& [a, b] : pairs) {
    Json p = pair_json(a, b);
    p["weight"] = pair_weight(a, b);
    list.push_back(std::move(p));
  }
  ctx.doc["result"] = {{"count", pairs.size()}, {"pairs", list}};
  ctx.summary = std::to_string(pairs.size()) + " orthogonal pairs";
}

void run_check_theorem(const Options& o, Context& ctx) {
  const TheoremCheck check = check_minimality_theorem(o.n, limits_of(o));
  ctx.doc["result"] = theorem_json(check);
  ctx.summary = std::string("forward ") + (check.forward ? "holds" : "fails");
  if (check.equivalence) {
    ctx.summary += std::string(", equivalence ") + (*check.equivalence ? "holds" : "fails");
  }
}

void run_border(const Options& o, Context& ctx) {
  if (!o.inner.empty()) {
    const BorderedBlocks blocks{load_matrix(o.inner), parse_vector(o.v), parse_vector(o.w)};
    const NormalMatrix a = border_compose(blocks);
    ctx.doc["result"] = {{"blocks", blocks_json(blocks)}, {"matrix", matrix_json(a)}};
    ctx.summary = "composed order " + std::to_string(a.order());
    return;
  }
  require_matrices(o, 1, 2);
  const NormalMatrix a = load_matrix(o.matrices[0]);
  const BorderedBlocks ba = border_split(a);
  if (o.matrices.size() == 1) {
    const bool cond = bordered_self_condition(ba);
    ctx.doc["result"] = {{"blocks", blocks_json(ba)},
                         {"condition", cond},
                         {"self_orthogonal", is_self_orthogonal(a)}};
    ctx.summary = std::string("self condition ") + (cond ? "holds" : "fails");
    return;
  }
  const NormalMatrix b = load_matrix(o.matrices[1]);
  const BorderedBlocks bb = border_split(b);
  const bool cond = bordered_pair_condition(ba, bb);
  ctx.doc["result"] = {{"first", blocks_json(ba)},
                       {"second", blocks_json(bb)},
                       {"condition", cond},
                       {"orthogonal", is_orthogonal(a, b)}};
  ctx.summary = std::string("pair condition ") + (cond ? "holds" : "fails");
}

void run_reduce(const Options& o, Context& ctx) {
  require_matrices(o, 1, 1);
  const NormalMatrix a = load_matrix(o.matrices[0]);
  const NormalMatrix r = reduce_order(a, o.index - 1);
  Json result = {{"matrix", matrix_json(r)}};
  if (a.order() <= kMaxEnumerationOrder) {
    result["orth_count_before"] = orth_set(a).size();
    result["orth_count_after"] = orth_set(r).size();
  }
  ctx.doc["result"] = result;
  ctx.summary = "reduced to order " + std::to_string(r.order());
}

void run_graph(const Options& o, Context& ctx) {
  const RelationGraph g = RelationGraph::build(parse_graph_kind(o.kind), o.n, o.threads);
  Json result = graph_stats_json(g);
  if (o.edges) {
    Json verts = Json::array();
    for (const auto& v : g.vertices()) verts.push_back(matrix_json(v));
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges(kEdgeExportCap)) edges.push_back(Json::array({u, v}));
    Json loops = Json::array();
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      if (g.has_loop(u)) loops.push_back(u);
    }
    result["vertex_list"] = std::move(verts);
    result["edge_list"] = std::move(edges);
    result["loop_list"] = std::move(loops);
  }
  ctx.doc["result"] = result;
  ctx.summary = std::string(to_string(g.kind())) + " n=" + std::to_string(o.n) + ": " +
                std::to_string(g.vertex_count()) + " vertices";
}

void run_dist(const Options& o, Context& ctx) {
  require_matrices(o, 2, 2);
  const NormalMatrix a = load_matrix(o.matrices[0]);
  const NormalMatrix b = load_matrix(o.matrices[1]);
  check_same_order(a, b);
  const GraphKind kind = parse_graph_kind(o.kind);
  const RelationGraph g = RelationGraph::build(kind, a.order(), o.threads);
  const auto d = g.distance(g.index_of(a), g.index_of(b));
  ctx.doc["result"] = {{"kind", to_string(kind)},
                       {"n", a.order()},
                       {"adjacent", adjacent(kind, a, b)},
                       {"distance", d ? Json(*d) : Json("inf")}};
  ctx.summary = "distance " + (d ? std::to_string(*d) : std::string("inf"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonality of normal matrices over the semiring {0,-1}"};
  app.require_subcommand(1);
  Options o;

  auto add_matrices = [&](CLI::App* sub, const char* what) {
    sub->add_option("matrices", o.matrices, what);
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--node-limit", o.node_limit, "Abort after this many search nodes (0: none)");
    sub->add_option("--time-limit", o.time_limit, "Abort after this many seconds (0: none)");
    sub->add_option("--threads", o.threads, "Worker threads (default: TROP_THREADS or all cores)");
    sub->add_flag("--timing", o.timing, "Include elapsed time in the report");
  };

  auto* mul = app.add_subcommand("mul", "Products A*B, B*A and the sum A+B");
  add_matrices(mul, "Two matrices (files or inline rows joined by '/')");
  mul->add_flag("--expect-zero", o.expect_zero, "Exit 1 unless A*B is the zero matrix");

  auto* ind = app.add_subcommand("indicator", "Indicator matrix with zero classification");
  add_matrices(ind, "Two matrices");

  auto* cls = app.add_subcommand("classify", "Match a pair against the minimal generic families");
  add_matrices(cls, "Two matrices");

  auto* orth = app.add_subcommand("orth-set", "All matrices orthogonal to A (order <= 5)");
  add_matrices(orth, "One matrix");
  orth->add_option("--within", o.within, "all, ortho, vnl or wnl")->capture_default_str();

  auto* gen = app.add_subcommand("generic", "Generic matrix of a family such as V:1,2&Z:2,1");
  gen->add_option("--n", o.n, "Order")->required();
  gen->add_option("--set", o.set, "Family atoms joined by '&'")->required();

  auto* mm = app.add_subcommand("mm", "Generic pair of a minimal family variant");
  mm->add_option("--n", o.n, "Order")->required();
  mm->add_option("--k", o.k, "Index k (1-based)")->required();
  mm->add_option("--m", o.m, "Index m (1-based)")->required();
  mm->add_option("--variant", o.variant, "Variant 0..3")->capture_default_str();

  auto* theta = app.add_subcommand("theta", "Minimal weight of an orthogonal pair");
  theta->add_option("--n", o.n, "Order")->required();
  theta->add_option("--mode", o.mode, "exhaustive or bounded")->capture_default_str();
  theta->add_option("--budget", o.budget, "Bounded mode: prove no pair of weight <= budget");
  add_limits(theta);

  auto* delta = app.add_subcommand("theta-delta", "Minimal off-diagonal zeros of a self-orthogonal matrix");
  delta->add_option("--n", o.n, "Order")->required();
  add_limits(delta);

  auto* en = app.add_subcommand("enumerate", "Every orthogonal pair up to a weight");
  en->add_option("--n", o.n, "Order")->required();
  en->add_option("--max-sigma", o.max_sigma, "Maximum pair weight")->required();
  add_limits(en);

  auto* thm = app.add_subcommand("check-theorem", "Compare minimal pairs with the generic families");
  thm->add_option("--n", o.n, "Order: 2, 3, 4 or 7..10")->required();
  add_limits(thm);

  auto* border = app.add_subcommand("border", "Split bordered matrices and check the transfer conditions");
  add_matrices(border, "One matrix (self condition) or two (pair condition)");
  border->add_option("--inner", o.inner, "Compose instead: inner block");
  border->add_option("--v", o.v, "Compose: last column head, e.g. 0-0");
  border->add_option("--w", o.w, "Compose: last row head");

  auto* reduce = app.add_subcommand("reduce", "Drop an index whose row and column are strictly negative");
  add_matrices(reduce, "One matrix");
  reduce->add_option("--i", o.index, "Index (1-based)")->required();

  auto* graph = app.add_subcommand("graph", "Build a relation graph and report its metrics");
  graph->add_option("--kind", o.kind, "ortho, vnl or wnl")->required();
  graph->add_option("--n", o.n, "Order")->required();
  graph->add_flag("--stats", o.stats, "Report metrics (default)");
  graph->add_flag("--edges", o.edges, "Also export vertices, edges and loops");
  graph->add_option("--threads", o.threads, "Worker threads");

  auto* dist = app.add_subcommand("dist", "Distance between two vertices of a relation graph");
  add_matrices(dist, "Two matrices");
  dist->add_option("--kind", o.kind, "ortho, vnl or wnl")->required();
  dist->add_option("--threads", o.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Context ctx;
  ctx.doc["command"] = sub->get_name();
  Json inputs;
  if (!o.matrices.empty()) inputs["matrices"] = o.matrices;
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string& oname = opt->get_name();
    // Worker count only affects timing, so it stays out of the report.
    if (oname == "matrices" || oname == "--help" || oname == "--threads" || opt->count() == 0) continue;
    inputs[opt->get_name()] = opt->as<std::string>();
  }
  ctx.doc["inputs"] = inputs.is_null() ? Json::object() : inputs;

  try {
    const std::string name = sub->get_name();
    if (name == "mul") run_mul(o, ctx);
    else if (name == "indicator") run_indicator(o, ctx);
    else if (name == "classify") run_classify(o, ctx);
    else if (name == "orth-set") run_orth_set(o, ctx);
    else if (name == "generic") run_generic(o, ctx);
    else if (name == "mm") run_mm(o, ctx);
    else if (name == "theta") run_theta(o, ctx);
    else if (name == "theta-delta") run_theta_delta(o, ctx);
    else if (name == "enumerate") run_enumerate(o, ctx);
    else if (name == "check-theorem") run_check_theorem(o, ctx);
    else if (name == "border") run_border(o, ctx);
    else if (name == "reduce") run_reduce(o, ctx);
    else if (name == "graph") run_graph(o, ctx);
    else if (name == "dist") run_dist(o, ctx);
  } catch (const ResourceExhausted& e) {
    ctx.doc["error"] = {{"type", "inconclusive"}, {"message", e.what()}};
    ctx.exit_code = kExitInconclusive;
    ctx.summary = std::string("inconclusive: ") + e.what();
  } catch (const Error& e) {
    ctx.doc["error"] = {{"type", "invalid_input"}, {"message", e.what()}};
    ctx.exit_code = kExitUsage;
    ctx.summary = std::string("error: ") + e.what();
  }

  ctx.doc["exit_status"] = ctx.exit_code;
  std::cout << ctx.doc.dump(2) << '\n';
  std::cerr << sub->get_name() << ": " << ctx.summary << '\n';
  return ctx.exit_code;
}
