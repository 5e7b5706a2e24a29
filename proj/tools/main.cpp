// Command-line surface over the purecomplex library.  JSON in/out on stdio;
// exit codes: 0 success, 1 negative verdict, 2 usage or input error,
// 3 budget exceeded.

#include "purecomplex/purecomplex.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace pc = purecomplex;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

json read_json_input(const std::string& path) {
  try {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") +
                                e.what());
  }
}

int default_threads() {
  if (const char* env = std::getenv("PURECOMPLEX_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return std::min(v, 64);
    } catch (const std::exception&) {
      // fall through to hardware default
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? std::min<int>(static_cast<int>(hw), 16) : 1;
}

pc::ComplexFilter parse_filter(const std::string& name) {
  if (name == "none") return pc::ComplexFilter::none;
  if (name == "clique") return pc::ComplexFilter::clique;
  return pc::ComplexFilter::clique_tif;  // "clique-tif", enforced by CLI11
}

// ---- published tables -----------------------------------------------------

struct TableCell {
  int p, q;
  pc::Int value;
};

const std::vector<TableCell>& published_s_v() {
  static const std::vector<TableCell> t = {
      {2, 1, pc::Int(1)},      {2, 2, pc::Int(6)},
      {2, 3, pc::Int(62)},     {2, 4, pc::Int(900)},
      {2, 5, pc::Int(16824)},  {2, 6, pc::Int(384668)},
      {3, 1, pc::Int(1)},      {3, 2, pc::Int(31)},
      {3, 3, pc::Int(2649)},   {3, 4, pc::Int(441061)},
      {3, 5, pc::Int(121105865)},
      {3, 6, pc::Int("49615422851")},
      {4, 1, pc::Int(1)},      {4, 2, pc::Int(160)},
      {4, 3, pc::Int(116360)}, {4, 4, pc::Int("231173330")},
      {4, 5, pc::Int("974787170226")},
      {4, 6, pc::Int("7500396185804060")},
  };
  return t;
}

const std::vector<TableCell>& published_w_v() {
  static const std::vector<TableCell> t = {
      {2, 1, pc::Int(1)},      {2, 2, pc::Int(6)},
      {2, 3, pc::Int(61)},     {2, 4, pc::Int(878)},
      {2, 5, pc::Int(16323)},  {2, 6, pc::Int(371782)},
      {3, 1, pc::Int(1)},      {3, 2, pc::Int(31)},
      {3, 3, pc::Int(2495)},   {3, 4, pc::Int(394920)},
      {3, 5, pc::Int(104268613)},
      {3, 6, pc::Int("41419848444")},
      {4, 1, pc::Int(1)},      {4, 2, pc::Int(160)},
      {4, 3, pc::Int(101875)}, {4, 4, pc::Int("178682745")},
      {4, 5, pc::Int("679213720913")},
      {4, 6, pc::Int("4793115687225971")},
  };
  return t;
}

// r(p,q) for p = 2..5, q = 1..10.
const std::vector<TableCell>& published_turan() {
  static const std::vector<TableCell> t = [] {
    const int rows[4][10] = {
        {2, 3, 4, 4, 5, 5, 6, 6, 6, 7},
        {3, 4, 5, 5, 6, 6, 6, 6, 7, 7},
        {4, 5, 6, 6, 7, 7, 7, 7, 8, 8},
        {5, 6, 7, 7, 8, 8, 8, 8, 9, 9},
    };
    std::vector<TableCell> cells;
    for (int p = 2; p <= 5; ++p)
      for (int q = 1; q <= 10; ++q)
        cells.push_back({p, q, pc::Int(rows[p - 2][q - 1])});
    return cells;
  }();
  return t;
}

// (p, q) cells small enough to brute-force in the test budget.
const std::vector<std::pair<int, int>>& oracle_envelope() {
  static const std::vector<std::pair<int, int>> cells = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
      {3, 2}, {3, 3}, {4, 1}, {4, 2}};
  return cells;
}

// ---- subcommands ----------------------------------------------------------

int cmd_analyze(const std::string& input) {
  pc::SimplicialComplex K = pc::complex_from_json(read_json_input(input));
  auto B = pc::incidence_from_facets(K);
  auto Q = pc::adjacency_from_incidence(B);
  auto vd = pc::vertex_data_from_incidence(B);
  auto clique = pc::is_clique_complex_by_theorem(K);
  auto ti = pc::has_triangle_intersection(K);

  json out;
  out["complex"] = pc::to_json(K);
  out["n"] = K.vertex_count();
  out["q"] = K.facet_count();
  auto purity = K.purity();
  out["purity"] = purity ? json(*purity) : json(nullptr);
  out["incidence"] = pc::to_json(B);
  out["adjacency"] = pc::to_json(Q);
  out["vertex_data"] = pc::to_json(vd);
  out["clique"] = json{{"is_clique_complex", clique.is_clique_complex}};
  if (!clique.is_clique_complex)
    out["clique"]["witness"] = clique.witness;
  out["triangle_intersection"] = json{{"found", ti.found}};
  if (ti.found) out["triangle_intersection"]["witness"] = ti.facets;
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_check_matrix(const std::string& kind, const std::string& input,
                     std::optional<int> max_subset_size, int max_facets,
                     std::uint64_t node_budget) {
  pc::IntMatrix raw = pc::matrix_from_json(read_json_input(input));
  if (kind == "incidence") {
    auto r = pc::is_realizable_incidence(raw);
    json out{{"kind", "incidence"}, {"realizable", r.realizable}};
    if (!r.realizable) {
      if (r.failure == pc::IncidenceRealizability::Failure::zero_row) {
        out["failure"] = "zero_row";
        out["row"] = r.row;
      } else {
        out["failure"] = "comparable_rows";
        out["row"] = r.row;
        out["other_row"] = r.other_row;
      }
    }
    std::cout << out.dump(2) << "\n";
    return r.realizable ? kOk : kNegative;
  }

  pc::FacetAdjacencyMatrix Q(raw);
  auto ineq = pc::check_adjacency_inequalities(Q, max_subset_size);
  json report{{"family_holds", ineq.family_holds},
              {"strict_pairwise_holds", ineq.strict_pairwise_holds}};
  if (!ineq.family_holds)
    report["family_witness"] =
        json{{"subset", ineq.family_subset}, {"index", ineq.family_index}};
  if (!ineq.strict_pairwise_holds)
    report["pair"] = json::array({ineq.pair_i, ineq.pair_j});

  pc::AdjacencySearchOptions opts;
  opts.max_facets = max_facets;
  opts.node_budget = node_budget;
  auto r = pc::is_realizable_adjacency(Q, opts);

  json out{{"kind", "adjacency"}, {"inequalities", report}};
  switch (r.verdict) {
    case pc::SearchVerdict::realizable:
      out["realizable"] = "yes";
      break;
    case pc::SearchVerdict::not_realizable:
      out["realizable"] = "no";
      break;
    case pc::SearchVerdict::undecided:
      out["realizable"] = "undecided";
      break;
  }
  out["nodes"] = r.nodes;
  if (r.witness) out["vertex_data"] = pc::to_json(*r.witness);
  std::cout << out.dump(2) << "\n";
  if (r.verdict == pc::SearchVerdict::realizable) return kOk;
  if (r.verdict == pc::SearchVerdict::not_realizable) return kNegative;
  return kBudget;
}

int cmd_reconstruct(const std::string& input) {
  pc::FacetAdjacencyMatrix Q(pc::matrix_from_json(read_json_input(input)));
  if (Q.facet_count() > 16)
    throw std::invalid_argument("reconstruct: more than 16 facets unsupported");
  pc::ReconstructionResult r = [&] {
    try {
      return pc::reconstruct_from_adjacency(Q);
    } catch (const std::invalid_argument& e) {
      // Inconsistent data: no pure TIF clique complex has this matrix.
      std::cerr << "not reconstructible: " << e.what() << "\n";
      std::exit(kNegative);
    }
  }();
  json out{{"complex", pc::to_json(r.complex)},
           {"vertex_data", pc::to_json(r.vertex_data)},
           {"verified", r.verified()},
           {"checks",
            {{"adjacency_matches", r.adjacency_matches},
             {"pure", r.pure},
             {"clique", r.clique},
             {"triangle_intersection_free", r.triangle_intersection_free}}}};
  std::cout << out.dump(2) << "\n";
  return r.verified() ? kOk : kNegative;
}

int cmd_counterexample(int k) {
  pc::CounterexamplePair pair = pc::generate_counterexample(k);
  std::cout << pc::to_json(pair).dump(2) << "\n";
  return kOk;
}

struct CountArgs {
  std::string quantity = "pure";
  int p = 0;
  std::optional<int> q, n, k;
  std::string method = "formula";
  std::string filter = "none";
  std::string emit = "plain";
  std::uint64_t budget = 100'000'000;
  int threads = 0;
};

int cmd_count(const CountArgs& a) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v)
      throw std::invalid_argument(std::string("count ") + a.quantity +
                                  " requires " + flag);
    return *v;
  };
  auto formula_only = [&] {
    if (a.method != "formula")
      throw std::invalid_argument("count " + a.quantity +
                                  " supports --method formula only");
  };

  pc::Int value;
  std::string header, row_prefix;
  if (a.quantity == "pure") {
    int q = need(a.q, "--q");
    if (a.method == "formula") {
      value = a.n ? pc::s_pure(a.p, q, *a.n) : pc::s_pure_total(a.p, q);
    } else if (a.method == "series") {
      if (a.n)
        throw std::invalid_argument("count pure --method series has no per-n form");
      value = pc::s_pure_series(a.p, q);
    } else {
      pc::EnumerationTask task;
      task.p = a.p;
      task.q = q;
      if (a.n) task.n_min = task.n_max = *a.n;
      task.filter = parse_filter(a.filter);
      task.budget = a.budget;
      task.threads = a.threads;
      value = pc::Int(pc::enumerate_count(task).total);
    }
    if (a.n) {
      header = "p,q,n,value";
      row_prefix = std::to_string(a.p) + "," + std::to_string(q) + "," +
                   std::to_string(*a.n);
    } else {
      header = "p,q,value";
      row_prefix = std::to_string(a.p) + "," + std::to_string(q);
    }
  } else if (a.quantity == "pure-by-vertices") {
    formula_only();
    int n = need(a.n, "--n");
    value = pc::s_pure_by_vertices(a.p, n);
    header = "p,n,value";
    row_prefix = std::to_string(a.p) + "," + std::to_string(n);
  } else if (a.quantity == "alignments") {
    int k = need(a.k, "--k");
    if (a.method == "formula")
      value = pc::alignments(a.p, k);
    else if (a.method == "oracle")
      value = pc::enumerate_alignments(a.p, k, a.budget);
    else
      throw std::invalid_argument("count alignments: --method must be formula or oracle");
    header = "p,k,value";
    row_prefix = std::to_string(a.p) + "," + std::to_string(k);
  } else if (a.quantity == "turan") {
    formula_only();
    int q = need(a.q, "--q");
    value = pc::turan_number(a.p, q);
    header = "p,q,value";
    row_prefix = std::to_string(a.p) + "," + std::to_string(q);
  } else {  // clique-bound
    formula_only();
    int q = need(a.q, "--q");
    value = pc::clique_upper_bound(a.p, q);
    header = "p,q,value";
    row_prefix = std::to_string(a.p) + "," + std::to_string(q);
  }

  if (a.emit == "csv")
    std::cout << header << "\n" << row_prefix << "," << value << "\n";
  else
    std::cout << value << "\n";
  return kOk;
}

struct EnumerateArgs {
  int p = 0, q = 0;
  std::optional<int> n;
  std::string filter = "none";
  std::string emit = "count";
  std::uint64_t budget = 100'000'000;
  int threads = 0;
  std::uint64_t seed = 0;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.emit == "sample") {
    if (a.n)
      throw std::invalid_argument("enumerate --emit sample ignores --n; drop it");
    pc::SimplicialComplex K = pc::random_pure_clique_tif(a.p, a.q, a.seed);
    std::cout << pc::to_json(K).dump(2) << "\n";
    return kOk;
  }

  pc::EnumerationTask task;
  task.p = a.p;
  task.q = a.q;
  if (a.n) task.n_min = task.n_max = *a.n;
  task.filter = parse_filter(a.filter);
  task.budget = a.budget;
  task.threads = a.threads;

  if (a.emit == "jsonl") {
    pc::enumerate_stream(task, [](const pc::SimplicialComplex& K) {
      std::cout << pc::to_json(K).dump() << "\n";
      return true;
    });
    return kOk;
  }
  auto counts = pc::enumerate_count(task);
  std::cout << "n,count\n";
  for (const auto& [n, c] : counts.per_n) std::cout << n << "," << c << "\n";
  std::cout << "total," << counts.total << "\n";
  return kOk;
}

int cmd_verify_tables(const std::string& method, bool with_oracle, int threads,
                      std::uint64_t budget) {
  int failures = 0, cells = 0;
  auto report = [&](const std::string& label, const pc::Int& expected,
                    const pc::Int& got) {
    ++cells;
    if (expected == got) {
      std::cout << "PASS " << label << " = " << got << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << label << ": expected " << expected << ", got "
                << got << "\n";
    }
  };

  for (const auto& cell : published_s_v()) {
    pc::Int got = method == "series" ? pc::s_pure_series(cell.p, cell.q)
                                     : pc::s_pure_total(cell.p, cell.q);
    report("s_v(" + std::to_string(cell.p) + "," + std::to_string(cell.q) +
               ") " + method,
           cell.value, got);
  }
  for (const auto& cell : published_turan())
    report("r(" + std::to_string(cell.p) + "," + std::to_string(cell.q) + ")",
           cell.value, pc::turan_number(cell.p, cell.q));

  if (with_oracle) {
    auto find = [](const std::vector<TableCell>& table, int p, int q) {
      for (const auto& c : table)
        if (c.p == p && c.q == q) return c.value;
      throw std::logic_error("table cell missing");
    };
    for (auto [p, q] : oracle_envelope()) {
      pc::EnumerationTask task;
      task.p = p;
      task.q = q;
      task.budget = budget;
      task.threads = threads;
      report("oracle s_v(" + std::to_string(p) + "," + std::to_string(q) + ")",
             find(published_s_v(), p, q),
             pc::Int(pc::enumerate_count(task).total));
      task.filter = pc::ComplexFilter::clique;
      report("oracle w_v(" + std::to_string(p) + "," + std::to_string(q) + ")",
             find(published_w_v(), p, q),
             pc::Int(pc::enumerate_count(task).total));
    }
  }

  if (failures == 0) {
    std::cout << "all " << cells << " cells match\n";
    return kOk;
  }
  std::cout << failures << " of " << cells << " cells mismatch\n";
  return kNegative;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"pure simplicial and clique complex toolkit"};
  app.require_subcommand(1);
  int threads = default_threads();

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "report incidence, adjacency, vertex data, purity, clique and "
                 "triangle-intersection verdicts for a complex");
  std::string analyze_input = "-";
  analyze->add_option("input", analyze_input, "complex JSON file, or - for stdin");

  // check-matrix
  auto* check = app.add_subcommand(
      "check-matrix", "decide realizability of an incidence or adjacency matrix");
  std::string check_kind;
  std::string check_input = "-";
  std::optional<int> max_subset_size;
  int max_facets = 6;
  std::uint64_t node_budget = 50'000'000;
  check->add_option("kind", check_kind, "incidence or adjacency")
      ->required()
      ->check(CLI::IsMember({"incidence", "adjacency"}));
  check->add_option("input", check_input, "matrix JSON file, or - for stdin");
  check->add_option("--max-subset-size", max_subset_size,
                    "cap |S| in the adjacency inequality scan");
  check->add_option("--max-facets", max_facets,
                    "adjacency search limit (undecided beyond)");
  check->add_option("--budget", node_budget, "adjacency search node budget");

  // reconstruct
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "rebuild a pure TIF clique complex from its adjacency matrix");
  std::string reconstruct_input = "-";
  reconstruct->add_option("input", reconstruct_input,
                          "adjacency matrix JSON file, or - for stdin");

  // counterexample
  auto* counterexample = app.add_subcommand(
      "counterexample",
      "emit the degree-k agreement / degree-(k+1) disagreement pair");
  int ce_k = 0;
  counterexample->add_option("--k", ce_k, "agreement degree (>= 3)")->required();

  // count
  auto* count = app.add_subcommand("count", "exact counts and bounds");
  CountArgs count_args;
  count_args.threads = threads;
  count->add_option("quantity", count_args.quantity,
                    "pure | pure-by-vertices | alignments | turan | clique-bound")
      ->check(CLI::IsMember(
          {"pure", "pure-by-vertices", "alignments", "turan", "clique-bound"}));
  count->add_option("--p", count_args.p, "purity")->required();
  count->add_option("--q", count_args.q, "facet count");
  count->add_option("--n", count_args.n, "vertex count");
  count->add_option("--k", count_args.k, "strip count (alignments)");
  count->add_option("--method", count_args.method, "formula | series | oracle")
      ->check(CLI::IsMember({"formula", "series", "oracle"}));
  count->add_option("--filter", count_args.filter,
                    "oracle filter: none | clique | clique-tif")
      ->check(CLI::IsMember({"none", "clique", "clique-tif"}));
  count->add_option("--emit", count_args.emit, "plain | csv")
      ->check(CLI::IsMember({"plain", "csv"}));
  count->add_option("--budget", count_args.budget, "oracle candidate budget");
  count->add_option("--threads", count_args.threads, "oracle worker count");

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "brute-force the p-pure q-facet complexes");
  EnumerateArgs enum_args;
  enum_args.threads = threads;
  enumerate->add_option("--p", enum_args.p, "purity")->required();
  enumerate->add_option("--q", enum_args.q, "facet count")->required();
  enumerate->add_option("--n", enum_args.n, "restrict to one vertex count");
  enumerate->add_option("--filter", enum_args.filter,
                        "none | clique | clique-tif")
      ->check(CLI::IsMember({"none", "clique", "clique-tif"}));
  enumerate->add_option("--emit", enum_args.emit, "count | jsonl | sample")
      ->check(CLI::IsMember({"count", "jsonl", "sample"}));
  enumerate->add_option("--budget", enum_args.budget, "candidate budget per n");
  enumerate->add_option("--threads", enum_args.threads, "worker count");
  enumerate->add_option("--seed", enum_args.seed, "sampling seed (--emit sample)");

  // verify-tables
  auto* verify = app.add_subcommand(
      "verify-tables", "recompute the published count tables, cell by cell");
  std::string verify_method = "formula";
  bool verify_oracle = false;
  std::uint64_t verify_budget = 100'000'000;
  int verify_threads = threads;
  verify->add_option("--method", verify_method, "formula | series")
      ->check(CLI::IsMember({"formula", "series"}));
  verify->add_flag("--oracle", verify_oracle,
                   "also brute-force the small (p,q) cells, s_v and w_v");
  verify->add_option("--threads", verify_threads, "oracle worker count");
  verify->add_option("--budget", verify_budget, "oracle candidate budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_input);
    if (check->parsed())
      return cmd_check_matrix(check_kind, check_input, max_subset_size,
                              max_facets, node_budget);
    if (reconstruct->parsed()) return cmd_reconstruct(reconstruct_input);
    if (counterexample->parsed()) return cmd_counterexample(ce_k);
    if (count->parsed()) return cmd_count(count_args);
    if (enumerate->parsed()) return cmd_enumerate(enum_args);
    if (verify->parsed())
      return cmd_verify_tables(verify_method, verify_oracle, verify_threads,
                               verify_budget);
  } catch (const pc::budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int main(int argc, char** argv) { return run(argc, argv); }
