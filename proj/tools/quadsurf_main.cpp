// quadsurf: build, verify and combine quadrangular embeddings.
//
// Exit codes: 0 certified pass, 1 certified fail, 2 usage or parse error,
// 3 search budget exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadsurf/constructions.hpp"
#include "quadsurf/current_graph.hpp"
#include "quadsurf/current_search.hpp"
#include "quadsurf/diamond.hpp"
#include "quadsurf/embedding_io.hpp"
#include "quadsurf/ncbg.hpp"

using namespace quadsurf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NcbgSpec parse_expect(const std::string& text) {
  std::vector<int> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw UsageError("bad number");
    } catch (const std::exception&) {
      throw UsageError("--expect wants m,n,k; got '" + text + "'");
    }
  }
  if (v.size() != 3) throw UsageError("--expect wants m,n,k; got '" + text + "'");
  try {
    return NcbgSpec::canonical(v[0], v[1], v[2]);
  } catch (const NcbgError& e) {
    throw UsageError(e.what());
  }
}

Coloring coloring_for(const EmbeddingFile& f, std::optional<std::pair<int, int>> sizes) {
  if (f.white) return coloring_from_white(f.system.vertex_count(), *f.white);
  auto c = infer_coloring(f.system, sizes);
  if (!c) throw UsageError("embedding is not connected and bipartite, and lists no white vertices");
  return *c;
}

EmbeddingFile load(const std::string& path) {
  try {
    return parse_embedding(read_text_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

int report_exit(const CertificationReport& r) {
  std::cout << r.to_text();
  return r.pass ? kPass : kFail;
}

void write_embedding(const std::string& path, const ColoredEmbedding& e) {
  write_text_file(path, serialize_embedding(e.system, e.whites()));
}

// build ----------------------------------------------------------------------

struct BuildArgs {
  std::string family;
  int n = 0, p = 0, t = 0, m = 0;
  unsigned variant = 0;
  std::string out;
};

std::pair<ColoredEmbedding, NcbgSpec> run_build(const BuildArgs& a) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
  };
  if (a.family == "imbalanced") {
    need(a.n >= 3, "imbalanced needs --n >= 3");
    return {build_imbalanced(a.n), NcbgSpec::canonical(2 * a.n + 1, 2 * a.n, 2 * a.n)};
  }
  if (a.family == "balanced-even") {
    need(a.n >= 4, "balanced-even needs --n >= 4 (n = 3 is the g666 family)");
    return {build_balanced_even(a.n), NcbgSpec::canonical(2 * a.n, 2 * a.n, 2 * a.n)};
  }
  if (a.family == "g666") return {build_g666(), NcbgSpec::canonical(6, 6, 6)};
  if (a.family == "k3t") {
    need(a.t >= 4 && a.t % 2 == 0, "k3t needs even --t >= 4");
    return {build_k3_even(a.t), NcbgSpec::canonical(3, a.t, 0)};
  }
  if (a.family == "lemma3") {
    SeparationParams params{a.n, a.p};
    try {
      params.check();
    } catch (const NcbgError& e) {
      throw UsageError(e.what());
    }
    auto l3 = build_g3_2n_2(params);
    return {l3.embedding, NcbgSpec::canonical(3, 2 * a.n, 2)};
  }
  if (a.family == "kbip") {
    need(a.m >= 3, "kbip needs --m >= 3");
    need(a.t >= 4 && a.t % 2 == 0, "kbip needs even --t >= 4");
    return {build_kbip(a.m, a.t, a.variant), NcbgSpec::canonical(a.m, a.t, 0)};
  }
  throw UsageError("unknown family '" + a.family + "'");
}

int cmd_build(const BuildArgs& a) {
  auto [e, spec] = run_build(a);
  const auto first = certify(e.system, e.coloring, spec);
  if (!a.out.empty()) {
    write_embedding(a.out, e);
    const auto back = load(a.out);
    const auto again = certify(back.system, coloring_for(back, std::pair{spec.m, spec.n}), spec);
    if (again.to_text() != first.to_text()) {
      std::cout << first.to_text() << "reread: differs\n";
      return kFail;
    }
  }
  return report_exit(first);
}

// verify ---------------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& expect) {
  const NcbgSpec spec = parse_expect(expect);
  const auto f = load(path);
  return report_exit(certify(f.system, coloring_for(f, std::pair{spec.m, spec.n}), spec));
}

// derive / search-cg ---------------------------------------------------------

int print_derived(const CurrentGraph& cg, const std::string& out) {
  const auto report = verify_c1_c4(cg);
  std::cout << report.to_text();
  DerivedEmbedding d;
  try {
    d = derive_embedding(cg);
  } catch (const NcbgError& e) {
    std::cout << "derive: " << e.what() << '\n';
    return kFail;
  }
  std::cout << "face_zero: " << d.face_zero << '\n'
            << "log_convention: " << (d.convention == LogConvention::before ? "before" : "after") << '\n';
  if (!out.empty()) write_embedding(out, d.embedding);
  return report_exit(certify(d.embedding.system, d.embedding.coloring, NcbgSpec::canonical(cg.n, cg.n, cg.n)));
}

int cmd_derive(const std::string& path, const std::string& out) {
  CurrentGraph cg;
  try {
    cg = parse_current_graph(read_text_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (cg.n < 3 || cg.n % 2 == 0) throw UsageError("current graph needs odd n >= 3");
  return print_derived(cg, out);
}

int cmd_search(int n, std::uint64_t budget, int threads, bool serial, const std::string& out_cg,
               const std::string& out) {
  if (n < 5 || n % 2 == 0) throw UsageError("search-cg needs odd --n >= 5");
  const auto r = serial ? search_current_graphs_serial(n, budget) : search_current_graphs(n, budget, threads);
  std::cout << "nodes: " << r.nodes << '\n';
  if (r.status == SearchStatus::budget_exhausted) {
    std::cout << "status: budget exhausted\n";
    return kBudget;
  }
  if (r.status == SearchStatus::exhausted) {
    std::cout << "status: no current graph exists in the search space\n";
    return kFail;
  }
  std::cout << "status: found\n" << serialize_current_graph(*r.graph);
  if (!out_cg.empty()) write_text_file(out_cg, serialize_current_graph(*r.graph));
  return print_derived(*r.graph, out);
}

// dsum -----------------------------------------------------------------------

struct DsumArgs {
  std::string file1, file2;
  VertexId v1 = 0, v2 = 0;
  std::optional<std::size_t> shift;
  std::string expect;
  std::string out;
};

int cmd_dsum(const DsumArgs& a) {
  const auto f1 = load(a.file1);
  const auto f2 = load(a.file2);
  const Coloring c1 = coloring_for(f1, std::nullopt);
  const Coloring c2 = coloring_for(f2, std::nullopt);
  if (a.v1 >= f1.system.vertex_count() || a.v2 >= f2.system.vertex_count()) throw UsageError("vertex out of range");
  std::vector<GluingPlan> plans;
  try {
    plans = gluing_plans(f1.system, a.v1, f2.system, a.v2);
  } catch (const EmbeddingError& e) {
    throw UsageError(e.what());
  }
  std::size_t shift = 0;
  if (a.shift) {
    if (*a.shift >= plans.size()) throw UsageError("--shift out of range");
    shift = *a.shift;
  } else if (c1[a.v1] == Color::white && c2[a.v2] == Color::white) {
    try {
      const auto valid = valid_shifts(f1.system, a.v1, c1, f2.system, a.v2, c2);
      if (valid.empty()) {
        std::cout << "no shift avoids merging two unsaturated blacks\n";
        return kFail;
      }
      shift = valid.front().shift;
    } catch (const NcbgError&) {
      // unsaturated or non-bipartite input: keep shift 0
    }
  }
  const auto res = diamond_sum(f1.system, a.v1, f2.system, a.v2, shift);
  const Coloring c = res.coloring(c1, c2);
  const int chi1 = euler_characteristic(f1.system), chi2 = euler_characteristic(f2.system);
  const int chi = euler_characteristic(res.system);
  const bool chi_ok = chi == chi1 + chi2 - 2;
  const bool preserved = check_rotations_preserved(f1.system, c1, res);
  std::cout << "shift: " << shift << '\n'
            << "chi_first: " << chi1 << '\n'
            << "chi_second: " << chi2 << '\n'
            << "chi: " << chi << '\n'
            << "chi_additive: " << (chi_ok ? "yes" : "no") << '\n'
            << "rotations_preserved: " << (preserved ? "yes" : "no") << '\n'
            << "surface: " << surface_of(res.system).name() << '\n';
  if (!a.out.empty()) write_text_file(a.out, serialize_embedding(res.system, white_vertices(c)));
  bool ok = chi_ok && preserved;
  if (!a.expect.empty()) {
    const auto r = certify(res.system, c, parse_expect(a.expect));
    std::cout << r.to_text();
    ok = ok && r.pass;
  } else {
    std::cout << "verdict: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadrangular embeddings of nearly complete bipartite graphs"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "build and certify an embedding");
  b->add_option("family", build.family, "imbalanced | balanced-even | g666 | k3t | lemma3 | kbip")->required();
  b->add_option("--n", build.n, "n parameter");
  b->add_option("--p", build.p, "separation for lemma3");
  b->add_option("--t", build.t, "black count for k3t and kbip");
  b->add_option("--m", build.m, "white count for kbip");
  b->add_option("--variant", build.variant, "gluing variant for kbip");
  b->add_option("--out", build.out, "embedding file to write");

  std::string verify_file, verify_expect;
  auto* v = app.add_subcommand("verify", "certify an embedding file");
  v->add_option("file", verify_file)->required();
  v->add_option("--expect", verify_expect, "m,n,k")->required();

  std::string derive_file, derive_out;
  auto* d = app.add_subcommand("derive", "derived embedding of a current graph file");
  d->add_option("file", derive_file)->required();
  d->add_option("--out", derive_out, "derived embedding file to write");

  int search_n = 0, threads = 0;
  std::uint64_t budget = 100'000'000;
  bool serial = false;
  std::string search_cg_out, search_out;
  auto* s = app.add_subcommand("search-cg", "search for an index-2 current graph");
  s->add_option("--n", search_n)->required();
  s->add_option("--budget", budget, "node budget");
  s->add_option("--threads", threads, "OpenMP threads (0: default)");
  s->add_flag("--serial", serial, "use the serial reference search");
  s->add_option("--out-cg", search_cg_out, "current graph file to write");
  s->add_option("--out", search_out, "derived embedding file to write");

  DsumArgs dsum;
  auto* ds = app.add_subcommand("dsum", "diamond sum of two embedding files");
  ds->add_option("file1", dsum.file1)->required();
  ds->add_option("v1", dsum.v1)->required();
  ds->add_option("file2", dsum.file2)->required();
  ds->add_option("v2", dsum.v2)->required();
  ds->add_option("--shift", dsum.shift);
  ds->add_option("--expect", dsum.expect, "certify the result as m,n,k");
  ds->add_option("--out", dsum.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*b) return cmd_build(build);
    if (*v) return cmd_verify(verify_file, verify_expect);
    if (*d) return cmd_derive(derive_file, derive_out);
    if (*s) return cmd_search(search_n, budget, threads, serial, search_cg_out, search_out);
    if (*ds) return cmd_dsum(dsum);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
