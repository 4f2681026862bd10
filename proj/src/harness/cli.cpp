#include "explab/harness/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "explab/complexes/cochain.hpp"
#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/errors.hpp"
#include "explab/exactla/matrix_io.hpp"
#include "explab/expansion/expansion.hpp"
#include "explab/expansion/modq.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/json_util.hpp"
#include "explab/spanning/spanning.hpp"

namespace explab {
namespace {

using nlohmann::json;

struct RingArgs {
  std::string ring = "q";
  std::uint32_t modulus = 0;
};

Ring parse_ring(const RingArgs& args) {
  if (args.ring == "q") return Ring::rationals();
  if (args.ring == "z") return Ring::integers();
  if (args.ring == "zq") {
    if (args.modulus == 0) throw CLI::ValidationError("--modulus", "required for --ring zq");
    return Ring::mod(args.modulus);
  }
  throw CLI::ValidationError("--ring", "expected q, z or zq");
}

json result_json(const ExpansionResult& r, bool exact) {
  const auto integral = to_integer(r.witness);
  return {{"value", to_json(r.value)},
          {"witness", integral ? to_json(*integral) : to_json(r.witness)},
          {"target", to_json(r.target)},
          {"ring", r.ring.to_string()},
          {"solver", to_string(r.solver)},
          {"exact", exact}};
}

json evaluate_at(const IntMatrix& a, const IntVector& v, Ring ring) {
  switch (ring.kind) {
    case Ring::Kind::Q:
      return result_json(xi_q_at(a, v), true);
    case Ring::Kind::Z:
      return result_json(xi_z_at(a, v), true);
    case Ring::Kind::Zq:
      return result_json(
          xi_zq_at(reduce_mod_q(a, ring.modulus), reduce_mod_q(v, ring.modulus)), true);
  }
  return {};
}

json evaluate_global(const IntMatrix& a, Ring ring) {
  GlobalExpansion g;
  json at;
  if (ring.kind == Ring::Kind::Zq) {
    const ModQMatrix reduced = reduce_mod_q(a, ring.modulus);
    g = xi_zq_global(reduced);
    at = result_json(xi_zq_at(reduced, reduce_mod_q(g.attaining_target, ring.modulus)), g.exact);
  } else {
    const ExpansionSolver solver(a);
    if (ring.kind == Ring::Kind::Q) {
      g = solver.xi_q_global();
      at = result_json(solver.xi_q_at(g.attaining_target), g.exact);
    } else {
      g = solver.xi_z_global();
      at = result_json(solver.xi_z_at(g.attaining_target), g.exact);
    }
  }
  // The reported value is the global one; the witness is a preimage at the
  // attaining target.
  at["value"] = to_json(g.value);
  at["candidates"] = g.candidates;
  return at;
}

FamilyRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral and finite-field expansion of integer matrices", "explab"};
  app.require_subcommand(1);

  std::string matrix_file, target_file;
  RingArgs ring_args;
  std::optional<std::uint64_t> max_subsets;

  auto* span = app.add_subcommand("span-check", "Decide integral spanning of the rows");
  span->add_option("matrix", matrix_file, "Generator matrix file")->required();
  span->add_option("--max-subsets", max_subsets, "Refuse inputs needing more subset checks");

  auto* xi = app.add_subcommand("xi", "Expansion at one target");
  xi->add_option("--ring", ring_args.ring, "q, z or zq")->check(CLI::IsMember({"q", "z", "zq"}));
  xi->add_option("--modulus", ring_args.modulus, "Prime modulus for zq");
  xi->add_option("--target", target_file, "Target vector file")->required();
  xi->add_option("matrix", matrix_file, "Matrix file")->required();

  auto* xi_global = app.add_subcommand("xi-global", "Supremum over the image");
  xi_global->add_option("--ring", ring_args.ring, "q, z or zq")
      ->check(CLI::IsMember({"q", "z", "zq"}));
  xi_global->add_option("--modulus", ring_args.modulus, "Prime modulus for zq");
  xi_global->add_option("matrix", matrix_file, "Matrix file")->required();

  auto* xi_zq = app.add_subcommand("xi-zq", "Expansion over Z_q at one target, or globally");
  xi_zq->add_option("--modulus", ring_args.modulus, "Prime modulus")->required();
  xi_zq->add_option("--target", target_file, "Target vector file; omit for the global value");
  xi_zq->add_option("matrix", matrix_file, "Matrix file")->required();

  std::string graph_file, presentation_file, d1_file, out_dir = ".";
  auto* build = app.add_subcommand("build-complex", "Write d0.mat and d1.mat for a complex");
  auto* graph_opt = build->add_option("--graph", graph_file, "Graph file");
  auto* pres_opt = build->add_option("--presentation", presentation_file, "Presentation file");
  graph_opt->excludes(pres_opt);
  build->add_option("--d1", d1_file, "2-cell matrix for a graph complex")->needs(graph_opt);
  build->add_option("--out", out_dir, "Output directory");

  std::string campaign, report_file, format = "json", n_range = "3..7",
                        steinberg_range = "3..4";
  std::uint64_t seed = 1;
  std::optional<std::size_t> count, tiny_count;
  std::vector<std::uint32_t> primes{2, 3, 5};
  std::vector<std::string> complex_dirs;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("campaign", campaign)
      ->required()
      ->check(CLI::IsMember({"equality", "cw", "modq", "presentations", "lemma-oracle",
                             "incidence-kernel", "substrate"}));
  verify->add_option("--seed", seed);
  verify->add_option("--count", count, "Random instances");
  verify->add_option("--tiny-count", tiny_count, "Box-search instances (substrate)");
  verify->add_option("--primes", primes, "Moduli for modq")->delimiter(',');
  verify->add_option("--n-range", n_range, "Braid indices, LO..HI");
  verify->add_option("--steinberg-range", steinberg_range, "Steinberg indices, LO..HI");
  verify->add_option("--complex", complex_dirs, "Directory with d0.mat and d1.mat (cw)");
  verify->add_option("--out", report_file, "Write the full report here");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }

  try {
    if (*span) {
      const IntMatrix g = read_matrix_file(matrix_file);
      SpanningOptions options;
      options.max_subsets = max_subsets;
      const SpanningVerdict v = is_integrally_spanned(g, options);
      json j = {{"spanned", v.spanned},
                {"witness_subset", nullptr},
                {"witness_vector", nullptr},
                {"subsets_checked", v.subsets_checked}};
      if (v.witness) {
        j["witness_subset"] = v.witness->subset.indices();
        j["witness_vector"] = to_json(v.witness->vector);
      }
      out << j.dump() << '\n';
      return 0;
    }
    if (*xi || *xi_zq) {
      if (*xi_zq) ring_args.ring = "zq";
      const Ring ring = parse_ring(ring_args);
      const IntMatrix a = read_matrix_file(matrix_file);
      if (*xi_zq && target_file.empty()) {
        out << evaluate_global(a, ring).dump() << '\n';
        return 0;
      }
      out << evaluate_at(a, read_vector_file(target_file), ring).dump() << '\n';
      return 0;
    }
    if (*xi_global) {
      out << evaluate_global(read_matrix_file(matrix_file), parse_ring(ring_args)).dump() << '\n';
      return 0;
    }
    if (*build) {
      std::optional<CochainComplex> c;
      if (!graph_file.empty()) {
        const Graph g = read_graph_file(graph_file);
        c = d1_file.empty() ? graph_complex(g, graph_file)
                            : graph_complex(g, read_matrix_file(d1_file), graph_file);
      } else if (!presentation_file.empty()) {
        c = presentation_complex(parse_presentation(read_text_file(presentation_file)),
                                 presentation_file);
      } else {
        throw CLI::ValidationError("build-complex", "one of --graph or --presentation is required");
      }
      std::filesystem::create_directories(out_dir);
      const auto d0_path = std::filesystem::path(out_dir) / "d0.mat";
      const auto d1_path = std::filesystem::path(out_dir) / "d1.mat";
      write_matrix_file(d0_path, c->d0());
      write_matrix_file(d1_path, c->d1());
      out << json{{"vertices", c->vertices()},
                  {"edges", c->edges()},
                  {"faces", c->faces()},
                  {"h1_trivial", h1_is_trivial(*c)},
                  {"d0", d0_path.string()},
                  {"d1", d1_path.string()}}
                 .dump()
          << '\n';
      return 0;
    }

    CampaignReport report;
    if (campaign == "equality") {
      report = campaign_equality(seed, count.value_or(200));
    } else if (campaign == "cw") {
      std::vector<CochainComplex> complexes;
      for (const auto& dir : complex_dirs) {
        const std::filesystem::path p(dir);
        complexes.emplace_back(read_matrix_file(p / "d0.mat"), read_matrix_file(p / "d1.mat"),
                               dir);
      }
      report = campaign_cw(complexes.empty() ? default_cw_complexes() : complexes);
    } else if (campaign == "modq") {
      report = campaign_modq(seed, count.value_or(100), primes);
    } else if (campaign == "presentations") {
      report = campaign_presentations(parse_range(n_range), parse_range(steinberg_range));
    } else if (campaign == "lemma-oracle") {
      report = campaign_lemma_oracle(seed, count.value_or(100));
    } else if (campaign == "incidence-kernel") {
      report = campaign_incidence_kernel(seed, count.value_or(200));
    } else {
      report = campaign_substrate(seed, count.value_or(500), tiny_count.value_or(100));
    }
    const std::string body =
        format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
    if (report_file.empty()) {
      out << body;
    } else {
      write_text(report_file, body);
      out << report.to_json()["totals"].dump() << '\n';
    }
    return report.ok() ? 0 : 1;
  } catch (const Error& e) {
    json j = {{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
      j["line"] = p->line();
      j["column"] = p->column();
    } else if (const auto* r = dynamic_cast<const RowShapeError*>(&e)) {
      j["row"] = r->row();
    } else if (const auto* n = dynamic_cast<const NotInIntegerImageError*>(&e)) {
      j["rational_value"] = n->rational_value();
    }
    err << json{{"error", j}}.dump() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    err << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", {{"kind", "io_error"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }
}

}  // namespace explab
