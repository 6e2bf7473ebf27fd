// pclab: batch experiment driver for polynomial-calculus degree experiments
// on graph colouring. Subcommands wrap the library modules one-to-one; all
// randomized runs take an explicit 64-bit seed and re-running a command with
// the same arguments reproduces its output byte for byte.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pclab/closure.hpp"
#include "pclab/colouring.hpp"
#include "pclab/encode.hpp"
#include "pclab/errors.hpp"
#include "pclab/framework.hpp"
#include "pclab/graph.hpp"
#include "pclab/pc_prover.hpp"
#include "pclab/poly_json.hpp"
#include "pclab/random_graph.hpp"
#include "pclab/resgame.hpp"
#include "pclab/sparsity.hpp"

namespace {

using pclab::Json;

pclab::Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return pclab::Field::rationals();
  try {
    return pclab::Field::prime(std::stoull(s));
  } catch (const std::invalid_argument&) {
    throw pclab::DomainError("bad --field value: " + s + " (expected a prime or 'q')");
  }
}

void flatten_json(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_json(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    out.push_back({prefix, std::to_string(j.size()) + " items"});
  } else if (j.is_boolean()) {
    out.push_back({prefix, j.get<bool>() ? "true" : "false"});
  } else if (j.is_null()) {
    out.push_back({prefix, ""});
  } else if (j.is_string()) {
    out.push_back({prefix, j.get<std::string>()});
  } else {
    out.push_back({prefix, j.dump()});
  }
}

std::string to_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> flat;
  flatten_json(j, "", flat);
  std::string header, row;
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i) {
      header += ",";
      row += ",";
    }
    header += flat[i].first;
    row += "\"" + flat[i].second + "\"";
  }
  return header + "\n" + row + "\n";
}

void emit(const Json& j, const std::string& out_path, bool csv) {
  std::string text = csv ? to_csv(j) : j.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    pclab::require(f.good(), "cannot open " + out_path + " for writing");
    f << text;
  }
  std::cout << text;
}

Json graph_summary(const pclab::Graph& g) {
  return Json{{"n", g.n()}, {"m", g.m()}, {"max_degree", g.max_degree()}};
}

std::vector<uint32_t> parse_vertex_list(const std::string& s) {
  std::vector<uint32_t> out;
  std::string token;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!token.empty()) out.push_back(std::stoul(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(std::stoul(token));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial calculus degree experiments on graph colouring"};
  app.require_subcommand(1);

  // ---- sample ----
  auto* sample = app.add_subcommand("sample", "sample a random graph and write it to a file");
  std::string model = "gnp", out_path, csv_out;
  uint32_t n = 0;
  double dpar = 0.0;
  uint64_t seed = 0, rejection_budget = 1000000;
  bool csv = false;
  sample->add_option("--model", model, "gnp or regular")->check(CLI::IsMember({"gnp", "regular"}));
  sample->add_option("--n", n, "vertex count")->required();
  sample->add_option("--d", dpar, "expected degree (gnp: p = d/n) or exact degree (regular)")
      ->required();
  sample->add_option("--seed", seed, "rng seed")->required();
  sample->add_option("--out", out_path, "graph file to write")->required();
  sample->add_option("--rejection-budget", rejection_budget, "regular sampler attempt budget");

  // ---- encode ----
  auto* encode = app.add_subcommand("encode", "emit the colouring system (DIMACS or JSON)");
  std::string graph_path, format = "dimacs", field_str = "q";
  uint32_t k = 3;
  encode->add_option("--graph", graph_path, "graph file")->required();
  encode->add_option("--k", k, "colour count")->required();
  encode->add_option("--format", format, "dimacs or json")
      ->check(CLI::IsMember({"dimacs", "json"}));
  encode->add_option("--field", field_str, "field: a prime or q");
  encode->add_option("--out", out_path, "output file");

  // ---- sparsity ----
  auto* sparsity = app.add_subcommand("sparsity", "exact local sparsity check");
  uint32_t l = 12;
  std::string eps_str = "1/18";
  uint64_t set_budget = 50000000;
  sparsity->add_option("--graph", graph_path, "graph file")->required();
  sparsity->add_option("--l", l, "set size bound")->required();
  sparsity->add_option("--eps", eps_str, "epsilon, as a fraction or decimal")->required();
  sparsity->add_option("--budget-sets", set_budget, "enumeration budget");
  sparsity->add_flag("--csv", csv, "emit CSV instead of JSON");
  sparsity->add_option("--out", out_path, "output file");

  // ---- closure ----
  auto* closure_cmd = app.add_subcommand("closure", "closure of a vertex set with witness trace");
  std::string order_path, set_str;
  closure_cmd->add_option("--graph", graph_path, "graph file")->required();
  closure_cmd->add_option("--order", order_path, "vertex order file (default: identity)");
  closure_cmd->add_option("--set", set_str, "comma-separated vertex list")->required();
  closure_cmd->add_option("--out", out_path, "output file");

  // ---- tdelta ----
  auto* tdelta = app.add_subcommand("tdelta", "greedy high-degree cover");
  uint32_t delta = 6;
  tdelta->add_option("--graph", graph_path, "graph file")->required();
  tdelta->add_option("--delta", delta, "degree threshold")->required();
  tdelta->add_option("--out", out_path, "output file");

  // ---- mindegree ----
  auto* mindeg = app.add_subcommand("mindegree", "minimum refutation degree sweep");
  uint32_t dmax = 8;
  uint64_t monomial_budget = 2000000;
  mindeg->add_option("--graph", graph_path, "graph file")->required();
  mindeg->add_option("--k", k, "colour count")->required();
  mindeg->add_option("--field", field_str, "field: a prime or q");
  mindeg->add_option("--dmax", dmax, "largest degree to try")->required();
  mindeg->add_option("--budget-monomials", monomial_budget, "monomial universe budget");
  std::string certificate_path;
  mindeg->add_option("--certificate", certificate_path,
                     "write the refuting derivation (JSON rule list) here");
  mindeg->add_option("--out", out_path, "output file");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "full pipeline: cover, context, verifiers");
  uint32_t degree = 2;
  uint64_t samples = 2000;
  unsigned jobs = 1;
  uint32_t mindegree_vars = 24;
  std::optional<uint32_t> sp_l;
  std::string sp_eps;
  verify->add_option("--graph", graph_path, "graph file")->required();
  verify->add_option("--k", k, "colour count")->required();
  verify->add_option("--field", field_str, "field: a prime or q");
  verify->add_option("--delta", delta, "degree threshold for the cover")->required();
  verify->add_option("--degree", degree, "degree D to verify at")->required();
  verify->add_option("--samples", samples, "sample count per verifier");
  verify->add_option("--seed", seed, "rng seed")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--mindegree-vars", mindegree_vars,
                     "run the refutation-degree cross-check up to this many variables");
  verify->add_option("--l", sp_l, "optional sparsity l (adds a sparsity check + prediction)");
  verify->add_option("--eps", sp_eps, "optional sparsity epsilon");
  verify->add_flag("--csv", csv, "emit CSV instead of JSON");
  verify->add_option("--out", out_path, "output file");

  // ---- resgame ----
  auto* resgame = app.add_subcommand("resgame", "prover-adversary width game");
  uint32_t width = 4;
  uint64_t rounds = 10000;
  std::string prover_str = "greedy", transcript_path;
  resgame->add_option("--graph", graph_path, "graph file")->required();
  resgame->add_option("--k", k, "colour count")->required();
  resgame->add_option("--width", width, "prover memory bound")->required();
  resgame->add_option("--prover", prover_str, "random or greedy")
      ->check(CLI::IsMember({"random", "greedy"}));
  resgame->add_option("--rounds", rounds, "round budget");
  resgame->add_option("--seed", seed, "rng seed")->required();
  resgame->add_option("--transcript", transcript_path, "JSONL transcript file");
  resgame->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*sample) {
      pclab::Graph g = model == "gnp"
                           ? pclab::sample_gnp(n, dpar / n, seed)
                           : pclab::sample_regular(n, static_cast<uint32_t>(dpar), seed,
                                                   rejection_budget);
      pclab::write_graph_file(g, out_path);
      Json j = graph_summary(g);
      j["model"] = model;
      j["seed"] = seed;
      j["out"] = out_path;
      if (model == "regular") j["rejection_budget"] = rejection_budget;
      std::cout << j.dump(2) << "\n";
    } else if (*encode) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      if (format == "dimacs") {
        std::string text = pclab::cnf_to_dimacs(pclab::encode_cnf(g, k));
        if (!out_path.empty()) {
          std::ofstream f(out_path, std::ios::binary);
          pclab::require(f.good(), "cannot open " + out_path);
          f << text;
        }
        std::cout << text;
      } else {
        pclab::Field field = parse_field(field_str);
        pclab::ColInstance inst = pclab::encode_polynomials(g, k, field);
        Json axioms;
        auto dump_list = [](const std::vector<pclab::Polynomial>& ps) {
          Json a = Json::array();
          for (const auto& p : ps) a.push_back(pclab::polynomial_to_json(p));
          return a;
        };
        axioms["vertex_sum"] = dump_list(inst.vertex_sum);
        axioms["vertex_conflict"] = dump_list(inst.vertex_conflict);
        axioms["edge"] = dump_list(inst.edge);
        Json booleans = Json::array();
        for (const auto& v : inst.boolean_axioms)
          booleans.push_back(Json::array({v.vertex, v.colour}));
        axioms["boolean"] = booleans;
        Json j{{"field", pclab::field_to_json(field)},
               {"k", k},
               {"axiom_count", inst.axiom_count()},
               {"axioms", axioms}};
        emit(j, out_path, false);
      }
    } else if (*sparsity) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      auto report = pclab::check_sparsity(g, l, pclab::parse_eps(eps_str), set_budget);
      Json j{{"sparse", report.sparse},
             {"l", report.l},
             {"eps", report.eps.get_str()},
             {"mode", report.mode == pclab::SparsitySearchMode::exhaustive
                          ? "exhaustive"
                          : "connected-exhaustive"},
             {"sets_checked", report.sets_checked},
             {"budget_sets", set_budget}};
      if (report.witness) {
        Json w = Json::array();
        for (uint32_t v : *report.witness) w.push_back(v);
        j["witness"] = w;
        j["witness_edges"] = g.edges_within(*report.witness);
      } else {
        j["witness"] = nullptr;
      }
      emit(j, out_path, csv);
    } else if (*closure_cmd) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      pclab::VertexOrder ord = pclab::VertexOrder::identity(g.n());
      if (!order_path.empty()) {
        std::ifstream f(order_path);
        pclab::require(f.good(), "cannot open " + order_path);
        std::stringstream buf;
        buf << f.rdbuf();
        ord = pclab::vertex_order_from_string(buf.str());
        pclab::require(ord.n() == g.n(), "order size does not match the graph");
      }
      auto u = parse_vertex_list(set_str);
      auto result = pclab::closure_with_witness(g, ord, u);
      Json hops = Json::array();
      for (const auto& h : result.hops) {
        std::string kind = h.kind == pclab::HopOrLasso::Kind::lasso
                               ? "lasso"
                               : "hop" + std::to_string(h.length());
        Json walk = Json::array();
        for (uint32_t v : h.walk) walk.push_back(v);
        hops.push_back(Json{{"kind", kind}, {"walk", walk}});
      }
      Json cl = Json::array(), z = Json::array();
      for (uint32_t v : result.closure) cl.push_back(v);
      for (uint32_t v : result.witness) z.push_back(v);
      emit(Json{{"closure", cl}, {"witness_z", z}, {"hops", hops}}, out_path, false);
    } else if (*tdelta) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      auto cover = pclab::high_degree_cover(g, delta);
      std::vector<uint32_t> rest;
      std::vector<char> in_cover(g.n(), 0);
      for (uint32_t v : cover) in_cover[v] = 1;
      for (uint32_t v = 0; v < g.n(); ++v)
        if (!in_cover[v]) rest.push_back(v);
      Json tj = Json::array();
      for (uint32_t v : cover) tj.push_back(v);
      emit(Json{{"delta", delta},
                {"tdelta", tj},
                {"tdelta_size", cover.size()},
                {"residual_max_degree", g.induced(rest).max_degree()}},
           out_path, false);
    } else if (*mindeg) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      pclab::Field field = parse_field(field_str);
      pclab::ColInstance inst = pclab::encode_polynomials(g, k, field);
      pclab::MonomialOrder ord = pclab::MonomialOrder::identity(g.n(), k);
      pclab::PcOptions options;
      options.monomial_budget = monomial_budget;
      auto axioms = inst.polynomial_axioms();
      auto min = pclab::min_refutation_degree(axioms, field, ord, dmax, options);
      Json j{{"k", k},
             {"field", pclab::field_to_json(field)},
             {"dmax", dmax},
             {"budget_monomials", monomial_budget},
             {"min_degree", min ? Json(*min) : Json(nullptr)}};
      if (min && !certificate_path.empty()) {
        auto res = pclab::pc_degree_refutable(axioms, *min, field, ord, options);
        pclab::check_invariant(res.refutable && res.certificate.has_value(),
                               "sweep found a degree but the rerun did not");
        pclab::check_invariant(pclab::replay_certificate(axioms, field, *res.certificate, *min),
                               "certificate failed replay");
        std::ofstream f(certificate_path, std::ios::binary);
        pclab::require(f.good(), "cannot open " + certificate_path);
        f << res.certificate->dump(1) << "\n";
        j["certificate"] = certificate_path;
      }
      emit(j, out_path, false);
    } else if (*verify) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      pclab::Field field = parse_field(field_str);
      auto ctx = pclab::build_context(g, k, field, delta);
      pclab::PseudoReducer reducer(ctx);
      pclab::VerifyOptions options;
      options.samples = samples;
      options.jobs = jobs;
      auto report = pclab::verify_framework(reducer, degree, options, seed);
      Json j = pclab::framework_report_to_json(report);

      Json tj = Json::array();
      for (uint32_t v : ctx.t_delta) tj.push_back(v);
      Json order = Json::array();
      for (uint32_t r : ctx.vertex_order.rank) order.push_back(r);
      j["instance"] = Json{{"graph", graph_summary(g)},
                           {"k", k},
                           {"field", pclab::field_to_json(field)},
                           {"delta", delta},
                           {"tdelta", tj},
                           {"c", ctx.c},
                           {"c_exact", ctx.c_exact},
                           {"vertex_order", order}};
      j["budgets"] = Json{{"mindegree_vars", mindegree_vars},
                          {"monomial_budget", pclab::PcOptions{}.monomial_budget}};
      j["all_pass"] = report.all_pass();

      // satisfiability of the whole instance, and the refutation-degree
      // cross-check when the variable count allows it
      std::optional<bool> satisfiable;
      try {
        satisfiable = pclab::is_k_colourable(g, k).has_value();
      } catch (const pclab::ResourceError&) {
      }
      j["satisfiable"] = satisfiable ? Json(*satisfiable) : Json(nullptr);
      if (satisfiable && !*satisfiable && ctx.instance.n_variables() <= mindegree_vars) {
        auto axioms = ctx.instance.polynomial_axioms();
        auto min = pclab::min_refutation_degree(
            axioms, field, ctx.monomial_order,
            static_cast<uint32_t>(ctx.instance.n_variables()));
        j["min_refutation_degree"] = min ? Json(*min) : Json(nullptr);
      } else {
        j["min_refutation_degree"] = nullptr;
      }

      if (sp_l) {
        pclab::require(!sp_eps.empty(), "--l needs --eps");
        auto sp = pclab::check_sparsity(g, *sp_l, pclab::parse_eps(sp_eps));
        j["sparsity"] = Json{{"l", *sp_l}, {"eps", sp_eps}, {"sparse", sp.sparse}};
        auto predicted =
            pclab::predict_degree(mpq_class(static_cast<unsigned long>(*sp_l)), delta, ctx.c,
                                  ctx.t_delta.size());
        j["predicted_degree"] = predicted.get_str();
      }
      emit(j, out_path, csv);
    } else if (*resgame) {
      pclab::Graph g = pclab::read_graph_file(graph_path);
      std::string transcript;
      auto outcome = pclab::play(g, k, width,
                                 prover_str == "random" ? pclab::ProverKind::random
                                                        : pclab::ProverKind::greedy_conflict,
                                 rounds, seed, transcript_path.empty() ? nullptr : &transcript);
      if (!transcript_path.empty()) {
        std::ofstream f(transcript_path, std::ios::binary);
        pclab::require(f.good(), "cannot open " + transcript_path);
        f << transcript;
      }
      Json j{{"k", k},
             {"width", width},
             {"prover", prover_str},
             {"rounds", rounds},
             {"seed", seed},
             {"adversary_survived", outcome.adversary_survived},
             {"rounds_played", outcome.rounds_played}};
      if (outcome.witness) {
        j["witness"] = *outcome.witness;
        j["witness_improper"] = pclab::witness_is_improper(g, k, *outcome.witness);
      }
      emit(j, out_path, false);
    }
  } catch (const pclab::DomainError& e) {
    std::cerr << Json{{"error", "domain"}, {"what", e.what()}}.dump() << "\n";
    return 2;
  } catch (const pclab::ResourceError& e) {
    std::cerr << Json{{"error", "resource"}, {"what", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"what", e.what()}}.dump() << "\n";
    return 4;
  }
  return 0;
}
