// Command-line front door. Every command prints either a human table or
// machine-readable JSON (--format json); all rationals are exact "a/b".
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "commonpair/certificate.hpp"
#include "commonpair/expansion.hpp"
#include "commonpair/json_io.hpp"

using namespace commonpair;

namespace {

struct Options {
  std::string format = "table";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
}

std::vector<Rational> parse_delta_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

void print_witness(const WitnessReport& report, const Options& opt) {
  if (opt.json()) {
    std::cout << witness_to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "witness " << report.kind
            << ": verdict=" << (report.negative ? "negative" : "non-negative")
            << " value=" << format_rational(report.value);
  if (report.delta) std::cout << " delta=" << format_rational(*report.delta);
  if (report.tensor_k) std::cout << " k=" << *report.tensor_k;
  std::cout << " scale=" << format_rational(report.scale) << "\n";
  for (const auto& [name, count] : report.tallies) {
    std::cout << "  " << name << "=" << count << "\n";
  }
  if (!report.negative) {
    for (const GridPoint& pt : report.sweep) {
      std::cout << "  delta=" << format_rational(pt.delta);
      if (pt.tensor_k >= 0) std::cout << " k=" << pt.tensor_k;
      std::cout << " value=" << format_rational(pt.value) << "\n";
    }
  }
}

void print_verification(const VerificationReport& report, const Options& opt) {
  if (opt.json()) {
    std::cout << verification_to_json(report).dump(2) << "\n";
    return;
  }
  if (report.certified) {
    std::cout << "certified, " << report.equality_count << "/"
              << report.slacks.size() << " equalities, min_slack="
              << format_rational(report.min_slack) << "\n";
  } else {
    std::cout << "rejected: " << report.reason << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homomorphism densities, commonality gaps, witness "
               "constructions, and flag certificate verification"};
  app.require_subcommand(1);
  Options opt;

  // graphs enumerate
  auto* graphs_cmd = app.add_subcommand("graphs", "Small-graph utilities");
  graphs_cmd->require_subcommand(1);
  auto* enumerate_cmd =
      graphs_cmd->add_subcommand("enumerate", "List isomorphism classes");
  int enum_n = 5;
  enumerate_cmd->add_option("--n", enum_n, "Vertex count")->required();
  add_format(enumerate_cmd, opt);
  enumerate_cmd->callback([&] {
    const GraphClassTable table = enumerate_classes(enum_n);
    if (opt.json()) {
      std::cout << class_table_to_json(table).dump(2) << "\n";
      return;
    }
    std::cout << table.classes.size() << " classes on " << table.n
              << " vertices\n";
    int idx = 0;
    for (const auto& entry : table.classes) {
      std::cout << ++idx << "\t" << graph_key(entry.rep) << "\taut="
                << entry.aut << "\tedges=" << graph_to_json(entry.rep)["edges"].dump()
                << "\n";
    }
  });

  // density
  auto* density_cmd = app.add_subcommand("density", "t(H, U) in a step kernel");
  std::string density_graph, density_kernel;
  density_cmd->add_option("--graph", density_graph, "Graph (name or JSON)")
      ->required();
  density_cmd->add_option("--kernel", density_kernel, "Step kernel JSON file")
      ->required();
  add_format(density_cmd, opt);
  density_cmd->callback([&] {
    const Graph h = parse_graph_spec(density_graph);
    const StepKernel u = load_kernel(density_kernel);
    const Rational value = density(h, u);
    if (opt.json()) {
      std::cout << Json{{"density", format_rational(value)}}.dump(2) << "\n";
    } else {
      std::cout << format_rational(value) << "\n";
    }
  });

  // gap
  auto* gap_cmd = app.add_subcommand("gap", "Commonality gap of a colour system");
  std::string gap_spec;
  gap_cmd->add_option("--spec", gap_spec, "Colour system JSON file")->required();
  add_format(gap_cmd, opt);
  gap_cmd->callback([&] {
    const ColourSystem sys = load_system(gap_spec);
    const Rational value = commonality_gap(sys);
    if (opt.json()) {
      std::cout << Json{{"gap", format_rational(value)},
                        {"good", value >= 0}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << format_rational(value) << "\n";
    }
  });

  // candidate-p
  auto* candidate_cmd =
      app.add_subcommand("candidate-p", "The only admissible p for odd-girth pairs");
  std::string cand_h1, cand_h2;
  candidate_cmd->add_option("--h1", cand_h1)->required();
  candidate_cmd->add_option("--h2", cand_h2)->required();
  add_format(candidate_cmd, opt);
  candidate_cmd->callback([&] {
    const auto result = candidate_p(parse_graph_spec(cand_h1),
                                    parse_graph_spec(cand_h2));
    if (!result) {
      if (opt.json()) {
        std::cout << Json{{"candidate", nullptr}}.dump(2) << "\n";
      } else {
        std::cout << "none (girths differ)\n";
      }
      return;
    }
    if (opt.json()) {
      std::cout << candidate_to_json(*result).dump(2) << "\n";
    } else {
      std::cout << "alpha^" << (result->girth - 1) << " = "
                << format_rational(result->alpha_power)
                << ", p ~ " << result->p_float;
      if (result->p_exact) {
        std::cout << ", p = " << format_rational(*result->p_exact);
      }
      std::cout << "\n";
    }
  });

  // witness girth|k4|multicolour|c4c5
  auto* witness_cmd = app.add_subcommand("witness", "Counterexample kernels");
  witness_cmd->require_subcommand(1);
  std::string w_h1, w_h2, w_h3, w_p, w_p2, w_p3, w_deltas, w_ks;

  auto* girth_cmd = witness_cmd->add_subcommand("girth", "p * B^delta sweep");
  girth_cmd->add_option("--h1", w_h1)->required();
  girth_cmd->add_option("--h2", w_h2)->required();
  girth_cmd->add_option("--p", w_p, "p1")->required();
  girth_cmd->add_option("--deltas", w_deltas, "Comma-separated rationals");
  add_format(girth_cmd, opt);
  girth_cmd->callback([&] {
    const auto deltas =
        w_deltas.empty() ? default_delta_grid() : parse_delta_list(w_deltas);
    print_witness(girth_witness(parse_graph_spec(w_h1), parse_graph_spec(w_h2),
                                parse_rational(w_p), deltas),
                  opt);
  });

  auto* k4_cmd = witness_cmd->add_subcommand(
      "k4", "Tensor-power sweep for pairs containing K4");
  k4_cmd->add_option("--h1", w_h1)->required();
  k4_cmd->add_option("--h2", w_h2)->required();
  k4_cmd->add_option("--p", w_p, "p1")->required();
  k4_cmd->add_option("--deltas", w_deltas, "Comma-separated rationals");
  k4_cmd->add_option("--ks", w_ks, "Comma-separated tensor powers k (2k+1 used)");
  add_format(k4_cmd, opt);
  k4_cmd->callback([&] {
    const auto deltas =
        w_deltas.empty() ? default_delta_grid() : parse_delta_list(w_deltas);
    std::vector<int> ks = default_tensor_power_grid();
    if (!w_ks.empty()) {
      ks.clear();
      for (const Rational& r : parse_delta_list(w_ks)) {
        ks.push_back(r.convert_to<int>());
      }
    }
    print_witness(k4_witness(parse_graph_spec(w_h1), parse_graph_spec(w_h2),
                             parse_rational(w_p), deltas, ks),
                  opt);
  });

  auto* multi_cmd =
      witness_cmd->add_subcommand("multicolour", "Three-colour B^delta sweep");
  multi_cmd->add_option("--h1", w_h1)->required();
  multi_cmd->add_option("--h2", w_h2)->required();
  multi_cmd->add_option("--h3", w_h3)->required();
  multi_cmd->add_option("--p1", w_p)->required();
  multi_cmd->add_option("--p2", w_p2)->required();
  multi_cmd->add_option("--p3", w_p3)->required();
  multi_cmd->add_option("--deltas", w_deltas, "Comma-separated rationals");
  add_format(multi_cmd, opt);
  multi_cmd->callback([&] {
    const auto deltas =
        w_deltas.empty() ? default_delta_grid() : parse_delta_list(w_deltas);
    print_witness(
        multicolour_girth_witness(parse_graph_spec(w_h1), parse_graph_spec(w_h2),
                                  parse_graph_spec(w_h3), parse_rational(w_p),
                                  parse_rational(w_p2), parse_rational(w_p3),
                                  deltas),
        opt);
  });

  auto* c4c5_cmd = witness_cmd->add_subcommand(
      "c4c5", "(C4, C5) against the two-block identity graphon");
  c4c5_cmd->add_option("--p", w_p, "p1")->required();
  add_format(c4c5_cmd, opt);
  c4c5_cmd->callback([&] {
    const Rational p = parse_rational(w_p);
    const StepKernel w1 = two_block_identity_graphon();
    const ColourSystem sys = make_colour_system(
        {{cycle_graph(4), p, w1},
         {cycle_graph(5), Rational(1) - p, complement_graphon(w1)}});
    const Rational gap = commonality_gap(sys);
    // 40p^4 + 32(1-p)p^3 - 5 > 0 iff this witness refutes (p, 1-p).
    const Rational poly = 40 * rational_pow(p, 4) +
                          32 * (Rational(1) - p) * rational_pow(p, 3) - 5;
    const std::string poly_sign = poly > 0 ? "positive" : (poly < 0 ? "negative" : "zero");
    if (opt.json()) {
      std::cout << Json{{"p", format_rational(p)},
                        {"gap", format_rational(gap)},
                        {"verdict", gap < 0 ? "negative" : "non-negative"},
                        {"polynomial", format_rational(poly)},
                        {"polynomial_sign", poly_sign}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "gap=" << format_rational(gap) << " ("
                << (gap < 0 ? "negative" : "non-negative")
                << "), 40p^4+32(1-p)p^3-5 = " << format_rational(poly) << " ("
                << poly_sign << ")\n";
    }
  });

  // flags table
  auto* flags_cmd = app.add_subcommand("flags", "Flag basis utilities");
  flags_cmd->require_subcommand(1);
  auto* table_cmd =
      flags_cmd->add_subcommand("table", "Full gluing coefficient table (JSON)");
  table_cmd->callback(
      [&] { std::cout << gluing_table_to_json().dump(2) << "\n"; });

  // cert verify|search|round
  auto* cert_cmd = app.add_subcommand("cert", "Certificate operations");
  cert_cmd->require_subcommand(1);
  std::string cert_file, cert_out, cert_h1, cert_h2, cert_p;
  int cert_iters = 20000;
  unsigned cert_seed = 1;
  long long cert_den = 8640;

  auto* verify_cmd = cert_cmd->add_subcommand("verify", "Exact verification");
  verify_cmd->add_option("file", cert_file, "Certificate JSON")->required();
  add_format(verify_cmd, opt);
  // A rejected certificate is a verdict, not a domain error: exit 0 either way.
  verify_cmd->callback([&] {
    print_verification(verify(load_certificate(cert_file)), opt);
  });

  auto* search_cmd =
      cert_cmd->add_subcommand("search", "Best-effort float SDP search");
  search_cmd->add_option("--h1", cert_h1)->required();
  search_cmd->add_option("--h2", cert_h2)->required();
  search_cmd->add_option("--p", cert_p, "p1")->required();
  search_cmd->add_option("--iters", cert_iters)->capture_default_str();
  search_cmd->add_option("--seed", cert_seed)->capture_default_str();
  search_cmd->add_option("--out", cert_out, "Write float certificate JSON here");
  add_format(search_cmd, opt);
  search_cmd->callback([&] {
    const FloatCertificate fc =
        search(parse_graph_spec(cert_h1), parse_graph_spec(cert_h2),
               parse_rational(cert_p), cert_iters, cert_seed);
    if (!cert_out.empty()) save_float_certificate(fc, cert_out);
    if (opt.json()) {
      std::cout << float_certificate_to_json(fc).dump(2) << "\n";
    } else {
      std::cout << "objective=" << fc.objective
                << " converged=" << (fc.converged ? "yes" : "no") << "\n";
    }
  });

  auto* round_cmd =
      cert_cmd->add_subcommand("round", "Round a float certificate and verify");
  round_cmd->add_option("file", cert_file, "Float certificate JSON")->required();
  round_cmd->add_option("--den", cert_den, "Denominator")->required();
  round_cmd->add_option("--out", cert_out, "Write rounded certificate here");
  add_format(round_cmd, opt);
  round_cmd->callback([&] {
    const Certificate cert =
        round_certificate(load_float_certificate(cert_file), cert_den);
    if (!cert_out.empty()) save_certificate(cert, cert_out);
    const VerificationReport report = verify(cert);
    print_verification(report, opt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
