#include "commonpair/json_io.hpp"

#include <fstream>
#include <sstream>

namespace commonpair {

namespace {

Rational rational_field(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) {
    throw DomainError(std::string(what) + ": expected a rational string");
  }
  return parse_rational(j.get<std::string>());
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("parse error in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edge_list()) {
    edges.push_back(Json::array({u + 1, v + 1}));
  }
  return Json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (j.is_string()) return parse_graph_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw DomainError("graph JSON needs {\"n\": int, \"edges\": [[u,v],...]}");
  }
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw DomainError("graph edges must be [u,v] pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return graph_from_edges(j.at("n").get<int>(), edges);
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.empty()) throw DomainError("empty graph spec");
  if (spec.front() == '{') {
    try {
      return graph_from_json(Json::parse(spec));
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("bad inline graph JSON: ") + e.what());
    }
  }
  if (spec.front() == '@') return graph_from_json(load_json_file(spec.substr(1)));
  return parse_graph_name(spec);
}

std::string graph_key(const Graph& g) {
  std::ostringstream out;
  out << "g" << g.n << ":0x" << std::hex << canonical_mask(g.n, g.edges);
  return out.str();
}

Json kernel_to_json(const StepKernel& u) {
  Json masses = Json::array();
  for (const Rational& m : u.masses) masses.push_back(format_rational(m));
  Json values = Json::array();
  for (const auto& row : u.values) {
    Json jrow = Json::array();
    for (const Rational& v : row) jrow.push_back(format_rational(v));
    values.push_back(jrow);
  }
  Json out{{"masses", masses}, {"values", values}};
  if (u.bounds) {
    out["bounds"] = Json::array({format_rational(u.bounds->first),
                                 format_rational(u.bounds->second)});
  }
  return out;
}

StepKernel kernel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("masses") || !j.contains("values")) {
    throw DomainError("kernel JSON needs \"masses\" and \"values\"");
  }
  std::vector<Rational> masses;
  for (const Json& m : j.at("masses")) masses.push_back(rational_field(m, "mass"));
  std::vector<std::vector<Rational>> values;
  for (const Json& row : j.at("values")) {
    std::vector<Rational> r;
    for (const Json& v : row) r.push_back(rational_field(v, "value"));
    values.push_back(std::move(r));
  }
  std::optional<std::pair<Rational, Rational>> bounds;
  if (j.contains("bounds")) {
    const Json& b = j.at("bounds");
    if (!b.is_array() || b.size() != 2) {
      throw DomainError("kernel bounds must be [lo, hi]");
    }
    bounds = std::pair{rational_field(b[0], "bound"),
                       rational_field(b[1], "bound")};
  }
  return make_step_kernel(std::move(masses), std::move(values), std::move(bounds));
}

StepKernel load_kernel(const std::string& path) {
  return kernel_from_json(load_json_file(path));
}

Json system_to_json(const ColourSystem& sys) {
  Json entries = Json::array();
  for (const ColourEntry& entry : sys.entries) {
    entries.push_back(Json{{"h", graph_to_json(entry.h)},
                           {"p", format_rational(entry.p)},
                           {"w", kernel_to_json(entry.w)}});
  }
  return Json{{"entries", entries}};
}

ColourSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) {
    throw DomainError("colour system JSON needs an \"entries\" array");
  }
  std::vector<ColourEntry> entries;
  for (const Json& e : j.at("entries")) {
    entries.push_back(ColourEntry{graph_from_json(e.at("h")),
                                  rational_field(e.at("p"), "p"),
                                  kernel_from_json(e.at("w"))});
  }
  return make_colour_system(std::move(entries));
}

ColourSystem load_system(const std::string& path) {
  return system_from_json(load_json_file(path));
}

Json witness_to_json(const WitnessReport& report) {
  Json out;
  out["kind"] = report.kind;
  out["scale"] = format_rational(report.scale);
  if (report.delta) out["delta"] = format_rational(*report.delta);
  if (report.tensor_k) out["k"] = *report.tensor_k;
  out["value"] = format_rational(report.value);
  out["verdict"] = report.negative ? "negative" : "non-negative";
  if (report.kind == "multicolour") out["lead_colour"] = report.lead_colour + 1;
  Json tallies;
  for (const auto& [name, count] : report.tallies) tallies[name] = count;
  out["tallies"] = tallies;
  if (!report.negative) {
    Json sweep = Json::array();
    for (const GridPoint& pt : report.sweep) {
      Json point{{"delta", format_rational(pt.delta)}};
      if (pt.tensor_k >= 0) point["k"] = pt.tensor_k;
      point["value"] = format_rational(pt.value);
      sweep.push_back(point);
    }
    out["sweep"] = sweep;
  }
  return out;
}

Json candidate_to_json(const CandidateP& candidate) {
  Json out;
  out["girth"] = candidate.girth;
  out["alpha_power"] = format_rational(candidate.alpha_power);
  out["p_float"] = candidate.p_float;
  if (candidate.p_exact) {
    out["p_exact"] = format_rational(*candidate.p_exact);
  } else {
    out["p_exact"] = nullptr;
  }
  return out;
}

Json verification_to_json(const VerificationReport& report) {
  Json out;
  out["certified"] = report.certified;
  if (!report.reason.empty()) out["reason"] = report.reason;
  Json psd = Json::array();
  for (const PsdResult& r : report.psd) psd.push_back(r.psd);
  out["psd"] = psd;
  out["min_slack"] = format_rational(report.min_slack);
  out["equality_count"] = report.equality_count;
  Json slacks;
  for (const auto& [mask, value] : report.slacks) {
    slacks[graph_key(Graph{5, mask})] = format_rational(value);
  }
  out["slacks"] = slacks;
  return out;
}

Json class_table_to_json(const GraphClassTable& table) {
  Json classes = Json::array();
  for (const auto& entry : table.classes) {
    classes.push_back(Json{{"key", graph_key(entry.rep)},
                           {"graph", graph_to_json(entry.rep)},
                           {"aut", entry.aut}});
  }
  return Json{{"n", table.n},
              {"count", static_cast<int>(table.classes.size())},
              {"classes", classes}};
}

Json gluing_table_to_json() {
  const GluingTable& table = gluing_table();
  const GraphClassTable& five = five_vertex_classes();
  Json entries = Json::array();
  for (int row = 1; row <= 4; ++row)
    for (int a = 1; a <= 8; ++a)
      for (int b = a; b <= 8; ++b) {
        const GluingTable::Cell& cell = table.cell(row, a, b);
        Json classes = Json::array();
        for (std::uint64_t mask : {cell.canon_p, cell.canon_q}) {
          const Graph& rep = five.classes[five.index.at(mask)].rep;
          classes.push_back(
              Json{{"key", graph_key(rep)},
                   {"graph", graph_to_json(rep)},
                   {"coeff", format_rational(
                                 table.coefficient(row, a, b, mask))}});
        }
        entries.push_back(
            Json{{"i", row}, {"a", a}, {"b", b}, {"classes", classes}});
      }
  return Json{{"entries", entries}};
}

Json certificate_to_json(const Certificate& cert) {
  Json matrices = Json::array();
  for (const RatMatrix& m : cert.matrices) {
    Json jm = Json::array();
    for (const auto& row : m) {
      Json jrow = Json::array();
      for (const Rational& v : row) jrow.push_back(format_rational(v));
      jm.push_back(jrow);
    }
    matrices.push_back(jm);
  }
  return Json{{"p1", format_rational(cert.p1)},
              {"h1", graph_to_json(cert.h1)},
              {"h2", graph_to_json(cert.h2)},
              {"matrices", matrices}};
}

Certificate certificate_from_json(const Json& j) {
  for (const char* field : {"p1", "h1", "h2", "matrices"}) {
    if (!j.contains(field)) {
      throw DomainError(std::string("certificate JSON missing \"") + field +
                        "\"");
    }
  }
  const Json& jm = j.at("matrices");
  if (!jm.is_array() || jm.size() != 4) {
    throw DomainError("certificate needs exactly 4 matrices");
  }
  std::array<RatMatrix, 4> matrices;
  for (int i = 0; i < 4; ++i) {
    for (const Json& row : jm[i]) {
      std::vector<Rational> r;
      for (const Json& v : row) r.push_back(rational_field(v, "matrix entry"));
      matrices[i].push_back(std::move(r));
    }
  }
  return make_certificate(rational_field(j.at("p1"), "p1"),
                          graph_from_json(j.at("h1")),
                          graph_from_json(j.at("h2")), std::move(matrices));
}

Json float_certificate_to_json(const FloatCertificate& fc) {
  Json matrices = Json::array();
  for (const auto& m : fc.matrices) {
    Json jm = Json::array();
    for (const auto& row : m) {
      Json jrow = Json::array();
      for (double v : row) jrow.push_back(v);
      jm.push_back(jrow);
    }
    matrices.push_back(jm);
  }
  return Json{{"p1", format_rational(fc.p1)},
              {"h1", graph_to_json(fc.h1)},
              {"h2", graph_to_json(fc.h2)},
              {"objective", fc.objective},
              {"iterations", fc.iterations},
              {"converged", fc.converged},
              {"matrices", matrices}};
}

FloatCertificate float_certificate_from_json(const Json& j) {
  FloatCertificate fc;
  fc.p1 = rational_field(j.at("p1"), "p1");
  fc.h1 = graph_from_json(j.at("h1"));
  fc.h2 = graph_from_json(j.at("h2"));
  fc.objective = j.value("objective", 0.0);
  fc.iterations = j.value("iterations", 0);
  fc.converged = j.value("converged", false);
  const Json& jm = j.at("matrices");
  if (!jm.is_array() || jm.size() != 4) {
    throw DomainError("float certificate needs exactly 4 matrices");
  }
  for (int i = 0; i < 4; ++i) {
    if (!jm[i].is_array() || jm[i].size() != 8) {
      throw DomainError("float certificate matrices must be 8x8");
    }
    for (int a = 0; a < 8; ++a) {
      if (jm[i][a].size() != 8) {
        throw DomainError("float certificate matrices must be 8x8");
      }
      for (int b = 0; b < 8; ++b) fc.matrices[i][a][b] = jm[i][a][b].get<double>();
    }
  }
  return fc;
}

Certificate load_certificate(const std::string& path) {
  return certificate_from_json(load_json_file(path));
}

void save_certificate(const Certificate& cert, const std::string& path) {
  save_json_file(certificate_to_json(cert), path);
}

FloatCertificate load_float_certificate(const std::string& path) {
  return float_certificate_from_json(load_json_file(path));
}

void save_float_certificate(const FloatCertificate& fc,
                            const std::string& path) {
  save_json_file(float_certificate_to_json(fc), path);
}

}  // namespace commonpair
