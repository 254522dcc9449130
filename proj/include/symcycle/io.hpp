#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symcycle/cycle.hpp"
#include "symcycle/decomposition.hpp"
#include "symcycle/errors.hpp"
#include "symcycle/matrix.hpp"
#include "symcycle/oracle.hpp"
#include "symcycle/sign_vector.hpp"

namespace symcycle {

/**
 * Parses the plain-text cycle format: one sign-vector string per line,
 * t or 2t lines; '#' starts a comment, blank lines are ignored.
 */
inline std::vector<Tope> parse_cycle_text(std::string_view contents) {
  std::vector<Tope> vertices;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    const std::size_t eol = std::min(contents.find('\n', pos), contents.size());
    std::string_view line = contents.substr(pos, eol - pos);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (!line.empty()) vertices.push_back(Tope::parse(line));
    if (eol == contents.size()) break;
    pos = eol + 1;
  }
  if (vertices.empty()) throw ParseError("cycle file contains no vertices");
  return vertices;
}

inline nlohmann::json cycle_to_json(const SymmetricCycle& cycle) {
  nlohmann::json j;
  j["t"] = cycle.t();
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const Tope& v : cycle.vertices()) verts.push_back(to_string(v));
  return j;
}

inline SymmetricCycle cycle_from_json(const nlohmann::json& j) {
  if (!j.contains("t") || !j.contains("vertices"))
    throw ParseError("cycle JSON needs fields \"t\" and \"vertices\"");
  const int t = j.at("t").get<int>();
  std::vector<Tope> vertices;
  for (const auto& item : j.at("vertices")) vertices.push_back(Tope::parse(item.get<std::string>()));
  if (!vertices.empty() && vertices[0].t() != t)
    throw ParseError("cycle JSON: \"t\" disagrees with vertex length");
  return SymmetricCycle::from_vertices(std::move(vertices));
}

/** Loads a cycle from a file, sniffing JSON ('{' first) vs plain text. */
inline SymmetricCycle load_cycle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cycle file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string contents = buf.str();
  const std::size_t first = contents.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && contents[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(contents, nullptr, false);
    if (j.is_discarded()) throw ParseError("cycle file '" + path + "' is not valid JSON");
    return cycle_from_json(j);
  }
  return SymmetricCycle::from_vertices(parse_cycle_text(contents));
}

/// Renders a decomposition in caret notation, e.g. "S^1 + S^2 + 5S^4".
/// Unit coefficients are omitted; the empty decomposition renders as "0".
inline std::string render_decomposition(const Decomposition& dec) {
  if (dec.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < dec.terms.size(); ++i) {
    if (i) out += " + ";
    if (dec.terms[i].coeff != 1) out += std::to_string(dec.terms[i].coeff);
    out += "S^" + std::to_string(dec.terms[i].index);
  }
  return out;
}

/// Renders a vertex decomposition, e.g. "D^0 + D^2 + D^4 + D^7 + D^9".
inline std::string render_vertex_decomposition(const VertexDecomposition& dec) {
  if (dec.indices.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < dec.indices.size(); ++i) {
    if (i) out += " + ";
    out += "D^" + std::to_string(dec.indices[i]);
  }
  return out;
}

/** Inverse of render_decomposition; accepts "5S^4", "S^2" and "0". */
inline Decomposition parse_decomposition(std::string_view text) {
  Decomposition dec;
  if (text == "0") return dec;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = text.find(" + ", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    const std::size_t s = term.find("S^");
    if (s == std::string_view::npos) throw ParseError("decomposition term lacks 'S^'");
    std::int64_t coeff = 1;
    if (s > 0) {
      coeff = 0;
      for (char c : term.substr(0, s)) {
        if (c < '0' || c > '9') throw ParseError("bad coefficient in decomposition term");
        coeff = coeff * 10 + (c - '0');
      }
    }
    int index = 0;
    std::string_view idx = term.substr(s + 2);
    if (idx.empty()) throw ParseError("decomposition term lacks an index");
    for (char c : idx) {
      if (c < '0' || c > '9') throw ParseError("bad index in decomposition term");
      index = index * 10 + (c - '0');
    }
    dec.terms.push_back({index, coeff});
    pos = (end == text.size()) ? end : end + 3;
  }
  return dec;
}

inline nlohmann::json decomposition_to_json(const SignVector& target, const Decomposition& dec,
                                            const SymmetricCycle& cycle) {
  nlohmann::json j;
  j["target"] = to_string(target);
  auto& terms = j["terms"] = nlohmann::json::array();
  for (const auto& term : dec.terms)
    terms.push_back({{"index", term.index}, {"coeff", term.coeff}});
  j["cycle"] = cycle_to_json(cycle);
  return j;
}

struct DecompositionDocument {
  SignVector target;
  Decomposition decomposition;
  SymmetricCycle cycle;
};

inline DecompositionDocument decomposition_from_json(const nlohmann::json& j) {
  if (!j.contains("target") || !j.contains("terms") || !j.contains("cycle"))
    throw ParseError("decomposition JSON needs \"target\", \"terms\" and \"cycle\"");
  Decomposition dec;
  for (const auto& term : j.at("terms"))
    dec.terms.push_back({term.at("index").get<int>(), term.at("coeff").get<std::int64_t>()});
  return DecompositionDocument{SignVector::parse(j.at("target").get<std::string>()),
                               std::move(dec), cycle_from_json(j.at("cycle"))};
}

/// Aligned plain-text matrix rendering, one row per line.
inline std::string render_matrix(const IntMatrix& m) {
  int width = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      width = std::max(width, static_cast<int>(std::to_string(m.at(i, j)).size()));
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const std::string cell = std::to_string(m.at(i, j));
      out += std::string(static_cast<std::size_t>(width - static_cast<int>(cell.size()) + (j ? 1 : 0)), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["t"] = report.t;
  j["cycle"] = report.cycle_descriptor;
  j["cycle_vertices"] = report.cycle_vertices;
  j["elapsed_ms"] = report.elapsed_ms;
  auto& checked = j["checked"] = nlohmann::json::object();
  for (const auto& [scope, count] : report.checked) checked[scope] = count;
  j["notices"] = report.notices;
  auto& failures = j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"scope", f.scope},
                        {"target", f.target},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  j["pass"] = report.pass();
  return j;
}

inline std::string render_report(const VerificationReport& report) {
  std::string out = "verify t=" + std::to_string(report.t) + " cycle=" + report.cycle_descriptor + "\n";
  for (const auto& [scope, count] : report.checked)
    out += "  " + scope + ": " + std::to_string(count) + " checked\n";
  for (const auto& notice : report.notices) out += "  note: " + notice + "\n";
  for (const auto& f : report.failures)
    out += "  FAIL [" + f.scope + "] " + f.target + ": expected " + f.expected + ", got " +
           f.actual + "\n";
  out += std::string("result: ") + (report.pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(report.elapsed_ms) + " ms)\n";
  return out;
}

}  // namespace symcycle
