#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latsize/certificate.hpp"
#include "latsize/polytope.hpp"

namespace latsize {

// Wire format for inputs:
//   {"dim": 2, "points": [[0,0],[4,1],[5,2]], "name": "example-1"}
// Points need not be hull vertices.
struct PolytopeDocument {
  int dim = 0;
  std::vector<std::vector<std::int64_t>> points;
  std::string name;

  Polytope to_polytope() const {
    std::vector<Vec> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.emplace_back(p);
    return Polytope(dim, std::move(pts));
  }
};

struct ResultDocument {
  std::string name;
  std::string target;     // "sigma" | "cube" | "width"
  std::int64_t value = 0;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<std::int64_t> translation;
  std::string algorithm;  // "fast" | "ul" | "brute"
  bool verified = false;
  double elapsed_ms = 0.0;
};

inline PolytopeDocument parse_polytope_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("polytope document: expected a JSON object");
  PolytopeDocument doc;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("polytope document: missing integer field \"dim\"");
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1 || doc.dim > kMaxDim)
    throw ParseError("polytope document: dim must be 1.." + std::to_string(kMaxDim));
  if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
    throw ParseError("polytope document: missing nonempty array field \"points\"");
  for (const auto& pj : j["points"]) {
    if (!pj.is_array() || pj.size() != static_cast<std::size_t>(doc.dim))
      throw ParseError("polytope document: every point must be an array of length dim");
    std::vector<std::int64_t> p;
    for (const auto& cj : pj) {
      if (!cj.is_number_integer())
        throw ParseError("polytope document: coordinates must be integers");
      p.push_back(cj.get<std::int64_t>());
    }
    doc.points.push_back(std::move(p));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("polytope document: \"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

inline PolytopeDocument parse_polytope_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_polytope_document(j);
}

inline nlohmann::json to_json(const PolytopeDocument& doc) {
  nlohmann::json j{{"dim", doc.dim}, {"points", doc.points}};
  if (!doc.name.empty()) j["name"] = doc.name;
  return j;
}

inline nlohmann::json to_json(const ResultDocument& r) {
  return nlohmann::json{{"name", r.name},           {"target", r.target},
                        {"value", r.value},         {"matrix", r.matrix},
                        {"translation", r.translation}, {"algorithm", r.algorithm},
                        {"verified", r.verified},   {"elapsed_ms", r.elapsed_ms}};
}

inline std::vector<std::vector<std::int64_t>> matrix_rows(const Mat& m) {
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < m.dim(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::int64_t> vector_entries(const Vec& v) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < v.dim(); ++i) out.push_back(v[i]);
  return out;
}

inline Mat parse_matrix(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || j.size() > kMaxDim)
    throw ParseError("matrix: expected an array of 1.." + std::to_string(kMaxDim) + " rows");
  int n = static_cast<int>(j.size());
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    const auto& rj = j[static_cast<std::size_t>(i)];
    if (!rj.is_array() || rj.size() != static_cast<std::size_t>(n))
      throw ParseError("matrix: must be square");
    for (int c = 0; c < n; ++c) {
      const auto& cj = rj[static_cast<std::size_t>(c)];
      if (!cj.is_number_integer()) throw ParseError("matrix: entries must be integers");
      m(i, c) = cj.get<std::int64_t>();
    }
  }
  return m;
}

inline Vec parse_vector(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || j.size() > kMaxDim)
    throw ParseError("vector: expected an array of 1.." + std::to_string(kMaxDim) + " entries");
  std::vector<std::int64_t> entries;
  for (const auto& cj : j) {
    if (!cj.is_number_integer()) throw ParseError("vector: entries must be integers");
    entries.push_back(cj.get<std::int64_t>());
  }
  return Vec(entries);
}

inline ResultDocument make_result(const std::string& name, const Polytope& p,
                                  const SizeCertificate& cert, double elapsed_ms) {
  ResultDocument r;
  r.name = name;
  r.target = to_string(cert.target);
  r.value = cert.value;
  r.matrix = matrix_rows(cert.map.matrix());
  r.translation = vector_entries(cert.map.translation());
  r.algorithm = to_string(cert.algorithm);
  r.verified = verify(p, cert);
  r.elapsed_ms = elapsed_ms;
  return r;
}

}  // namespace latsize
