#include "matos/json_io.hpp"

#include <fstream>

namespace matos {

using nlohmann::json;

namespace {

json subsets_to_json(const std::vector<Subset>& sets) {
  json arr = json::array();
  for (Subset s : sets) arr.push_back(elements_of(s));
  return arr;
}

std::vector<Subset> subsets_from_json(const json& arr, int n) {
  std::vector<Subset> out;
  for (const auto& item : arr) {
    std::vector<int> elems = item.get<std::vector<int>>();
    out.push_back(subset_from(elems, n));
  }
  return out;
}

}  // namespace

json matroid_to_json(const Matroid& m) {
  json j;
  j["name"] = m.name();
  j["n"] = m.n();
  json backing;
  switch (m.backing()) {
    case BackingKind::kVectors:
      backing["vectors"] = rat_matrix_to_json(*m.vector_backing());
      break;
    case BackingKind::kBases:
      backing["bases"] = subsets_to_json(m.stored_bases());
      break;
    case BackingKind::kCircuits:
      backing["circuits"] = subsets_to_json(m.circuits());
      break;
  }
  j["backing"] = std::move(backing);
  return j;
}

Matroid matroid_from_json(const json& j) {
  if (!j.contains("n")) throw std::invalid_argument("matroid JSON lacks \"n\"");
  const int n = j.at("n").get<int>();
  std::string name = j.value("name", "");
  const json& backing = j.at("backing");
  if (backing.contains("circuits"))
    return Matroid::from_circuits(n, subsets_from_json(backing.at("circuits"), n), std::move(name));
  if (backing.contains("bases"))
    return Matroid::from_bases(n, subsets_from_json(backing.at("bases"), n), std::move(name));
  if (backing.contains("vectors")) {
    RatMatrix cols = rat_matrix_from_json(backing.at("vectors"));
    if (cols.cols() != n) throw std::invalid_argument("vector backing has wrong number of columns");
    return matroid_from_vectors(cols, std::move(name));
  }
  throw std::invalid_argument("matroid JSON lacks a known backing");
}

json coloration_to_json(const Coloration& pi) {
  json j;
  j["classes"] = subsets_to_json(pi.classes());
  return j;
}

Coloration coloration_from_json(const json& j, int n) {
  return Coloration::from_classes(n, subsets_from_json(j.at("classes"), n));
}

json rat_matrix_to_json(const RatMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

RatMatrix rat_matrix_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) throw std::invalid_argument("matrix row count mismatch");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = entries.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_rat(row.at(static_cast<std::size_t>(c)).get<std::string>());
  }
  return m;
}

json quad_matrix_to_json(const QuadMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["d"] = m.field_d();
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      const Quad& q = m.at(r, c);
      row.push_back(json{{"a", rat_to_string(q.a)}, {"b", rat_to_string(q.b)}, {"d", q.d}});
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matroid read_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return matroid_from_json(j);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace matos
