#include "schemoid/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "schemoid/error.hpp"

namespace schemoid::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError("bad value for " + what + ": " + j.dump());
  }
}

std::uint32_t as_index(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xffffffffLL)
    throw ParseError("bad index for " + what + ": " + j.dump());
  return static_cast<std::uint32_t>(j.get<long long>());
}

std::vector<std::uint32_t> index_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a list");
  std::vector<std::uint32_t> out;
  for (const auto& x : j) out.push_back(as_index(x, what));
  return out;
}

// 1-based element list to a bit mask.
Subset subset_from_json(const json& j, std::size_t ground, const std::string& what) {
  Subset s = 0;
  for (std::uint32_t v : index_list(j, what)) {
    if (v < 1 || v > ground || v > 64) throw ParseError(what + " names element " + std::to_string(v) + " out of range");
    s |= Subset{1} << (v - 1);
  }
  return s;
}

std::vector<std::string> labels_from_json(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return {};
  return as<std::vector<std::string>>(*it, key);
}

}  // namespace

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

json scalar_to_json(const Scalar& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      Scalar s(j.get<std::string>());
      s.canonicalize();
      return s;
    } catch (const std::exception&) {
    }
  }
  throw ParseError("bad scalar " + j.dump() + " (expected an integer or \"p/q\")");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& v : m.row(r)) row.push_back(scalar_to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& k, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  if (j.size() != rows) {
    throw ParseError("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("matrix row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = k.normalize(scalar_from_json(j[r][c]));
  }
  return m;
}

json category_to_json(const FinCat& c) {
  const CategoryData d = c.data();
  json j;
  j["objects"] = d.objects;
  json mors = json::array();
  for (const Arrow& a : d.morphisms) mors.push_back({{"src", a.src}, {"tgt", a.tgt}});
  j["morphisms"] = std::move(mors);
  j["identity"] = d.identity;
  json comp = json::array();
  for (const auto& t : d.compose) comp.push_back({t[0], t[1], t[2]});
  j["compose"] = std::move(comp);
  return j;
}

CategoryData category_data_from_json(const json& j) {
  CategoryData d;
  d.objects = as_index(member(j, "objects"), "objects");
  for (const auto& m : member(j, "morphisms")) {
    d.morphisms.push_back({as_index(member(m, "src"), "src"), as_index(member(m, "tgt"), "tgt")});
  }
  d.identity = index_list(member(j, "identity"), "identity");
  for (const auto& t : member(j, "compose")) {
    auto v = index_list(t, "compose entry");
    if (v.size() != 3) throw ParseError("compose entries are [g, f, g∘f] triples");
    d.compose.push_back({v[0], v[1], v[2]});
  }
  return d;
}

FinCat category_from_json(const json& j) { return FinCat::from_data(category_data_from_json(j)); }

json schemoid_to_json(const Schemoid& s) {
  json j = category_to_json(s.cat());
  j["format"] = 1;
  j["blocks"] = s.blocks();
  if (!s.block_labels().empty()) j["block_labels"] = s.block_labels();
  if (!s.object_labels().empty()) j["object_labels"] = s.object_labels();
  return j;
}

Schemoid schemoid_from_json(const json& j) {
  if (j.contains("format") && j["format"] != 1) throw ParseError("unsupported format " + j["format"].dump());
  FinCat c = category_from_json(j);
  std::vector<std::vector<MorId>> blocks;
  for (const auto& b : member(j, "blocks")) blocks.push_back(index_list(b, "block"));
  Schemoid s = Schemoid::make(std::move(c), std::move(blocks));
  if (auto l = labels_from_json(j, "block_labels"); !l.empty()) s.set_block_labels(std::move(l));
  if (auto l = labels_from_json(j, "object_labels"); !l.empty()) s.set_object_labels(std::move(l));
  return s;
}

SimplicialComplex complex_from_json(const json& j) {
  const std::size_t n = as_index(member(j, "vertices"), "vertices");
  std::vector<Subset> gens;
  for (const auto& f : member(j, "faces")) {
    const Subset s = subset_from_json(f, n, "face");
    if (s) gens.push_back(s);
  }
  return closure(n, gens);
}

FiniteSpace space_from_json(const json& j) {
  FiniteSpace x;
  x.points = as_index(member(j, "points"), "points");
  for (const auto& u : member(j, "opens")) x.opens.push_back(subset_from_json(u, x.points, "open set"));
  return x;
}

AssociationScheme scheme_from_json(const json& j) {
  AssociationScheme a;
  a.points = as_index(member(j, "points"), "points");
  for (const auto& row : member(j, "relation")) a.relation.push_back(index_list(row, "relation row"));
  a.labels = labels_from_json(j, "labels");
  return a;
}

GroupTable group_by_name(const std::string& name) {
  for (auto& [n, g] : small_groups())
    if (n == name) return g;
  if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S')) {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 3) {
      const std::size_t n = std::stoul(digits);
      if (name[0] == 'Z' && n >= 1) return cyclic_group(n);
      if (name[0] == 'D' && n >= 1) return dihedral_group(n);
      if (name[0] == 'S' && n >= 1 && n <= 5) return symmetric_group(n);
    }
  }
  throw ParseError("unknown group '" + name + "'");
}

GroupTable group_from_json(const json& j) {
  if (j.is_string()) return group_by_name(j.get<std::string>());
  GroupTable g;
  for (const auto& row : member(j, "table")) g.mul.push_back(index_list(row, "group table row"));
  return g;
}

json functor_to_json(const Functor& f) { return {{"obj", f.obj}, {"mor", f.mor}}; }

Functor functor_from_json(const json& j) {
  return Functor{index_list(member(j, "obj"), "obj"), index_list(member(j, "mor"), "mor")};
}

json rep_to_json(const FunctorRep& r) {
  json j;
  j["format"] = 1;
  j["field"] = r.field.name();
  j["dims"] = r.dims;
  json mats = json::object();
  for (BlockId b = 0; b < r.schemoid->num_blocks(); ++b) mats[std::to_string(b)] = matrix_to_json(r.block_mat(b));
  j["block_mats"] = std::move(mats);
  return j;
}

FunctorRep rep_from_json(const json& j, SchemoidPtr s, const Field& fallback) {
  const Field k = j.contains("field") ? Field::parse(as<std::string>(j["field"], "field")) : fallback;
  auto dims_u = index_list(member(j, "dims"), "dims");
  std::vector<std::size_t> dims(dims_u.begin(), dims_u.end());
  if (dims.size() != s->cat().num_objects())
    throw ParseError("rep has " + std::to_string(dims.size()) + " dimensions for " +
                     std::to_string(s->cat().num_objects()) + " objects");
  std::map<BlockId, Matrix> mats;
  const json& bm = j.contains("block_mats") ? j["block_mats"] : json::object();
  if (!bm.is_object()) throw ParseError("block_mats must be an object");
  for (const auto& [key, rows] : bm.items()) {
    std::optional<BlockId> b;
    for (BlockId i = 0; i < s->num_blocks() && !b; ++i)
      if (s->block_name(i) == key) b = i;
    if (!b) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 9)
        throw ParseError("unknown block '" + key + "'");
      b = static_cast<BlockId>(std::stoul(key));
      if (*b >= s->num_blocks()) throw ParseError("unknown block '" + key + "'");
    }
    const MorId f = s->block(*b).front();
    mats.emplace(*b, matrix_from_json(rows, k, dims[s->cat().tgt(f)], dims[s->cat().src(f)]));
  }
  return FunctorRep::from_blocks(s, k, std::move(dims), mats);
}

json algebra_to_json(const FDAlgebra& a) {
  json j;
  j["format"] = 1;
  j["field"] = a.field().name();
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  json prods = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a.product(i, k).empty()) continue;
      json terms = json::array();
      for (const auto& t : a.product(i, k)) terms.push_back({a.labels()[t.index], scalar_to_json(t.coeff)});
      prods.push_back({{"left", a.labels()[i]}, {"right", a.labels()[k]}, {"terms", std::move(terms)}});
    }
  j["products"] = std::move(prods);
  json unit = json::array();
  for (const auto& v : a.unit()) unit.push_back(scalar_to_json(v));
  j["unit"] = std::move(unit);
  return j;
}

}  // namespace schemoid::io
