#include "algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "bihom/errors.hpp"

namespace bihom::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw parse_error(where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

void check_version(const json& doc) {
  const json& v = member(doc, "format_version", "document");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    fail("format_version", "unsupported version " + v.dump());
  }
}

Field parse_field(const json& doc) {
  const json& f = member(doc, "field", "document");
  if (f.is_string() && f.get<std::string>() == "rational") return Field::rational();
  if (f.is_object() && f.size() == 1 && f.contains("fp") && f["fp"].is_number_unsigned()) {
    try {
      return Field::prime(f["fp"].get<std::uint64_t>());
    } catch (const error& e) {
      fail("field", e.what());
    }
  }
  fail("field", "expected \"rational\" or {\"fp\": prime}");
}

std::size_t parse_dim(const json& doc) {
  const json& d = member(doc, "dim", "document");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) fail("dim", "expected a positive integer");
  return d.get<std::size_t>();
}

FieldElement parse_value(const json& v, Field field, const std::string& where) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    fail(where, "expected a value string such as \"3/2\"");
  }
  try {
    return FieldElement::parse(text, field);
  } catch (const error& e) {
    fail(where, e.what());
  }
}

Matrix parse_square(const json& doc, const char* key, std::size_t n, Field field) {
  const json& arr = member(doc, key, "document");
  if (!arr.is_array() || arr.size() != n * n) {
    fail(key, "expected " + std::to_string(n * n) + " row-major values");
  }
  std::vector<FieldElement> entries;
  for (std::size_t idx = 0; idx < arr.size(); ++idx) {
    entries.push_back(parse_value(arr[idx], field, std::string(key) + "[" + std::to_string(idx) + "]"));
  }
  if (entries.empty()) return Matrix(n, n, field);
  return Matrix(n, n, std::move(entries));
}

std::size_t parse_index(const json& rec, const char* key, std::size_t n, const std::string& where) {
  const json& v = member(rec, key, where);
  if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > n) {
    fail(where + "." + key, "index must lie in [1, " + std::to_string(n) + "]");
  }
  return v.get<std::size_t>() - 1;
}

ordered_json field_json(Field field) {
  if (field.is_rational()) return "rational";
  ordered_json f;
  f["fp"] = field.characteristic();
  return f;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : m.entries()) arr.push_back(e.to_string());
  return arr;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  check_version(doc);
  const Field field = parse_field(doc);
  const std::size_t n = parse_dim(doc);

  const json& brackets = member(doc, "brackets", "document");
  if (!brackets.is_array()) fail("brackets", "expected an array");
  std::vector<BracketTerm> terms;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < brackets.size(); ++r) {
    const std::string where = "brackets[" + std::to_string(r) + "]";
    const json& rec = brackets[r];
    const std::size_t i = parse_index(rec, "i", n, where);
    const std::size_t j = parse_index(rec, "j", n, where);
    const std::size_t k = parse_index(rec, "k", n, where);
    if (!seen.emplace(i, j, k).second) fail(where, "duplicate structure constant");
    terms.push_back({i, j, k, parse_value(member(rec, "value", where), field, where + ".value")});
  }
  Matrix alpha = parse_square(doc, "alpha", n, field);
  Matrix beta = parse_square(doc, "beta", n, field);

  AlgebraFile file{BiHomLieAlgebra(StructureTable(n, field, terms), std::move(alpha), std::move(beta)),
                   std::nullopt, std::nullopt};
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail("metadata", "expected an object");
    for (const char* key : {"name", "source"}) {
      if (auto m = it->find(key); m != it->end()) {
        if (!m->is_string()) fail(std::string("metadata.") + key, "expected a string");
        (std::string(key) == "name" ? file.name : file.source) = m->get<std::string>();
      }
    }
  }
  return file;
}

std::string serialize_algebra_file(const AlgebraFile& file) {
  const BiHomLieAlgebra& L = file.algebra;
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["field"] = field_json(L.field());
  doc["dim"] = L.dim();
  ordered_json brackets = ordered_json::array();
  for (const auto& t : L.structure().terms()) {
    ordered_json rec;
    rec["i"] = t.i + 1;
    rec["j"] = t.j + 1;
    rec["k"] = t.k + 1;
    rec["value"] = t.value.to_string();
    brackets.push_back(std::move(rec));
  }
  doc["brackets"] = std::move(brackets);
  doc["alpha"] = matrix_json(L.alpha());
  doc["beta"] = matrix_json(L.beta());
  if (file.name || file.source) {
    ordered_json meta;
    if (file.name) meta["name"] = *file.name;
    if (file.source) meta["source"] = *file.source;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

Matrix parse_matrix_file(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("document", "expected an object");
  check_version(doc);
  const Field field = parse_field(doc);
  const std::size_t n = parse_dim(doc);
  return parse_square(doc, "matrix", n, field);
}

std::string serialize_matrix_file(const Matrix& m) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["field"] = field_json(m.field());
  doc["dim"] = m.rows();
  doc["matrix"] = matrix_json(m);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bihom::cli
