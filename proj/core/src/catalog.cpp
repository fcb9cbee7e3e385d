#include "bihom/catalog.hpp"

#include <sstream>

#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/structure.hpp"

namespace bihom {

namespace {

bool is_slot(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'c' && name[0] != 'd')) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return false;
  }
  return true;
}

Matrix evaluate_cells(const std::vector<std::string>& cells, std::size_t n,
                      const Environment& env, Field field) {
  if (cells.size() != n * n) throw dimension_error("pattern needs n^2 cells");
  std::vector<FieldElement> entries;
  entries.reserve(cells.size());
  for (const auto& cell : cells) entries.push_back(Expression::parse(cell).evaluate(env, field));
  return Matrix(n, n, std::move(entries));
}

std::string describe_span(const MatrixSubspace& s) {
  std::ostringstream out;
  out << "dim " << s.dim() << " span{";
  for (std::size_t i = 0; i < s.dim(); ++i) out << (i == 0 ? "" : ", ") << s.basis()[i].to_string();
  out << '}';
  return out.str();
}

}  // namespace

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id || e.label == id) return e;
  }
  throw precondition_error("unknown catalog entry '" + id + "'");
}

bool admissible(const CatalogEntry& entry, const ParamAssignment& params) {
  for (const auto& p : entry.params) {
    auto it = params.find(p.name);
    if (it == params.end()) return false;
    if (p.nonzero && it->second.is_zero()) return false;
  }
  return true;
}

BiHomLieAlgebra build(const std::string& id, const ParamAssignment& params) {
  const CatalogEntry& entry = catalog_entry(id);
  for (const auto& [name, value] : params) {
    bool known = false;
    for (const auto& p : entry.params) known = known || p.name == name;
    if (!known) throw precondition_error(entry.label + " has no parameter '" + name + "'");
  }
  if (!admissible(entry, params)) {
    throw precondition_error("inadmissible parameters " + format_assignment(params) + " for " +
                             entry.label);
  }
  const Field field = Field::rational();
  std::vector<BracketTerm> terms;
  for (const auto& b : entry.brackets) {
    terms.push_back({b.i - 1, b.j - 1, b.k - 1, Expression::parse(b.value).evaluate(params, field)});
  }
  return BiHomLieAlgebra(StructureTable(2, field, terms), evaluate_cells(entry.alpha, 2, params, field),
                         evaluate_cells(entry.beta, 2, params, field));
}

const std::vector<ExpectedRow>& expected_rows(const std::string& id) {
  return catalog_entry(id).rows;
}

const std::vector<std::string>& default_sample_values() {
  static const std::vector<std::string> values{"2", "3", "1/2"};
  return values;
}

std::vector<ParamAssignment> sample_assignments(const CatalogEntry& entry) {
  std::vector<ParamAssignment> out;
  if (entry.params.empty()) {
    out.emplace_back();
    return out;
  }
  for (const auto& v : default_sample_values()) {
    ParamAssignment a;
    for (const auto& p : entry.params) a.emplace(p.name, FieldElement::parse(v));
    if (admissible(entry, a)) out.push_back(std::move(a));
  }
  for (const auto& extra : entry.extra_samples) {
    ParamAssignment a;
    for (const auto& [name, value] : extra) a.emplace(name, FieldElement::parse(value));
    if (admissible(entry, a)) out.push_back(std::move(a));
  }
  return out;
}

std::string format_assignment(const ParamAssignment& params) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [name, value] : params) {
    out << (first ? "" : ", ") << name << '=' << value.to_string();
    first = false;
  }
  out << '}';
  return out.str();
}

std::uint64_t sample_set_hash() {
  std::ostringstream text;
  for (const auto& e : catalog()) {
    text << e.id << ':';
    for (const auto& a : sample_assignments(e)) text << format_assignment(a) << ';';
    text << '\n';
  }
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

MatrixSubspace instantiate(const MatrixPattern& pattern, std::size_t n, const Environment& env,
                           Field field) {
  std::set<std::string> slots;
  for (const auto& cell : pattern.cells) {
    for (const auto& id : Expression::parse(cell).identifiers()) {
      if (is_slot(id)) slots.insert(id);
    }
  }
  std::vector<Matrix> generators;
  for (const auto& active : slots) {
    Environment local = env;
    for (const auto& s : slots) local.insert_or_assign(s, FieldElement::integer(s == active ? 1 : 0));
    generators.push_back(evaluate_cells(pattern.cells, n, local, field));
  }
  return MatrixSubspace::span(n, field, generators);
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::match:
      return "match";
    case VerdictStatus::mismatch:
      return "mismatch";
    case VerdictStatus::uncovered:
      return "uncovered";
  }
  return "unknown";
}

EntryVerdict verify_entry(const std::string& id, const ParamAssignment& params, unsigned k,
                          unsigned l) {
  const CatalogEntry& entry = catalog_entry(id);
  const BiHomLieAlgebra L = build(id, params);
  EntryVerdict v;
  v.id = entry.id;
  v.params = params;
  v.k = k;
  v.l = l;
  v.centroid = centroid(L, k, l).space;
  v.derivations = derivations(L, k, l).space;
  if (k == 0 && l == 0) {
    v.small = is_small_centroid(L);
    v.cn = is_characteristically_nilpotent(L);
  }

  Environment env = params;
  env.insert_or_assign("k", FieldElement::integer(k));
  env.insert_or_assign("l", FieldElement::integer(l));
  for (std::size_t r = 0; r < entry.rows.size(); ++r) {
    if (Expression::parse(entry.rows[r].guard).holds(env, Field::rational())) v.rows.push_back(r);
  }
  if (v.rows.empty()) {
    v.status = VerdictStatus::uncovered;
    v.diffs.push_back("no table row applies");
    return v;
  }
  for (std::size_t r : v.rows) {
    const ExpectedRow& row = entry.rows[r];
    const std::string where = "row " + std::to_string(r + 1) + " [" + row.guard + "] ";
    const MatrixSubspace want_c = instantiate(row.centroid, 2, env);
    const MatrixSubspace want_d = instantiate(row.derivations, 2, env);
    if (!want_c.same_span(v.centroid)) {
      v.diffs.push_back(where + "centroid: expected " + describe_span(want_c) + ", computed " +
                        describe_span(v.centroid));
    }
    if (!want_d.same_span(v.derivations)) {
      v.diffs.push_back(where + "derivations: expected " + describe_span(want_d) +
                        ", computed " + describe_span(v.derivations));
    }
    if (row.small && v.small && *row.small != *v.small) {
      v.diffs.push_back(where + "small: expected " + (*row.small ? "yes" : "no") +
                        ", computed " + (*v.small ? "yes" : "no"));
    }
    if (row.cn && v.cn && *row.cn != *v.cn) {
      v.diffs.push_back(where + "CN: expected " + (*row.cn ? "yes" : "no") + ", computed " +
                        (*v.cn ? "yes" : "no"));
    }
  }
  v.status = v.diffs.empty() ? VerdictStatus::match : VerdictStatus::mismatch;
  return v;
}

}  // namespace bihom
