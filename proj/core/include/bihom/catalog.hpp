#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/expression.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

using ParamAssignment = Environment;

struct ParamSpec {
  std::string name;
  bool nonzero = true;
};

/// One structure constant of a family, one-based, value given as an
/// expression in the family parameters.
struct BracketTemplate {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  std::string value;
};

/// Row-major n x n cells; identifiers c1, c2, ..., d1, d2, ... are free
/// slots, every other identifier is a family parameter, k or l.
struct MatrixPattern {
  std::vector<std::string> cells;
};

struct ExpectedRow {
  /// Boolean expression in the family parameters, k and l.
  std::string guard;
  MatrixPattern centroid;
  MatrixPattern derivations;
  std::optional<bool> small;
  std::optional<bool> cn;
};

struct CatalogEntry {
  std::string id;     // e.g. "L1_13"
  std::string label;  // e.g. "L_1^13"
  std::vector<ParamSpec> params;
  std::vector<BracketTemplate> brackets;
  std::vector<std::string> alpha;  // row-major
  std::vector<std::string> beta;
  /// Extra parameter values (as text) that trigger specific table guards.
  std::vector<std::vector<std::pair<std::string, std::string>>> extra_samples;
  std::vector<ExpectedRow> rows;
  /// Coordinates of a vector spanning a proper ideal.
  std::vector<long> known_ideal;
  /// Listed among the decomposable algebras.
  bool decomposable = false;
  /// Guard on the parameters for membership in the list of algebras with a
  /// small centroid ("0" when never listed).
  std::string small_listed;
};

const std::vector<CatalogEntry>& catalog();
/// Throws precondition_error for an unknown id.
const CatalogEntry& catalog_entry(const std::string& id);

/// Throws precondition_error for missing, unknown or inadmissible values.
BiHomLieAlgebra build(const std::string& id, const ParamAssignment& params);
const std::vector<ExpectedRow>& expected_rows(const std::string& id);
bool admissible(const CatalogEntry& entry, const ParamAssignment& params);

/// Values tried for every free symbol.
const std::vector<std::string>& default_sample_values();
/// Default assignments (each symbol set to one default value in turn) then
/// the entry's guard-targeted extras.
std::vector<ParamAssignment> sample_assignments(const CatalogEntry& entry);
/// FNV-1a over the canonical text of every sample assignment of the catalog.
std::uint64_t sample_set_hash();
std::string format_assignment(const ParamAssignment& params);

/// Span of the matrices obtained by setting one slot to 1 and the others
/// to 0, with parameters taken from `env`.
MatrixSubspace instantiate(const MatrixPattern& pattern, std::size_t n, const Environment& env,
                           Field field = Field::rational());

enum class VerdictStatus { match, mismatch, uncovered };
std::string to_string(VerdictStatus status);

struct EntryVerdict {
  std::string id;
  ParamAssignment params;
  unsigned k = 0;
  unsigned l = 0;
  VerdictStatus status = VerdictStatus::match;
  /// Indices into expected_rows(id) whose guard holds.
  std::vector<std::size_t> rows;
  std::vector<std::string> diffs;
  MatrixSubspace centroid;
  MatrixSubspace derivations;
  /// Flags are evaluated at (k, l) = (0, 0) only.
  std::optional<bool> small;
  std::optional<bool> cn;

  EntryVerdict() : centroid(0, Field::rational()), derivations(0, Field::rational()) {}
};

EntryVerdict verify_entry(const std::string& id, const ParamAssignment& params, unsigned k,
                          unsigned l);

}  // namespace bihom
