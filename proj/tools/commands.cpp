#include "commands.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

#include "algebra_file.hpp"
#include "bihom/catalog.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/isomorphism.hpp"
#include "bihom/structure.hpp"

namespace bihom::cli {

namespace {

// Each fact is written either as a human line or as a tab-separated record
// "kind<TAB>key=value...<TAB>value=...", depending on --output.
class Reporter {
 public:
  Reporter(std::ostream& out, bool records) : out_(out), records_(records) {}

  void human(const std::string& line) {
    if (!records_) out_ << line << '\n';
  }
  void record(const std::string& kind, const std::vector<std::pair<std::string, std::string>>& keys,
              const std::string& value) {
    if (!records_) return;
    out_ << kind;
    for (const auto& [k, v] : keys) out_ << '\t' << k << '=' << v;
    out_ << "\tvalue=" << value << '\n';
  }
  void fact(const std::string& kind, const std::string& label, const std::string& value) {
    human(label + ": " + value);
    record(kind, {}, value);
  }

 private:
  std::ostream& out_;
  bool records_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string vector_text(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& e : v) parts.push_back(e.to_string());
  return "(" + join(parts, ", ") + ")";
}

BiHomLieAlgebra load(const std::string& path) { return parse_algebra_file(read_text_file(path)).algebra; }

void report_basis(Reporter& rep, const std::string& kind, const MatrixSubspace& space) {
  rep.fact(kind + "-dim", "dimension", std::to_string(space.dim()));
  for (std::size_t i = 0; i < space.basis().size(); ++i) {
    rep.human("basis[" + std::to_string(i + 1) + "]: " + space.basis()[i].to_string());
    rep.record(kind + "-basis", {{"index", std::to_string(i + 1)}}, space.basis()[i].to_string());
  }
}

void report_subspace(Reporter& rep, const std::string& kind, const std::string& label,
                     const Subspace& s) {
  std::vector<std::string> vecs;
  for (const auto& v : s.basis()) vecs.push_back(vector_text(v));
  rep.human(label + ": dim " + std::to_string(s.dim()) +
            (vecs.empty() ? "" : ", basis " + join(vecs, " ")));
  rep.record(kind, {{"dim", std::to_string(s.dim())}}, vecs.empty() ? "0" : join(vecs, ";"));
}

int cmd_check(const std::string& path, Reporter& rep) {
  const BiHomLieAlgebra L = load(path);
  const AxiomReport r = check_all(L);
  const auto row = [&](const char* name, bool passed) {
    rep.human(std::string(name) + ": " + (passed ? "pass" : "fail"));
    rep.record("axiom", {{"name", name}}, passed ? "pass" : "fail");
  };
  row("commuting", r.commuting);
  row("skew", r.skew_symmetric);
  row("bihom-jacobi", r.bihom_jacobi);
  row("multiplicative", r.multiplicative);
  if (r.first_violation) {
    const Violation& v = *r.first_violation;
    rep.human("first violation: " + v.describe());
    std::vector<std::pair<std::string, std::string>> keys{{"axiom", v.axiom}};
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
      keys.emplace_back("index" + std::to_string(i + 1), std::to_string(v.indices[i]));
    }
    rep.record("violation", keys, v.residual.to_string());
  }
  rep.fact("result", "result", r.ok() ? "BiHom-Lie algebra" : "not a BiHom-Lie algebra");
  return r.ok() ? kSuccess : kNegative;
}

struct DerOptions {
  std::string lambda = "1", mu = "1", gamma = "1";
  unsigned k = 0, l = 0;
  bool normalize = false;
};

int cmd_der(const std::string& path, const DerOptions& o, Reporter& rep) {
  const BiHomLieAlgebra L = load(path);
  const Field f = L.field();
  GenDerivationParams p{FieldElement::parse(o.lambda, f), FieldElement::parse(o.mu, f),
                        FieldElement::parse(o.gamma, f), o.k, o.l};
  rep.fact("params", "parameters", p.to_string());
  if (o.normalize) {
    const NormalizedParams n = normalize_params(p.lambda, p.mu, p.gamma);
    const std::string triple =
        "(" + n.lambda.to_string() + ", " + n.mu.to_string() + ", " + n.gamma.to_string() + ")";
    const std::string label = std::to_string(static_cast<int>(n.param_case));
    rep.human("normalized: " + triple + " case " + label);
    rep.record("normalized", {{"case", label}}, triple);
    p.lambda = n.lambda;
    p.mu = n.mu;
    p.gamma = n.gamma;
  }
  if (p.lambda.is_zero() && p.mu.is_zero() && p.gamma.is_zero()) {
    rep.fact("space", "space", "Omega (joint commutant of alpha and beta)");
  }
  report_basis(rep, "der", gen_der_space(L, p).space);
  return kSuccess;
}

int cmd_structure(const std::string& path, Reporter& rep) {
  const BiHomLieAlgebra L = load(path);
  const AxiomReport axioms = check_all(L);
  rep.fact("dim", "dimension", std::to_string(L.dim()));
  rep.fact("field", "field", L.field().to_string());
  rep.fact("axioms", "axioms", axioms.ok() ? "pass" : "fail");
  rep.fact("regular", "regular", yes_no(is_regular(L)));

  const Subspace whole = Subspace::whole(L.dim(), L.field());
  report_subspace(rep, "center", "center", center(L));
  report_subspace(rep, "bracket-image", "[L, L]", product_subspace(L, whole, whole));
  const SeriesReport lcs = lower_central_series(L);
  const SeriesReport ds = derived_series(L);
  rep.fact("lower-central-dims", "lower central series dims", join_dims(lcs.dims));
  rep.fact("nilpotent", "nilpotent", yes_no(lcs.terminated_at_zero));
  rep.fact("derived-dims", "derived series dims", join_dims(ds.dims));
  rep.fact("solvable", "solvable", yes_no(ds.terminated_at_zero));

  const Subspace kk = ker_alpha_plus_ker_beta(L);
  report_subspace(rep, "ker-alpha-plus-ker-beta", "ker alpha + ker beta", kk);
  rep.fact("ker-sum-ideal", "ker alpha + ker beta is an ideal", yes_no(is_ideal(L, kk)));

  std::string cn;
  try {
    cn = yes_no(is_characteristically_nilpotent(L));
  } catch (const precondition_error&) {
    cn = "undetermined (derivations not closed under the commutator)";
  }
  rep.fact("cn", "characteristically nilpotent", cn);
  rep.fact("small-centroid", "small centroid", yes_no(is_small_centroid(L)));

  if (L.dim() == 2) {
    try {
      const Decomposition d = decompose_2dim(L);
      std::string text = yes_no(d.ideals.has_value());
      if (d.ideals) {
        text += ", span" + vector_text(d.ideals->first.basis().front()) + " + span" +
                vector_text(d.ideals->second.basis().front());
      }
      rep.fact("decomposable", "decomposable", text);
    } catch (const unsupported_field_error& e) {
      rep.fact("decomposable", "decomposable", std::string("undetermined (") + e.what() + ")");
    }
  }
  return kSuccess;
}

ParamAssignment parse_params(const std::string& text) {
  ParamAssignment env;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw parse_error("--params: expected name=value, got '" + item + "'");
    env.insert_or_assign(item.substr(0, eq), FieldElement::parse(item.substr(eq + 1), Field::rational()));
  }
  return env;
}

struct CatalogOptions {
  std::string entry;
  std::string params;
  unsigned kmax = 2, lmax = 2;
};

int cmd_catalog(const CatalogOptions& o, Reporter& rep) {
  std::vector<const CatalogEntry*> entries;
  if (o.entry.empty()) {
    if (!o.params.empty()) throw parse_error("--params requires --entry");
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    entries.push_back(&catalog_entry(o.entry));
  }
  std::size_t counts[3] = {0, 0, 0};
  for (const CatalogEntry* e : entries) {
    const std::vector<ParamAssignment> samples =
        o.params.empty() ? sample_assignments(*e) : std::vector<ParamAssignment>{parse_params(o.params)};
    for (const auto& params : samples) {
      for (unsigned k = 0; k <= o.kmax; ++k) {
        for (unsigned l = 0; l <= o.lmax; ++l) {
          const EntryVerdict v = verify_entry(e->id, params, k, l);
          ++counts[static_cast<int>(v.status)];
          const std::string where = e->id + " " + format_assignment(params) + " k=" +
                                    std::to_string(k) + " l=" + std::to_string(l);
          std::string human = where + ": " + to_string(v.status) + " (centroid " +
                              std::to_string(v.centroid.dim()) + ", der " +
                              std::to_string(v.derivations.dim());
          if (v.small) human += ", small " + yes_no(*v.small);
          if (v.cn) human += ", cn " + yes_no(*v.cn);
          rep.human(human + ")");
          for (const auto& d : v.diffs) rep.human("  " + d);
          rep.record("verdict",
                     {{"entry", e->id},
                      {"params", format_assignment(params)},
                      {"k", std::to_string(k)},
                      {"l", std::to_string(l)},
                      {"centroid-dim", std::to_string(v.centroid.dim())},
                      {"der-dim", std::to_string(v.derivations.dim())}},
                     to_string(v.status));
          for (const auto& d : v.diffs) {
            rep.record("diff", {{"entry", e->id}, {"params", format_assignment(params)},
                                {"k", std::to_string(k)}, {"l", std::to_string(l)}}, d);
          }
        }
      }
    }
  }
  const std::string summary = std::to_string(counts[0]) + " match, " + std::to_string(counts[1]) +
                              " mismatch, " + std::to_string(counts[2]) + " uncovered";
  rep.human("summary: " + summary);
  rep.record("summary", {{"match", std::to_string(counts[0])}, {"mismatch", std::to_string(counts[1])},
                         {"uncovered", std::to_string(counts[2])}},
             counts[1] + counts[2] == 0 ? "pass" : "fail");
  return counts[1] + counts[2] == 0 ? kSuccess : kNegative;
}

int cmd_fingerprint(const std::string& path, Reporter& rep) {
  const Fingerprint fp = fingerprint(load(path));
  rep.fact("dim", "dimension", std::to_string(fp.dim));
  rep.fact("rank-alpha", "rank alpha", std::to_string(fp.rank_alpha));
  rep.fact("rank-beta", "rank beta", std::to_string(fp.rank_beta));
  rep.fact("bracket-image-dim", "dim [L, L]", std::to_string(fp.dim_bracket_image));
  rep.fact("center-dim", "dim center", std::to_string(fp.dim_center));
  rep.fact("lower-central-dims", "lower central series dims", join_dims(fp.lower_central_dims));
  rep.fact("derived-dims", "derived series dims", join_dims(fp.derived_dims));
  rep.fact("char-poly-alpha", "char poly alpha (low to high)", join(fp.char_poly_alpha, ","));
  rep.fact("char-poly-beta", "char poly beta (low to high)", join(fp.char_poly_beta, ","));
  const auto& samples = fingerprint_der_samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const DerSample& s = samples[i];
    const std::string key = "(" + std::to_string(s.lambda) + "," + std::to_string(s.mu) + "," +
                            std::to_string(s.gamma) + ") k=" + std::to_string(s.k) +
                            " l=" + std::to_string(s.l);
    rep.human("der dim " + key + ": " + std::to_string(fp.der_dims[i]));
    rep.record("der-dim",
               {{"triple", std::to_string(s.lambda) + "," + std::to_string(s.mu) + "," +
                               std::to_string(s.gamma)},
                {"k", std::to_string(s.k)},
                {"l", std::to_string(s.l)}},
               std::to_string(fp.der_dims[i]));
  }
  return kSuccess;
}

struct IsoOptions {
  std::string witness;
  std::uint64_t brute = 0;
};

int cmd_iso(const std::string& a, const std::string& b, const IsoOptions& o, Reporter& rep) {
  const BiHomLieAlgebra L = load(a);
  const BiHomLieAlgebra L2 = load(b);
  if (!(L.field() == L2.field())) throw parse_error("the two algebras are over different fields");

  if (!o.witness.empty()) {
    const Matrix f = parse_matrix_file(read_text_file(o.witness)).to_field(L.field());
    const bool ok = verify_isomorphism(L, L2, f);
    rep.fact("iso", "verdict", to_string(ok ? IsoVerdict::witness_verified : IsoVerdict::witness_rejected));
    return ok ? kSuccess : kNegative;
  }
  if (o.brute != 0) {
    if (!is_prime(o.brute)) throw parse_error("--brute expects a prime");
    const std::string over = "F_" + std::to_string(o.brute);
    std::optional<Matrix> w;
    try {
      w = brute_force_iso(L, L2, o.brute);
    } catch (const unsupported_field_error& e) {
      throw parse_error(std::string(e.what()) + "; smallest admissible prime is " +
                        std::to_string(smallest_admissible_prime({&L, &L2})));
    }
    if (!w) {
      rep.fact("iso", "verdict", "no witness over " + over);
      return kNegative;
    }
    rep.fact("iso", "verdict", "witness found over " + over);
    rep.fact("witness", "witness", w->to_string());
    return kSuccess;
  }
  const Fingerprint fa = fingerprint(L);
  const Fingerprint fb = fingerprint(L2);
  const std::vector<std::string> diff = fa.differences(fb);
  if (!diff.empty()) {
    rep.human("verdict: " + to_string(IsoVerdict::not_isomorphic_fingerprint) + ": " + join(diff, ", "));
    rep.record("iso", {{"differs", join(diff, ",")}}, to_string(IsoVerdict::not_isomorphic_fingerprint));
    return kNegative;
  }
  rep.fact("iso", "verdict", to_string(IsoVerdict::inconclusive) + " (fingerprints agree)");
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite-dimensional BiHom-Lie algebras", "bihom"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "human";
  app.add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();

  std::string path, path_b;
  DerOptions der;
  CatalogOptions cat;
  IsoOptions iso;

  auto* check = app.add_subcommand("check", "Verify the axioms");
  check->add_option("path", path, "Algebra file")->required();

  auto* dercmd = app.add_subcommand("der", "Basis of a generalized derivation space");
  dercmd->add_option("path", path, "Algebra file")->required();
  dercmd->add_option("--lambda", der.lambda)->capture_default_str();
  dercmd->add_option("--mu", der.mu)->capture_default_str();
  dercmd->add_option("--gamma", der.gamma)->capture_default_str();
  dercmd->add_option("--k", der.k)->capture_default_str();
  dercmd->add_option("--l", der.l)->capture_default_str();
  dercmd->add_flag("--normalize", der.normalize, "Solve with the canonical triple");

  auto* structure = app.add_subcommand("structure", "Center, series, CN and small-centroid report");
  structure->add_option("path", path, "Algebra file")->required();

  auto* catcmd = app.add_subcommand("catalog", "Replay the two-dimensional catalog");
  catcmd->add_option("--entry", cat.entry, "Family id such as L1_13 or label L_1^13");
  catcmd->add_option("--params", cat.params, "Comma-separated name=value list");
  catcmd->add_option("--kmax", cat.kmax)->capture_default_str();
  catcmd->add_option("--lmax", cat.lmax)->capture_default_str();

  auto* fp = app.add_subcommand("fingerprint", "Basis-independent invariants");
  fp->add_option("path", path, "Algebra file")->required();

  auto* isocmd = app.add_subcommand("iso", "Compare two algebras");
  isocmd->add_option("path_a", path, "First algebra file")->required();
  isocmd->add_option("path_b", path_b, "Second algebra file")->required();
  auto* wopt = isocmd->add_option("--witness", iso.witness, "Matrix file to verify");
  isocmd->add_option("--brute", iso.brute, "Exhaustive search over F_p")->excludes(wopt);

  std::vector<std::string> argv_store{"bihom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "bihom: " << e.what() << '\n';
    return kUsage;
  }

  Reporter rep(out, output == "records");
  try {
    if (*check) return cmd_check(path, rep);
    if (*dercmd) return cmd_der(path, der, rep);
    if (*structure) return cmd_structure(path, rep);
    if (*catcmd) return cmd_catalog(cat, rep);
    if (*fp) return cmd_fingerprint(path, rep);
    if (*isocmd) return cmd_iso(path, path_b, iso, rep);
  } catch (const error& e) {
    err << "bihom: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

std::string catalog_golden_json() {
  using ordered_json = nlohmann::ordered_json;
  char hash[19];
  std::snprintf(hash, sizeof hash, "0x%016llx", static_cast<unsigned long long>(sample_set_hash()));
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["field"] = "rational";
  doc["sample_values"] = default_sample_values();
  doc["sample_hash"] = hash;
  ordered_json families = ordered_json::array();
  for (const CatalogEntry& e : catalog()) {
    ordered_json fam;
    fam["id"] = e.id;
    fam["label"] = e.label;
    ordered_json params = ordered_json::array();
    for (const auto& p : e.params) params.push_back({{"name", p.name}, {"nonzero", p.nonzero}});
    fam["params"] = std::move(params);
    fam["dim"] = 2;
    ordered_json brackets = ordered_json::array();
    for (const auto& t : e.brackets) {
      brackets.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"value", t.value}});
    }
    fam["brackets"] = std::move(brackets);
    fam["alpha"] = e.alpha;
    fam["beta"] = e.beta;
    ordered_json samples = ordered_json::array();
    for (const auto& s : sample_assignments(e)) {
      ordered_json rec = ordered_json::object();
      for (const auto& [name, value] : s) rec[name] = value.to_string();
      samples.push_back(std::move(rec));
    }
    fam["samples"] = std::move(samples);
    ordered_json rows = ordered_json::array();
    for (const auto& r : e.rows) {
      ordered_json row;
      row["guard"] = r.guard;
      row["centroid"] = r.centroid.cells;
      row["derivations"] = r.derivations.cells;
      if (r.small) row["small"] = *r.small;
      if (r.cn) row["cn"] = *r.cn;
      rows.push_back(std::move(row));
    }
    fam["expected_rows"] = std::move(rows);
    fam["known_ideal"] = e.known_ideal;
    fam["decomposable"] = e.decomposable;
    fam["small_listed"] = e.small_listed;
    fam["metadata"] = {{"name", e.label}, {"source", "catalog"}};
    families.push_back(std::move(fam));
  }
  doc["families"] = std::move(families);
  return doc.dump(2) + "\n";
}

}  // namespace bihom::cli
