#include "bihom/algebra.hpp"

#include <sstream>

#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

StructureTable::StructureTable(std::size_t n, Field field)
    : n_(n), field_(field), c_(n * n * n, FieldElement::zero(field)) {}

StructureTable::StructureTable(std::size_t n, Field field, const std::vector<BracketTerm>& terms)
    : StructureTable(n, field) {
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n || t.k >= n) throw dimension_error("bracket index out of range");
    (*this)(t.i, t.j, t.k) += t.value.to_field(field);
  }
}

std::vector<BracketTerm> StructureTable::terms() const {
  std::vector<BracketTerm> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!(*this)(i, j, k).is_zero()) out.push_back({i, j, k, (*this)(i, j, k)});
      }
    }
  }
  return out;
}

bool StructureTable::is_zero() const { return bihom::is_zero(c_); }

Vector StructureTable::product(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw dimension_error("vector length != algebra dim");
  Vector r = zero_vector(n_, field_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const FieldElement xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!(*this)(i, j, k).is_zero()) r[k] += xy * (*this)(i, j, k);
      }
    }
  }
  return r;
}

StructureTable StructureTable::to_field(Field target) const {
  StructureTable t(n_, target);
  for (std::size_t idx = 0; idx < c_.size(); ++idx) t.c_[idx] = c_[idx].to_field(target);
  return t;
}

BiHomLieAlgebra::BiHomLieAlgebra(StructureTable structure, Matrix alpha, Matrix beta)
    : structure_(std::move(structure)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  const std::size_t n = structure_.dim();
  for (const Matrix* m : {&alpha_, &beta_}) {
    if (m->rows() != n || m->cols() != n) throw dimension_error("twist must be n x n");
    if (m->field() != structure_.field()) throw field_mismatch_error("twist over another field");
  }
}

BiHomLieAlgebra BiHomLieAlgebra::to_field(Field target) const {
  return BiHomLieAlgebra(structure_.to_field(target), alpha_.to_field(target),
                         beta_.to_field(target));
}

Vector bracket(const BiHomLieAlgebra& L, const Vector& x, const Vector& y) {
  return L.structure().product(x, y);
}

Vector basis_vector(const BiHomLieAlgebra& L, std::size_t i) {
  return unit_vector(L.dim(), i, L.field());
}

std::uint64_t content_hash(const BiHomLieAlgebra& L) {
  std::ostringstream text;
  text << L.dim() << ';' << L.field().to_string() << ';';
  for (const auto& t : L.structure().terms()) {
    text << t.i << ',' << t.j << ',' << t.k << '=' << t.value.to_string() << ';';
  }
  text << L.alpha().to_string() << ';' << L.beta().to_string();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_regular(const BiHomLieAlgebra& L) {
  return is_invertible(L.alpha()) && is_invertible(L.beta());
}

Matrix twist_power(const BiHomLieAlgebra& L, unsigned k, unsigned l) {
  return L.alpha().pow(k) * L.beta().pow(l);
}

std::string Violation::describe() const {
  static constexpr const char* names[] = {"i", "j", "k", "r"};
  std::ostringstream out;
  out << axiom << " (";
  for (std::size_t t = 0; t < indices.size(); ++t) {
    // Three-index tuples name the output coordinate s.
    const char* name = (indices.size() == 3 && t == 2) ? "s" : names[t];
    out << (t == 0 ? "" : ",") << name << '=' << indices[t];
  }
  out << ") residual " << residual.to_string();
  return out.str();
}

namespace {

AxiomCheck fail(std::string axiom, std::vector<std::size_t> indices, FieldElement residual) {
  for (auto& idx : indices) ++idx;
  return {false, Violation{std::move(axiom), std::move(indices), std::move(residual)}};
}

AxiomCheck check_multiplicative_for(const BiHomLieAlgebra& L, const Matrix& m,
                                    const std::string& name) {
  const std::size_t n = L.dim();
  const Field f = L.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < n; ++s) {
        FieldElement lhs = FieldElement::zero(f);
        for (std::size_t k = 0; k < n; ++k) lhs += L.constant(i, j, k) * m(s, k);
        FieldElement rhs = FieldElement::zero(f);
        for (std::size_t p = 0; p < n; ++p) {
          if (m(p, i).is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q) {
            rhs += m(p, i) * m(q, j) * L.constant(p, q, s);
          }
        }
        if (lhs != rhs) return fail(name, {i, j, s}, lhs - rhs);
      }
    }
  }
  return {};
}

}  // namespace

AxiomCheck check_commuting_detail(const BiHomLieAlgebra& L) {
  const Matrix diff = L.alpha() * L.beta() - L.beta() * L.alpha();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (!diff(i, j).is_zero()) return fail("commuting", {i, j}, diff(i, j));
    }
  }
  return {};
}

bool check_commuting(const BiHomLieAlgebra& L) { return check_commuting_detail(L).passed; }

AxiomCheck check_skew_symmetry(const BiHomLieAlgebra& L) {
  const std::size_t n = L.dim();
  const Matrix& a = L.alpha();
  const Matrix& b = L.beta();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < n; ++s) {
        FieldElement sum = FieldElement::zero(L.field());
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = 0; q < n; ++q) {
            const FieldElement& c = L.constant(p, q, s);
            if (c.is_zero()) continue;
            sum += (b(p, i) * a(q, j) + b(p, j) * a(q, i)) * c;
          }
        }
        if (!sum.is_zero()) return fail("skew", {i, j, s}, sum);
      }
    }
  }
  return {};
}

AxiomCheck check_bihom_jacobi(const BiHomLieAlgebra& L) {
  const std::size_t n = L.dim();
  const Field f = L.field();
  const Matrix& a = L.alpha();
  const Matrix& b = L.beta();
  // b2(p, i) = sum_{s'} b_{p s'} b_{s' i}
  Matrix b2(n, n, f);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t sp = 0; sp < n; ++sp) b2(p, i) += b(p, sp) * b(sp, i);
    }
  }
  // inner[(j*n + k)*n + l] = sum_{q,s} b_{qj} a_{sk} C_{qs}^l
  std::vector<FieldElement> inner(n * n * n, FieldElement::zero(f));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t q = 0; q < n; ++q) {
        if (b(q, j).is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) {
          if (a(s, k).is_zero()) continue;
          const FieldElement w = b(q, j) * a(s, k);
          for (std::size_t l = 0; l < n; ++l) {
            if (!L.constant(q, s, l).is_zero()) inner[(j * n + k) * n + l] += w * L.constant(q, s, l);
          }
        }
      }
    }
  }
  auto term = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
    FieldElement t = FieldElement::zero(f);
    for (std::size_t p = 0; p < n; ++p) {
      if (b2(p, i).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const FieldElement& in = inner[(j * n + k) * n + l];
        if (in.is_zero() || L.constant(p, l, r).is_zero()) continue;
        t += b2(p, i) * in * L.constant(p, l, r);
      }
    }
    return t;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
          FieldElement sum = term(i, j, k, r) + term(j, k, i, r) + term(k, i, j, r);
          if (!sum.is_zero()) return fail("bihom-jacobi", {i, j, k, r}, sum);
        }
      }
    }
  }
  return {};
}

AxiomCheck check_multiplicative(const BiHomLieAlgebra& L) {
  AxiomCheck r = check_multiplicative_for(L, L.alpha(), "multiplicative-alpha");
  if (!r.passed) return r;
  return check_multiplicative_for(L, L.beta(), "multiplicative-beta");
}

AxiomReport check_all(const BiHomLieAlgebra& L) {
  AxiomReport report;
  const AxiomCheck checks[] = {check_commuting_detail(L), check_skew_symmetry(L),
                               check_bihom_jacobi(L), check_multiplicative(L)};
  report.commuting = checks[0].passed;
  report.skew_symmetric = checks[1].passed;
  report.bihom_jacobi = checks[2].passed;
  report.multiplicative = checks[3].passed;
  for (const auto& c : checks) {
    if (!c.passed) {
      report.first_violation = c.violation;
      break;
    }
  }
  return report;
}

namespace on_basis {

bool skew_symmetry(const BiHomLieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector ei = basis_vector(L, i);
      const Vector ej = basis_vector(L, j);
      const Vector lhs = bracket(L, L.beta() * ei, L.alpha() * ej);
      const Vector rhs = bracket(L, L.beta() * ej, L.alpha() * ei);
      if (!is_zero(add(lhs, rhs))) return false;
    }
  }
  return true;
}

bool bihom_jacobi(const BiHomLieAlgebra& L) {
  const Matrix b2 = L.beta() * L.beta();
  const auto cyc = [&](const Vector& x, const Vector& y, const Vector& z) {
    return bracket(L, b2 * x, bracket(L, L.beta() * y, L.alpha() * z));
  };
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      for (std::size_t k = 0; k < L.dim(); ++k) {
        const Vector x = basis_vector(L, i);
        const Vector y = basis_vector(L, j);
        const Vector z = basis_vector(L, k);
        if (!is_zero(add(add(cyc(x, y, z), cyc(y, z, x)), cyc(z, x, y)))) return false;
      }
    }
  }
  return true;
}

bool multiplicative(const BiHomLieAlgebra& L) {
  for (const Matrix* m : {&L.alpha(), &L.beta()}) {
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = 0; j < L.dim(); ++j) {
        const Vector x = basis_vector(L, i);
        const Vector y = basis_vector(L, j);
        if ((*m) * bracket(L, x, y) != bracket(L, (*m) * x, (*m) * y)) return false;
      }
    }
  }
  return true;
}

}  // namespace on_basis

bool is_lie_algebra(const StructureTable& lie) {
  const std::size_t n = lie.dim();
  const Field f = lie.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (lie(i, j, k) != -lie(j, i, k)) return false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = unit_vector(n, i, f);
        const Vector y = unit_vector(n, j, f);
        const Vector z = unit_vector(n, k, f);
        const Vector sum = add(add(lie.product(x, lie.product(y, z)),
                                   lie.product(y, lie.product(z, x))),
                               lie.product(z, lie.product(x, y)));
        if (!is_zero(sum)) return false;
      }
    }
  }
  return true;
}

bool is_lie_endomorphism(const StructureTable& lie, const Matrix& m) {
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(n, i, lie.field());
      const Vector y = unit_vector(n, j, lie.field());
      if (m * lie.product(x, y) != lie.product(m * x, m * y)) return false;
    }
  }
  return true;
}

}  // namespace bihom
