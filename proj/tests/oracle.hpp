// Independent reference computations for the tests. Everything here works
// by direct evaluation on basis elements or by exhaustive enumeration and
// never calls the solvers under test.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/catalog.hpp"
#include "bihom/errors.hpp"
#include "bihom/field.hpp"
#include "bihom/matrix.hpp"

namespace oracle {

using bihom::Field;
using bihom::FieldElement;
using bihom::Matrix;
using bihom::Vector;

inline FieldElement q(long num, long den = 1) { return FieldElement::ratio(num, den); }

// [x, y] from the raw constants.
inline Vector product(const bihom::BiHomLieAlgebra& L, const Vector& x, const Vector& y) {
  const std::size_t n = L.dim();
  Vector out(n, FieldElement::zero(L.field()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const FieldElement xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + xy * L.constant(i, j, k);
    }
  }
  return out;
}

inline Vector act(const Matrix& m, const Vector& v) {
  Vector out(m.rows(), FieldElement::zero(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = out[i] + m(i, j) * v[j];
  }
  return out;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElement s = FieldElement::zero(a.field());
      for (std::size_t t = 0; t < a.cols(); ++t) s = s + a(i, t) * b(t, j);
      c(i, j) = s;
    }
  }
  return c;
}

inline Matrix power(const Matrix& m, unsigned e) {
  Matrix r = Matrix::identity(m.rows(), m.field());
  for (unsigned i = 0; i < e; ++i) r = mul(r, m);
  return r;
}

inline Vector basis(const bihom::BiHomLieAlgebra& L, std::size_t i) {
  Vector v(L.dim(), FieldElement::zero(L.field()));
  v[i] = FieldElement::one(L.field());
  return v;
}

// d commutes with both twists and
// lambda d[x, y] = mu [d x, m y] + gamma [m x, d y] on basis pairs, m = alpha^k beta^l.
inline bool is_member(const bihom::BiHomLieAlgebra& L, const Matrix& d, const FieldElement& lambda,
                      const FieldElement& mu, const FieldElement& gamma, unsigned k, unsigned l) {
  if (!(mul(d, L.alpha()) == mul(L.alpha(), d)) || !(mul(d, L.beta()) == mul(L.beta(), d))) {
    return false;
  }
  const Matrix m = mul(power(L.alpha(), k), power(L.beta(), l));
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector ei = basis(L, i), ej = basis(L, j);
      const Vector lhs = act(d, product(L, ei, ej));
      const Vector r1 = product(L, act(d, ei), act(m, ej));
      const Vector r2 = product(L, act(m, ei), act(d, ej));
      for (std::size_t s = 0; s < L.dim(); ++s) {
        if (!(lambda * lhs[s] == mu * r1[s] + gamma * r2[s])) return false;
      }
    }
  }
  return true;
}

// Calls f on every n x n matrix over F_p, entries in lexicographic order.
inline void for_each_matrix(std::size_t n, std::uint64_t p, const std::function<void(const Matrix&)>& f) {
  const Field field = Field::prime(p);
  std::vector<std::uint64_t> digits(n * n, 0);
  while (true) {
    std::vector<FieldElement> entries;
    for (auto d : digits) entries.push_back(FieldElement::integer(static_cast<long>(d), field));
    f(Matrix(n, n, entries));
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (digits.empty()) return;
  }
}

// Whether every denominator of the algebra is a unit mod p.
inline bool reducible_mod(const bihom::BiHomLieAlgebra& L, std::uint64_t p) {
  try {
    (void)L.to_field(Field::prime(p));
    return true;
  } catch (const bihom::error&) {
    return false;
  }
}

// Small random rationals num/den with num in [-lim, lim], den in [1, dlim].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  FieldElement rational(long lim = 5, long dlim = 3) { return q(integer(-lim, lim), integer(1, dlim)); }
  FieldElement nonzero(long lim = 5, long dlim = 3) {
    while (true) {
      FieldElement v = rational(lim, dlim);
      if (!v.is_zero()) return v;
    }
  }
  Matrix matrix(std::size_t n, long lim = 3) {
    Matrix m(n, n, Field::rational());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = q(integer(-lim, lim));
    }
    return m;
  }
  Matrix invertible(std::size_t n, long lim = 2) {
    while (true) {
      Matrix m = matrix(n, lim);
      // Independent invertibility test: Gaussian elimination by hand.
      Matrix a = m;
      bool ok = true;
      for (std::size_t c = 0; c < n && ok; ++c) {
        std::size_t r = c;
        while (r < n && a(r, c).is_zero()) ++r;
        if (r == n) {
          ok = false;
          break;
        }
        for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(c, j));
        for (std::size_t i = c + 1; i < n; ++i) {
          const FieldElement f = a(i, c) / a(c, c);
          for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
      }
      if (ok) return m;
    }
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Every (family, sample) pair of the catalog.
struct Instance {
  const bihom::CatalogEntry* entry;
  bihom::ParamAssignment params;
  bihom::BiHomLieAlgebra algebra;
};

inline std::vector<Instance> catalog_instances() {
  std::vector<Instance> out;
  for (const auto& e : bihom::catalog()) {
    for (const auto& s : bihom::sample_assignments(e)) out.push_back({&e, s, bihom::build(e.id, s)});
  }
  return out;
}

}  // namespace oracle
