#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phi4/families.hpp"
#include "phi4/models.hpp"
#include "phi4/rational.hpp"
#include "phi4/symbols.hpp"

namespace phi4::symalg {

// Exponent vector over the symbol set.
using ExpVec = std::array<std::uint8_t, kSymCount>;

// Multivariate polynomial over the symbols with exact rational coefficients.
// Canonical form: no zero terms; terms ordered by exponent vector.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(Rational r);
  static MultiPoly symbol(Sym s, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& r) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Drops every term containing the symbol (substitutes zero).
  MultiPoly substitute_zero(Sym s) const;

  double eval(const Assignment& a) const;

  // Removes the rational content and the common monomial factor, and fixes
  // the sign so the leading term's coefficient is positive.  Returns the
  // factored-out scale (poly == scale * primitive).
  MultiPoly primitive_part() const;

  std::string to_string() const;

 private:
  void add_term(const ExpVec& e, const Rational& r);
  std::map<ExpVec, Rational> terms_;
  friend class EllipticExpr;
};

// Element of the ring R[s, c, d] / (c^2 - (1 - s^2), d^2 - (1 - m s^2))
// with R the rational polynomial ring over the symbols.  Normal form keeps
// c and d exponents at most 1: components [c][d] are polynomials in s.
class EllipticExpr {
 public:
  EllipticExpr() = default;
  static EllipticExpr s();
  static EllipticExpr c();
  static EllipticExpr d();
  static EllipticExpr symbol(Sym s);
  static EllipticExpr constant(Rational r);
  static EllipticExpr from_poly(const MultiPoly& p);

  bool is_zero() const;

  EllipticExpr& operator+=(const EllipticExpr& o);
  EllipticExpr& operator-=(const EllipticExpr& o);
  friend EllipticExpr operator+(EllipticExpr a, const EllipticExpr& b) { return a += b; }
  friend EllipticExpr operator-(EllipticExpr a, const EllipticExpr& b) { return a -= b; }
  friend EllipticExpr operator*(const EllipticExpr& a, const EllipticExpr& b);

  // d/du with sn' = cn dn, cn' = -sn dn, dn' = -m sn cn, each multiplied by
  // the chain factor `scale` (the inverse length D for argument D(x+x0)).
  EllipticExpr differentiate(Sym scale) const;

  // Numeric evaluation at a point of the ring: (sn, cn, dn) plus symbol values.
  double eval(double sn, double cn, double dn, const Assignment& a) const;

  // Normal-form component (c_flag, d_flag) as a dense vector over s-powers.
  const std::vector<MultiPoly>& component(int c_flag, int d_flag) const {
    return comp_[c_flag][d_flag];
  }

 private:
  void add(int c_flag, int d_flag, int s_pow, const MultiPoly& p);
  void prune();
  // comp_[c][d][n] multiplies s^n c^c d^d.
  std::array<std::array<std::vector<MultiPoly>, 2>, 2> comp_;
};

struct BasisMonomial {
  int s_pow = 0;
  bool c = false;
  bool d = false;
  std::string tag() const;  // "1", "s^2", "s*c", "s^2*c*d", ...
};

struct DerivedEquation {
  BasisMonomial basis;
  char field = 'p';   // 'p' for the first field, 'q' for the second
  MultiPoly poly;     // primitive part; must vanish
  std::string label;  // e.g. "S-II/phi[s^2]"
};

struct ConstraintSystemDerived {
  families::FamilyId family;
  std::vector<DerivedEquation> equations;
  std::vector<std::string> basis_tags() const;
};

// Builds phi_xx - rhs and psi_xx - rhs for the family's ansatz symbolically,
// reduces to normal form and extracts one equation per nonzero basis
// coefficient.  Family-level zero applicability (Hz = 0, G = 0) is
// substituted.  Ordering: first field before second; within a field the
// pure-s block, then c, then d, then c*d, ascending s power.
ConstraintSystemDerived derive_constraint_system(models::ModelId model,
                                                 families::FamilyId family);

// The ansatz of a family as ring elements (after zero substitutions).
std::pair<EllipticExpr, EllipticExpr> family_ansatz(families::FamilyId family);

// The model's field-equation right-hand sides as ring elements.
std::pair<EllipticExpr, EllipticExpr> symbolic_rhs(models::ModelId model,
                                                   const EllipticExpr& phi,
                                                   const EllipticExpr& psi);

}  // namespace phi4::symalg
