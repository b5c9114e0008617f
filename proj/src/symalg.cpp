#include "phi4/symalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phi4/errors.hpp"

namespace phi4::symalg {

using families::FamilyId;
using families::ShapeKind;
using models::ModelId;

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(Rational r) {
  MultiPoly p;
  if (!r.is_zero()) p.terms_[ExpVec{}] = r;
  return p;
}

MultiPoly MultiPoly::symbol(Sym s, int power) {
  MultiPoly p;
  ExpVec e{};
  e[sym_index(s)] = static_cast<std::uint8_t>(power);
  p.terms_[e] = Rational(1);
  return p;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (!inserted) {
    it->second = it->second + r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, r] : o.terms_) add_term(e, r);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, r] : o.terms_) add_term(e, -r);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ra] : a.terms_)
    for (const auto& [eb, rb] : b.terms_) {
      ExpVec e;
      for (std::size_t i = 0; i < kSymCount; ++i)
        e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ra * rb);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& r) const {
  MultiPoly out;
  if (r.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * r;
  return out;
}

MultiPoly MultiPoly::substitute_zero(Sym s) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_)
    if (e[sym_index(s)] == 0) out.terms_[e] = c;
  return out;
}

double MultiPoly::eval(const Assignment& a) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < kSymCount; ++i)
      for (int k = 0; k < e[i]; ++k) t *= a[i];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return {};
  Rational content(0);
  ExpVec mono;
  mono.fill(255);
  for (const auto& [e, c] : terms_) {
    content = content.is_zero() ? (c.negative() ? -c : c) : Rational::gcd(content, c);
    for (std::size_t i = 0; i < kSymCount; ++i) mono[i] = std::min(mono[i], e[i]);
  }
  if (terms_.begin()->second.negative()) content = -content;
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    ExpVec e2;
    for (std::size_t i = 0; i < kSymCount; ++i)
      e2[i] = static_cast<std::uint8_t>(e[i] - mono[i]);
    out.terms_[e2] = c / content;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.negative() ? -c : c;
    if (first) {
      if (c.negative()) os << "-";
      first = false;
    } else {
      os << (c.negative() ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    bool any_sym = false;
    for (std::size_t i = 0; i < kSymCount; ++i)
      if (e[i] > 0) any_sym = true;
    if (!unit || !any_sym) os << mag.to_string();
    bool need_star = !unit || !any_sym;
    for (std::size_t i = 0; i < kSymCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << sym_name(static_cast<Sym>(i));
      if (e[i] > 1) os << "^" << int(e[i]);
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// EllipticExpr

EllipticExpr EllipticExpr::s() {
  EllipticExpr e;
  e.add(0, 0, 1, MultiPoly::constant(Rational(1)));
  return e;
}
EllipticExpr EllipticExpr::c() {
  EllipticExpr e;
  e.add(1, 0, 0, MultiPoly::constant(Rational(1)));
  return e;
}
EllipticExpr EllipticExpr::d() {
  EllipticExpr e;
  e.add(0, 1, 0, MultiPoly::constant(Rational(1)));
  return e;
}
EllipticExpr EllipticExpr::symbol(Sym s) { return from_poly(MultiPoly::symbol(s)); }
EllipticExpr EllipticExpr::constant(Rational r) { return from_poly(MultiPoly::constant(r)); }
EllipticExpr EllipticExpr::from_poly(const MultiPoly& p) {
  EllipticExpr e;
  e.add(0, 0, 0, p);
  return e;
}

bool EllipticExpr::is_zero() const {
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di)
      for (const auto& p : comp_[ci][di])
        if (!p.is_zero()) return false;
  return true;
}

void EllipticExpr::add(int c_flag, int d_flag, int s_pow, const MultiPoly& p) {
  if (p.is_zero()) return;
  if (c_flag >= 2 || d_flag >= 2) {
    // Apply c^2 = 1 - s^2 and d^2 = 1 - m s^2 until flags are 0/1.
    if (c_flag >= 2) {
      add(c_flag - 2, d_flag, s_pow, p);
      add(c_flag - 2, d_flag, s_pow + 2, p.scaled(Rational(-1)));
      return;
    }
    add(c_flag, d_flag - 2, s_pow, p);
    add(c_flag, d_flag - 2, s_pow + 2, (p * MultiPoly::symbol(Sym::M)).scaled(Rational(-1)));
    return;
  }
  auto& vec = comp_[c_flag][d_flag];
  if (static_cast<int>(vec.size()) <= s_pow) vec.resize(s_pow + 1);
  vec[s_pow] += p;
}

void EllipticExpr::prune() {
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di) {
      auto& vec = comp_[ci][di];
      while (!vec.empty() && vec.back().is_zero()) vec.pop_back();
    }
}

EllipticExpr& EllipticExpr::operator+=(const EllipticExpr& o) {
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di)
      for (std::size_t n = 0; n < o.comp_[ci][di].size(); ++n)
        add(ci, di, static_cast<int>(n), o.comp_[ci][di][n]);
  prune();
  return *this;
}

EllipticExpr& EllipticExpr::operator-=(const EllipticExpr& o) {
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di)
      for (std::size_t n = 0; n < o.comp_[ci][di].size(); ++n)
        add(ci, di, static_cast<int>(n), o.comp_[ci][di][n].scaled(Rational(-1)));
  prune();
  return *this;
}

EllipticExpr operator*(const EllipticExpr& a, const EllipticExpr& b) {
  EllipticExpr out;
  for (int ca = 0; ca < 2; ++ca)
    for (int da = 0; da < 2; ++da)
      for (std::size_t na = 0; na < a.comp_[ca][da].size(); ++na) {
        const MultiPoly& pa = a.comp_[ca][da][na];
        if (pa.is_zero()) continue;
        for (int cb = 0; cb < 2; ++cb)
          for (int db = 0; db < 2; ++db)
            for (std::size_t nb = 0; nb < b.comp_[cb][db].size(); ++nb) {
              const MultiPoly& pb = b.comp_[cb][db][nb];
              if (pb.is_zero()) continue;
              out.add(ca + cb, da + db, static_cast<int>(na + nb), pa * pb);
            }
      }
  out.prune();
  return out;
}

EllipticExpr EllipticExpr::differentiate(Sym scale) const {
  const MultiPoly dsym = MultiPoly::symbol(scale);
  const MultiPoly msym = MultiPoly::symbol(Sym::M);
  EllipticExpr out;
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di)
      for (std::size_t n = 0; n < comp_[ci][di].size(); ++n) {
        const MultiPoly& p = comp_[ci][di][n];
        if (p.is_zero()) continue;
        const MultiPoly scaled = p * dsym;
        // (s^n)' = n s^(n-1) c d
        if (n >= 1)
          out.add(ci + 1, di + 1, static_cast<int>(n - 1),
                  scaled.scaled(Rational(static_cast<long long>(n))));
        // (c^ci)' contributes -s d per factor of c
        if (ci == 1) out.add(0, di + 1, static_cast<int>(n + 1), scaled.scaled(Rational(-1)));
        // (d^di)' contributes -m s c per factor of d
        if (di == 1)
          out.add(ci + 1, 0, static_cast<int>(n + 1), (scaled * msym).scaled(Rational(-1)));
      }
  out.prune();
  return out;
}

double EllipticExpr::eval(double sn, double cn, double dn, const Assignment& a) const {
  double sum = 0.0;
  for (int ci = 0; ci < 2; ++ci)
    for (int di = 0; di < 2; ++di)
      for (std::size_t n = 0; n < comp_[ci][di].size(); ++n) {
        const MultiPoly& p = comp_[ci][di][n];
        if (p.is_zero()) continue;
        double t = p.eval(a);
        t *= std::pow(sn, static_cast<double>(n));
        if (ci) t *= cn;
        if (di) t *= dn;
        sum += t;
      }
  return sum;
}

// ---------------------------------------------------------------------------
// Derivation

std::string BasisMonomial::tag() const {
  std::string out;
  if (s_pow == 1) out = "s";
  else if (s_pow > 1) out = "s^" + std::to_string(s_pow);
  if (c) out += out.empty() ? "c" : "*c";
  if (d) out += out.empty() ? "d" : "*d";
  return out.empty() ? "1" : out;
}

std::vector<std::string> ConstraintSystemDerived::basis_tags() const {
  std::vector<std::string> tags;
  tags.reserve(equations.size());
  for (const auto& eq : equations) tags.push_back(eq.basis.tag());
  return tags;
}

namespace {

EllipticExpr shape_expr(ShapeKind kind, Sym amp, Sym off, bool off_zeroed) {
  using EE = EllipticExpr;
  EE a = EE::symbol(amp);
  EE o = off_zeroed ? EE() : EE::symbol(off);
  switch (kind) {
    case ShapeKind::ConstPlusSn2: return o + a * EE::s() * EE::s();
    case ShapeKind::SnCn: return a * EE::s() * EE::c();
    case ShapeKind::SnDn: return a * EE::s() * EE::d();
    case ShapeKind::CnDn: return a * EE::c() * EE::d();
    case ShapeKind::ConstPlusSn: return o + a * EE::s();
    case ShapeKind::ConstPlusCn: return o + a * EE::c();
    case ShapeKind::ConstPlusDn: return o + a * EE::d();
    case ShapeKind::SechRational:
      throw UnknownFamily("shape_expr: sech-rational shape is outside the polynomial ring");
  }
  return {};
}

EllipticExpr times(Rational r, const EllipticExpr& e) {
  return EllipticExpr::constant(r) * e;
}

}  // namespace

std::pair<EllipticExpr, EllipticExpr> symbolic_rhs(ModelId model, const EllipticExpr& phi,
                                                   const EllipticExpr& psi) {
  using EE = EllipticExpr;
  auto S = [](Sym s) { return EE::symbol(s); };
  EE phi2 = phi * phi, psi2 = psi * psi;
  switch (model) {
    case ModelId::Sym: {
      EE rf = times(2, S(Sym::Alpha1) * phi) + times(4, S(Sym::Beta1) * phi * phi2) +
              times(2, S(Sym::Gamma) * phi * psi2) -
              S(Sym::Hz) * (S(Sym::Rho1) + times(3, S(Sym::Rho2) * phi2) +
                            S(Sym::Rho3) * psi2);
      EE rp = times(2, S(Sym::Alpha2) * psi) + times(4, S(Sym::Beta2) * psi * psi2) +
              times(2, S(Sym::Gamma) * phi2 * psi) -
              times(2, S(Sym::Hz) * S(Sym::Rho3) * phi * psi);
      return {rf, rp};
    }
    case ModelId::Asym: {
      EE rf = times(2, S(Sym::Alpha1) * phi) + times(3, S(Sym::Delta1) * phi2) +
              times(4, S(Sym::Beta1) * phi * phi2) +
              times(2, S(Sym::Gamma) * phi * psi2) + S(Sym::Eta) * psi2;
      EE rp = times(2, S(Sym::Alpha2) * psi) + times(3, S(Sym::Delta2) * psi2) +
              times(4, S(Sym::Beta2) * psi * psi2) +
              times(2, S(Sym::Gamma) * phi2 * psi) +
              times(2, S(Sym::Eta) * phi * psi);
      return {rf, rp};
    }
    case ModelId::Mix: {
      EE rf = times(2, S(Sym::Alpha1) * phi) - times(3, S(Sym::Delta1) * phi2) +
              times(4, S(Sym::Beta1) * phi * phi2) + S(Sym::Eta) * psi2 +
              times(2, S(Sym::Gamma) * phi * psi2);
      EE rp = times(2, S(Sym::Alpha2) * psi) + times(4, S(Sym::Beta2) * psi * psi2) +
              times(2, S(Sym::Eta) * phi * psi) +
              times(2, S(Sym::Gamma) * phi2 * psi);
      return {rf, rp};
    }
  }
  return {};
}

std::pair<EllipticExpr, EllipticExpr> family_ansatz(FamilyId family) {
  const auto& d = families::descriptor(family);
  bool g_zeroed = false;
  for (const auto& app : d.applicability)
    if (app.kind == families::Applicability::Kind::CoeffZero && app.target == Sym::G)
      g_zeroed = true;
  EllipticExpr phi = shape_expr(d.shape_phi, Sym::A, Sym::F, false);
  EllipticExpr psi = shape_expr(d.shape_psi, Sym::B, Sym::G, g_zeroed);
  return {phi, psi};
}

ConstraintSystemDerived derive_constraint_system(ModelId model, FamilyId family) {
  const auto& desc = families::descriptor(family);
  if (desc.model != model)
    throw ParamModelMismatch("derive_constraint_system: family " + desc.name +
                             " belongs to model " + std::string(model_name(desc.model)));
  if (desc.shape_phi == ShapeKind::SechRational)
    throw UnknownFamily("derive_constraint_system: " + desc.name +
                        " has a rational shape outside the polynomial ring");

  auto [phi, psi] = family_ansatz(family);
  EllipticExpr phi_xx = phi.differentiate(Sym::D).differentiate(Sym::D);
  EllipticExpr psi_xx = psi.differentiate(Sym::D).differentiate(Sym::D);
  auto [rf, rp] = symbolic_rhs(model, phi, psi);
  EllipticExpr res_phi = phi_xx - rf;
  EllipticExpr res_psi = psi_xx - rp;

  std::vector<Sym> zeroed;
  for (const auto& app : desc.applicability)
    if (app.kind == families::Applicability::Kind::ParamZero) zeroed.push_back(app.target);

  ConstraintSystemDerived out;
  out.family = family;
  auto collect = [&](const EllipticExpr& res, char field) {
    for (auto [cf, df] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
      const auto& vec = res.component(cf, df);
      for (std::size_t n = 0; n < vec.size(); ++n) {
        MultiPoly p = vec[n];
        for (Sym z : zeroed) p = p.substitute_zero(z);
        if (p.is_zero()) continue;
        DerivedEquation eq;
        eq.basis = {static_cast<int>(n), cf == 1, df == 1};
        eq.field = field;
        eq.poly = p.primitive_part();
        eq.label = desc.name + "/" + (field == 'p' ? "phi[" : "psi[") + eq.basis.tag() + "]";
        out.equations.push_back(std::move(eq));
      }
    }
  };
  collect(res_phi, 'p');
  collect(res_psi, 'q');
  return out;
}

}  // namespace phi4::symalg
