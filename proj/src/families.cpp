#include "phi4/families.hpp"

#include <cmath>
#include <string>

#include "phi4/elliptic.hpp"
#include "phi4/errors.hpp"

namespace phi4::families {

using models::ModelId;

bool shape_has_offset(ShapeKind k) {
  switch (k) {
    case ShapeKind::ConstPlusSn2:
    case ShapeKind::ConstPlusSn:
    case ShapeKind::ConstPlusCn:
    case ShapeKind::ConstPlusDn:
      return true;
    default:
      return false;
  }
}

bool shape_odd_under_reflection(ShapeKind k) {
  switch (k) {
    case ShapeKind::SnCn:
    case ShapeKind::SnDn:
    case ShapeKind::ConstPlusSn:
      return true;
    default:
      return false;
  }
}

double get_coeff(const Coefficients& c, Sym s) {
  switch (s) {
    case Sym::A: return c.A;
    case Sym::B: return c.B;
    case Sym::D: return c.D;
    case Sym::F: return c.F;
    case Sym::G: return c.G;
    case Sym::H: return c.H;
    case Sym::M: return c.m;
    default:
      throw DomainError("get_coeff: " + std::string(sym_name(s)) + " is not a coefficient");
  }
}

void set_coeff(Coefficients& c, Sym s, double value) {
  switch (s) {
    case Sym::A: c.A = value; return;
    case Sym::B: c.B = value; return;
    case Sym::D: c.D = value; return;
    case Sym::F: c.F = value; return;
    case Sym::G: c.G = value; return;
    case Sym::H: c.H = value; return;
    case Sym::M: c.m = value; return;
    default:
      throw DomainError("set_coeff: " + std::string(sym_name(s)) + " is not a coefficient");
  }
}

Coefficients coeffs_from_assignment(const Assignment& a) {
  Coefficients c;
  c.A = a[sym_index(Sym::A)];
  c.B = a[sym_index(Sym::B)];
  c.D = a[sym_index(Sym::D)];
  c.F = a[sym_index(Sym::F)];
  c.G = a[sym_index(Sym::G)];
  c.H = a[sym_index(Sym::H)];
  c.m = a[sym_index(Sym::M)];
  return c;
}

namespace {

Applicability hz_zero() {
  return {Applicability::Kind::ParamZero, Sym::Hz, "Hz = 0 required"};
}
Applicability g_zero() {
  return {Applicability::Kind::CoeffZero, Sym::G, "G must be 0"};
}
Applicability m_one() {
  return {Applicability::Kind::UnitModulusOnly, Sym::M, "m = 1 only"};
}

std::vector<FamilyDescriptor> build_catalog() {
  using SK = ShapeKind;
  std::vector<FamilyDescriptor> v;
  auto add = [&v](FamilyId id, std::string name, ModelId model, SK sp, SK sq,
                  std::vector<Sym> unknowns, int eqs,
                  std::vector<Applicability> app = {},
                  std::vector<std::string> branches = {}) {
    FamilyDescriptor d;
    d.id = id;
    d.name = std::move(name);
    d.model = model;
    d.shape_phi = sp;
    d.shape_psi = sq;
    d.unknowns = std::move(unknowns);
    d.equation_count = eqs;
    d.applicability = std::move(app);
    d.branch_conditions = std::move(branches);
    d.system_reference = d.name + ": " + std::to_string(eqs) + " matching conditions";
    v.push_back(std::move(d));
  };

  // Symmetric model, order 2.
  add(FamilyId::SI, "S-I", ModelId::Sym, SK::ConstPlusSn2, SK::ConstPlusSn2,
      {Sym::A, Sym::B, Sym::D, Sym::F, Sym::G}, 8, {},
      {"no solution exists with G = 0 (any F)",
       "B = -G and B = -m G branches exist only at m = 1",
       "no solution exists when Hz = 0"});
  add(FamilyId::SII, "S-II", ModelId::Sym, SK::ConstPlusSn2, SK::SnCn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {},
      {"F = 0, -A, -A/m branches persist only while Hz != 0",
       "Hz = 0 forces gamma = 2 beta1 = 2 beta2 and A^2 = B^2"});
  add(FamilyId::SIII, "S-III", ModelId::Sym, SK::SnCn, SK::ConstPlusSn2,
      {Sym::A, Sym::B, Sym::D, Sym::G}, 7, {hz_zero()});
  add(FamilyId::SIV, "S-IV", ModelId::Sym, SK::ConstPlusSn2, SK::SnDn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {},
      {"F = 0, -A, -A/m branches persist only while Hz != 0"});
  add(FamilyId::SV, "S-V", ModelId::Sym, SK::SnDn, SK::ConstPlusSn2,
      {Sym::A, Sym::B, Sym::D, Sym::G}, 7, {hz_zero()});
  add(FamilyId::SVI, "S-VI", ModelId::Sym, SK::ConstPlusSn2, SK::CnDn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {},
      {"Hz = 0: no solution at m = 1; scanner reports findings for m < 1"});

  // Asymmetric model, order 2.
  add(FamilyId::AI, "A-I", ModelId::Asym, SK::ConstPlusSn2, SK::ConstPlusSn2,
      {Sym::A, Sym::B, Sym::D, Sym::F, Sym::G}, 8,
      {{Applicability::Kind::Note, Sym::Delta2,
        "delta2 != 0 assumed when citing this as the only order-2 family"}},
      {"no solution exists with G = 0 (any F)",
       "B = -G and B = -m G branches exist only at m = 1"});

  // Asymmetric-symmetric model, order 1.
  add(FamilyId::M1I, "M1-I", ModelId::Mix, SK::ConstPlusSn, SK::ConstPlusSn,
      {Sym::A, Sym::B, Sym::D, Sym::F, Sym::G}, 8, {},
      {"no solution with F = 0; the G = 0, F != 0 branch is the worked case"});
  add(FamilyId::M1II, "M1-II", ModelId::Mix, SK::ConstPlusCn, SK::ConstPlusCn,
      {Sym::A, Sym::B, Sym::D, Sym::F, Sym::G}, 8, {},
      {"G = 0, F != 0 branch requires m < 1/2",
       "F = 0, G != 0 branch requires eta = 0 and alpha2 < 0"});
  add(FamilyId::M1III, "M1-III", ModelId::Mix, SK::ConstPlusDn, SK::ConstPlusDn,
      {Sym::A, Sym::B, Sym::D, Sym::F, Sym::G}, 8, {},
      {"only the F = 0, G != 0 branch exists; it requires eta = 0 and alpha2 < 0"});
  add(FamilyId::M1IV, "M1-IV", ModelId::Mix, SK::ConstPlusSn, SK::ConstPlusCn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {g_zero()});
  add(FamilyId::M1V, "M1-V", ModelId::Mix, SK::ConstPlusSn, SK::ConstPlusDn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {g_zero()});
  add(FamilyId::M1VI, "M1-VI", ModelId::Mix, SK::ConstPlusCn, SK::ConstPlusSn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {g_zero()});
  add(FamilyId::M1VII, "M1-VII", ModelId::Mix, SK::ConstPlusDn, SK::ConstPlusSn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {g_zero()});
  add(FamilyId::M1VIII, "M1-VIII", ModelId::Mix, SK::ConstPlusCn, SK::ConstPlusDn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {g_zero()},
      {"solver finds real roots only on the delta1 = eta = F = 0 sub-branch"});
  add(FamilyId::M1IX, "M1-IX", ModelId::Mix, SK::ConstPlusDn, SK::ConstPlusCn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {g_zero()});
  add(FamilyId::M1X, "M1-X", ModelId::Mix, SK::SechRational, SK::SechRational,
      {Sym::A, Sym::B, Sym::D, Sym::H}, 6, {m_one()});

  // Asymmetric-symmetric model, order 2.
  add(FamilyId::M2I, "M2-I", ModelId::Mix, SK::ConstPlusSn2, SK::ConstPlusSn2,
      {Sym::A, Sym::B, Sym::D, Sym::F, Sym::G}, 8, {},
      {"no solution exists with G = 0 (any F)"});
  add(FamilyId::M2II, "M2-II", ModelId::Mix, SK::ConstPlusSn2, SK::SnCn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7, {},
      {"no solution with F = 0; A = -F and A = -m F only at m = 1",
       "the swapped form (sn*cn first field) does not exist while delta1, eta != 0"});
  add(FamilyId::M2III, "M2-III", ModelId::Mix, SK::ConstPlusSn2, SK::SnDn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7);
  add(FamilyId::M2IV, "M2-IV", ModelId::Mix, SK::ConstPlusSn2, SK::CnDn,
      {Sym::A, Sym::B, Sym::D, Sym::F}, 7);
  return v;
}

}  // namespace

const std::vector<FamilyDescriptor>& catalog() {
  static const std::vector<FamilyDescriptor> c = build_catalog();
  return c;
}

const FamilyDescriptor& descriptor(FamilyId id) {
  const auto& c = catalog();
  auto idx = static_cast<std::size_t>(id);
  if (idx >= c.size()) throw UnknownFamily("descriptor: bad family id");
  return c[idx];
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& d : catalog())
    if (d.name == name) return d.id;
  return std::nullopt;
}

std::string_view family_name(FamilyId id) { return descriptor(id).name; }

std::vector<Sym> referenced_symbols(FamilyId id) {
  const auto& d = descriptor(id);
  std::vector<Sym> out(d.unknowns);
  out.push_back(Sym::M);
  for (Sym s : models::param_symbols(d.model)) out.push_back(s);
  return out;
}

namespace {

struct ShapeEval {
  double value;
  double second;  // d^2/dx^2
};

ShapeEval eval_shape(ShapeKind kind, double amp, double off, double H, double D,
                     double u, const elliptic::JacobiTriple& t, double m) {
  const double D2 = D * D;
  const double s = t.sn, c = t.cn, d = t.dn;
  switch (kind) {
    case ShapeKind::ConstPlusSn2:
      return {off + amp * s * s,
              amp * D2 * (2.0 - 4.0 * (1.0 + m) * s * s + 6.0 * m * s * s * s * s)};
    case ShapeKind::SnCn:
      return {amp * s * c, amp * D2 * (-(4.0 + m) + 6.0 * m * s * s) * s * c};
    case ShapeKind::SnDn:
      return {amp * s * d, amp * D2 * (-(1.0 + 4.0 * m) + 6.0 * m * s * s) * s * d};
    case ShapeKind::CnDn:
      return {amp * c * d, amp * D2 * (-(1.0 + m) + 6.0 * m * s * s) * c * d};
    case ShapeKind::ConstPlusSn:
      return {off + amp * s, amp * D2 * (-(1.0 + m) + 2.0 * m * s * s) * s};
    case ShapeKind::ConstPlusCn:
      return {off + amp * c, amp * D2 * (2.0 * m * s * s - 1.0) * c};
    case ShapeKind::ConstPlusDn:
      return {off + amp * d, amp * D2 * m * (2.0 * s * s - 1.0) * d};
    case ShapeKind::SechRational: {
      const double S = 1.0 / std::cosh(u);
      const double den = 1.0 + H * S;
      return {amp * S / den,
              amp * D2 * S * (1.0 - H * S - 2.0 * S * S) / (den * den * den)};
    }
  }
  return {0.0, 0.0};
}

std::pair<ShapeEval, ShapeEval> eval_both(FamilyId id, const Coefficients& c, double x) {
  const auto& d = descriptor(id);
  if (d.shape_phi == ShapeKind::SechRational || d.shape_psi == ShapeKind::SechRational) {
    if (c.m != 1.0)
      throw DomainError("evaluate_profile: sech-rational shapes are defined at m = 1 only");
    if (!(c.H > -1.0))
      throw DomainError("evaluate_profile: sech-rational denominator needs H > -1");
  }
  if (!(c.m >= 0.0) || !(c.m <= 1.0))
    throw DomainError("evaluate_profile: m must lie in [0,1]");
  const double u = c.D * (x + c.x0);
  const auto t = elliptic::jacobi(u, c.m);
  ShapeEval phi = eval_shape(d.shape_phi, c.A, c.F, c.H, c.D, u, t, c.m);
  ShapeEval psi = eval_shape(d.shape_psi, c.B, c.G, c.H, c.D, u, t, c.m);
  return {phi, psi};
}

}  // namespace

std::pair<double, double> evaluate_profile(FamilyId id, const Coefficients& c, double x) {
  auto [phi, psi] = eval_both(id, c, x);
  return {phi.value, psi.value};
}

std::pair<double, double> analytic_second_derivative(FamilyId id, const Coefficients& c,
                                                     double x) {
  auto [phi, psi] = eval_both(id, c, x);
  return {phi.second, psi.second};
}

}  // namespace phi4::families
