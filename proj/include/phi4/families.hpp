#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phi4/models.hpp"
#include "phi4/symbols.hpp"

namespace phi4::families {

enum class FamilyId {
  SI, SII, SIII, SIV, SV, SVI,
  AI,
  M1I, M1II, M1III, M1IV, M1V, M1VI, M1VII, M1VIII, M1IX, M1X,
  M2I, M2II, M2III, M2IV,
  kCount
};

inline constexpr std::size_t kFamilyCount = static_cast<std::size_t>(FamilyId::kCount);

enum class ShapeKind {
  ConstPlusSn2,  // off + amp*sn^2
  SnCn,          // amp*sn*cn (no offset slot)
  SnDn,          // amp*sn*dn
  CnDn,          // amp*cn*dn
  ConstPlusSn,   // off + amp*sn
  ConstPlusCn,   // off + amp*cn
  ConstPlusDn,   // off + amp*dn
  SechRational,  // amp*sech / (1 + H*sech), m = 1 only
};

bool shape_has_offset(ShapeKind k);
bool shape_odd_under_reflection(ShapeKind k);  // flips sign under u -> -u

// Profile coefficients.  A/F belong to the first field, B/G to the second,
// H to the sech-rational denominator (shared by both fields), x0 is the
// translation and m the elliptic parameter.
struct Coefficients {
  double A = 0.0;
  double B = 0.0;
  double D = 1.0;
  double F = 0.0;
  double G = 0.0;
  double H = 0.0;
  double x0 = 0.0;
  double m = 0.0;
};

double get_coeff(const Coefficients& c, Sym s);
void set_coeff(Coefficients& c, Sym s, double value);
Coefficients coeffs_from_assignment(const Assignment& a);

// Machine-checkable applicability conditions attached to a family.
struct Applicability {
  enum class Kind {
    ParamZero,        // the named parameter must be zero (enforced in systems)
    CoeffZero,        // the named coefficient must be zero (enforced in systems)
    UnitModulusOnly,  // family defined only at m = 1
    Note,             // recorded caveat, not enforced
  };
  Kind kind;
  Sym target;
  std::string text;
};

struct FamilyDescriptor {
  FamilyId id;
  std::string name;  // "S-I", ..., "M2-IV"
  models::ModelId model;
  ShapeKind shape_phi;
  ShapeKind shape_psi;
  std::vector<Sym> unknowns;  // profile unknowns in canonical order
  int equation_count;
  std::vector<Applicability> applicability;
  std::vector<std::string> branch_conditions;  // branch-specific, data only
  std::string system_reference;  // stable internal label for the system
};

const std::vector<FamilyDescriptor>& catalog();
const FamilyDescriptor& descriptor(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
std::string_view family_name(FamilyId id);

// Symbols a family's constraint system may reference:
// model parameters + profile unknowns + m.  (x0 never appears.)
std::vector<Sym> referenced_symbols(FamilyId id);

// (phi, psi) at x.  SechRational demands m = 1 and H > -1.
std::pair<double, double> evaluate_profile(FamilyId id, const Coefficients& c, double x);

// Closed-form second derivatives of the profile shapes.
std::pair<double, double> analytic_second_derivative(FamilyId id, const Coefficients& c,
                                                     double x);

}  // namespace phi4::families
