#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "phi4/symbols.hpp"

namespace phi4::models {

enum class ModelId { Sym, Asym, Mix };

std::string_view model_name(ModelId id);
std::optional<ModelId> model_from_name(std::string_view name);

// Coupled symmetric double-well pair in an external field Hz:
// V = a1 p^2 + b1 p^4 + a2 q^2 + b2 q^4 + g p^2 q^2
//     - Hz (r1 p + r2 p^3 + r3 p q^2).
struct SymParams {
  double alpha1, alpha2, beta1, beta2, gamma, Hz, rho1, rho2, rho3;
};

// Coupled asymmetric pair (cubic terms in both fields):
// V = a1 p^2 + d1 p^3 + b1 p^4 + a2 q^2 + d2 q^3 + b2 q^4
//     + g p^2 q^2 + eta p q^2.
struct AsymParams {
  double alpha1, alpha2, delta1, delta2, beta1, beta2, gamma, eta;
};

// Asymmetric-symmetric pair (cubic in the first field only, with the
// opposite cubic sign convention):
// V = a1 p^2 - d1 p^3 + b1 p^4 + eta p q^2 + g p^2 q^2 + a2 q^2 + b2 q^4.
struct MixParams {
  double alpha1, alpha2, delta1, beta1, beta2, gamma, eta;
};

using Params = std::variant<SymParams, AsymParams, MixParams>;

ModelId model_of(const Params& p);

// V(phi, psi); exact polynomial evaluation.  Throws ParamModelMismatch if
// the variant does not match `model`.
double potential_value(ModelId model, const Params& p, double phi, double psi);

// (dV/dphi, dV/dpsi), transcribed term by term from the static equations of
// motion (phi_xx = dV/dphi).  Gradient consistency with potential_value is
// enforced by tests rather than re-derivation.
std::pair<double, double> field_rhs(ModelId model, const Params& p, double phi,
                                    double psi);

enum class PhaseRegime { SingleMinimum, ZeroGlobalLocalAtPhiC, Degenerate, PhiCGlobal };

struct PhasePortrait {
  PhaseRegime regime;
  std::optional<double> phi_c;  // larger root of 4 b1 x^2 - 3 d1 x + 2 a1 = 0
};

// Minimum topology of the uncoupled first-field potential
// a1 p^2 - d1 p^3 + b1 p^4 (reads only alpha1, delta1, beta1; requires both
// positive).  Degeneracy test uses relative tolerance 1e-12 on
// delta1^2 vs 4 alpha1 beta1.
PhasePortrait classify_uncoupled_phi_phase(const MixParams& p);

// Symbol-indexed access used by the solver and serializers.
std::span<const Sym> param_symbols(ModelId model);
double get_param(const Params& p, Sym s);
void set_param(Params& p, Sym s, double value);
Params params_from_assignment(ModelId model, const Assignment& a);
Params zero_params(ModelId model);

}  // namespace phi4::models
