#include "phi4/models.hpp"

#include <array>
#include <cmath>
#include <string>

#include "phi4/errors.hpp"

namespace phi4::models {

std::string_view model_name(ModelId id) {
  switch (id) {
    case ModelId::Sym: return "SYM";
    case ModelId::Asym: return "ASYM";
    case ModelId::Mix: return "MIX";
  }
  return "?";
}

std::optional<ModelId> model_from_name(std::string_view name) {
  if (name == "SYM") return ModelId::Sym;
  if (name == "ASYM") return ModelId::Asym;
  if (name == "MIX") return ModelId::Mix;
  return std::nullopt;
}

ModelId model_of(const Params& p) {
  if (std::holds_alternative<SymParams>(p)) return ModelId::Sym;
  if (std::holds_alternative<AsymParams>(p)) return ModelId::Asym;
  return ModelId::Mix;
}

namespace {
void require_model(ModelId model, const Params& p, const char* where) {
  if (model_of(p) != model)
    throw ParamModelMismatch(std::string(where) + ": parameter struct is for model " +
                             std::string(model_name(model_of(p))));
}
}  // namespace

double potential_value(ModelId model, const Params& p, double phi, double psi) {
  require_model(model, p, "potential_value");
  const double p2 = phi * phi, q2 = psi * psi;
  switch (model) {
    case ModelId::Sym: {
      const auto& s = std::get<SymParams>(p);
      return s.alpha1 * p2 + s.beta1 * p2 * p2 + s.alpha2 * q2 + s.beta2 * q2 * q2 +
             s.gamma * p2 * q2 -
             s.Hz * (s.rho1 * phi + s.rho2 * phi * p2 + s.rho3 * phi * q2);
    }
    case ModelId::Asym: {
      const auto& a = std::get<AsymParams>(p);
      return a.alpha1 * p2 + a.delta1 * phi * p2 + a.beta1 * p2 * p2 + a.alpha2 * q2 +
             a.delta2 * psi * q2 + a.beta2 * q2 * q2 + a.gamma * p2 * q2 +
             a.eta * phi * q2;
    }
    case ModelId::Mix: {
      const auto& x = std::get<MixParams>(p);
      return x.alpha1 * p2 - x.delta1 * phi * p2 + x.beta1 * p2 * p2 +
             x.eta * phi * q2 + x.gamma * p2 * q2 + x.alpha2 * q2 + x.beta2 * q2 * q2;
    }
  }
  return 0.0;
}

std::pair<double, double> field_rhs(ModelId model, const Params& p, double phi,
                                    double psi) {
  require_model(model, p, "field_rhs");
  const double p2 = phi * phi, q2 = psi * psi;
  switch (model) {
    case ModelId::Sym: {
      const auto& s = std::get<SymParams>(p);
      double rf = 2.0 * s.alpha1 * phi + 4.0 * s.beta1 * phi * p2 +
                  2.0 * s.gamma * phi * q2 -
                  s.Hz * (s.rho1 + 3.0 * s.rho2 * p2 + s.rho3 * q2);
      double rp = 2.0 * s.alpha2 * psi + 4.0 * s.beta2 * psi * q2 +
                  2.0 * s.gamma * p2 * psi - 2.0 * s.Hz * s.rho3 * phi * psi;
      return {rf, rp};
    }
    case ModelId::Asym: {
      const auto& a = std::get<AsymParams>(p);
      double rf = 2.0 * a.alpha1 * phi + 3.0 * a.delta1 * p2 + 4.0 * a.beta1 * phi * p2 +
                  2.0 * a.gamma * phi * q2 + a.eta * q2;
      double rp = 2.0 * a.alpha2 * psi + 3.0 * a.delta2 * q2 + 4.0 * a.beta2 * psi * q2 +
                  2.0 * a.gamma * p2 * psi + 2.0 * a.eta * phi * psi;
      return {rf, rp};
    }
    case ModelId::Mix: {
      const auto& x = std::get<MixParams>(p);
      double rf = 2.0 * x.alpha1 * phi - 3.0 * x.delta1 * p2 + 4.0 * x.beta1 * phi * p2 +
                  x.eta * q2 + 2.0 * x.gamma * phi * q2;
      double rp = 2.0 * x.alpha2 * psi + 4.0 * x.beta2 * psi * q2 +
                  2.0 * x.eta * phi * psi + 2.0 * x.gamma * p2 * psi;
      return {rf, rp};
    }
  }
  return {0.0, 0.0};
}

PhasePortrait classify_uncoupled_phi_phase(const MixParams& p) {
  if (!(p.alpha1 > 0.0) || !(p.beta1 > 0.0))
    throw DomainError("classify_uncoupled_phi_phase: requires alpha1 > 0 and beta1 > 0");
  const double d2 = p.delta1 * p.delta1;
  const double crit1 = (32.0 / 9.0) * p.alpha1 * p.beta1;
  const double crit2 = 4.0 * p.alpha1 * p.beta1;
  PhasePortrait out{PhaseRegime::SingleMinimum, std::nullopt};
  if (d2 < crit1) return out;
  const double disc = 9.0 * d2 - 32.0 * p.alpha1 * p.beta1;
  if (disc >= 0.0) {
    double root = (3.0 * p.delta1 + std::sqrt(disc)) / (8.0 * p.beta1);
    if (root > 0.0) out.phi_c = root;
  }
  if (std::abs(d2 - crit2) <= 1e-12 * std::max(d2, crit2)) {
    out.regime = PhaseRegime::Degenerate;
  } else if (d2 < crit2) {
    out.regime = PhaseRegime::ZeroGlobalLocalAtPhiC;
  } else {
    out.regime = PhaseRegime::PhiCGlobal;
  }
  return out;
}

namespace {
constexpr std::array<Sym, 9> kSymSyms = {Sym::Alpha1, Sym::Alpha2, Sym::Beta1,
                                         Sym::Beta2,  Sym::Gamma,  Sym::Hz,
                                         Sym::Rho1,   Sym::Rho2,   Sym::Rho3};
constexpr std::array<Sym, 8> kAsymSyms = {Sym::Alpha1, Sym::Alpha2, Sym::Delta1,
                                          Sym::Delta2, Sym::Beta1,  Sym::Beta2,
                                          Sym::Gamma,  Sym::Eta};
constexpr std::array<Sym, 7> kMixSyms = {Sym::Alpha1, Sym::Alpha2, Sym::Delta1,
                                         Sym::Beta1,  Sym::Beta2,  Sym::Gamma,
                                         Sym::Eta};

double* field_ptr(Params& p, Sym s) {
  if (auto* sp = std::get_if<SymParams>(&p)) {
    switch (s) {
      case Sym::Alpha1: return &sp->alpha1;
      case Sym::Alpha2: return &sp->alpha2;
      case Sym::Beta1: return &sp->beta1;
      case Sym::Beta2: return &sp->beta2;
      case Sym::Gamma: return &sp->gamma;
      case Sym::Hz: return &sp->Hz;
      case Sym::Rho1: return &sp->rho1;
      case Sym::Rho2: return &sp->rho2;
      case Sym::Rho3: return &sp->rho3;
      default: return nullptr;
    }
  }
  if (auto* ap = std::get_if<AsymParams>(&p)) {
    switch (s) {
      case Sym::Alpha1: return &ap->alpha1;
      case Sym::Alpha2: return &ap->alpha2;
      case Sym::Delta1: return &ap->delta1;
      case Sym::Delta2: return &ap->delta2;
      case Sym::Beta1: return &ap->beta1;
      case Sym::Beta2: return &ap->beta2;
      case Sym::Gamma: return &ap->gamma;
      case Sym::Eta: return &ap->eta;
      default: return nullptr;
    }
  }
  auto* mp = std::get_if<MixParams>(&p);
  switch (s) {
    case Sym::Alpha1: return &mp->alpha1;
    case Sym::Alpha2: return &mp->alpha2;
    case Sym::Delta1: return &mp->delta1;
    case Sym::Beta1: return &mp->beta1;
    case Sym::Beta2: return &mp->beta2;
    case Sym::Gamma: return &mp->gamma;
    case Sym::Eta: return &mp->eta;
    default: return nullptr;
  }
}
}  // namespace

std::span<const Sym> param_symbols(ModelId model) {
  switch (model) {
    case ModelId::Sym: return kSymSyms;
    case ModelId::Asym: return kAsymSyms;
    case ModelId::Mix: return kMixSyms;
  }
  return {};
}

double get_param(const Params& p, Sym s) {
  Params& mut = const_cast<Params&>(p);
  double* f = field_ptr(mut, s);
  if (!f) throw ParamModelMismatch("get_param: symbol " + std::string(sym_name(s)) +
                                   " is not a parameter of this model");
  return *f;
}

void set_param(Params& p, Sym s, double value) {
  double* f = field_ptr(p, s);
  if (!f) throw ParamModelMismatch("set_param: symbol " + std::string(sym_name(s)) +
                                   " is not a parameter of this model");
  *f = value;
}

Params zero_params(ModelId model) {
  switch (model) {
    case ModelId::Sym: return SymParams{0, 0, 0, 0, 0, 0, 0, 0, 0};
    case ModelId::Asym: return AsymParams{0, 0, 0, 0, 0, 0, 0, 0};
    case ModelId::Mix: return MixParams{0, 0, 0, 0, 0, 0, 0};
  }
  return MixParams{};
}

Params params_from_assignment(ModelId model, const Assignment& a) {
  Params p = zero_params(model);
  for (Sym s : param_symbols(model)) set_param(p, s, a[sym_index(s)]);
  return p;
}

}  // namespace phi4::models
