#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace phi4 {

// Every scalar quantity a constraint system can reference: profile
// coefficients first, then the union of the three models' parameters.
enum class Sym : std::uint8_t {
  A, B, D, F, G, H, M,
  Alpha1, Alpha2, Beta1, Beta2, Gamma, Delta1, Delta2, Eta,
  Hz, Rho1, Rho2, Rho3,
  kCount
};

inline constexpr std::size_t kSymCount = static_cast<std::size_t>(Sym::kCount);

// Numeric values for all symbols, indexed by Sym.
using Assignment = std::array<double, kSymCount>;

constexpr std::size_t sym_index(Sym s) { return static_cast<std::size_t>(s); }

constexpr std::string_view sym_name(Sym s) {
  constexpr std::string_view names[kSymCount] = {
      "A", "B", "D", "F", "G", "H", "m",
      "alpha1", "alpha2", "beta1", "beta2", "gamma", "delta1", "delta2", "eta",
      "Hz", "rho1", "rho2", "rho3"};
  return names[sym_index(s)];
}

inline std::optional<Sym> sym_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSymCount; ++i) {
    Sym s = static_cast<Sym>(i);
    if (sym_name(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace phi4
