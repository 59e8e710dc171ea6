#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pellucas {

/// The four weight-2k functional equations:
///   Inversion   Q(-1/z)  = z^{2k}  Q(z)
///   Reflection  Q(2 - z) =         Q(z)
///   Shift       Q(z + 2) = z^{-2k} Q(1/z)
///   Negation    Q(-z)    = z^{-2k} Q(1/z)
enum class Equation { Inversion, Reflection, Shift, Negation };

inline constexpr std::array<Equation, 4> kAllEquations{
    Equation::Inversion, Equation::Reflection, Equation::Shift,
    Equation::Negation};

std::string_view to_string(Equation eq) noexcept;
std::optional<Equation> parse_equation(std::string_view name) noexcept;

/// Integer Mobius map z -> (a z + b) / (c z + d).
struct IntegerMobius {
  int a, b, c, d;
};

/// Each equation reads  sum_j T_j(lhs(z)) = z^p sum_j T_j(rhs(z))  with
/// T_j(w) = (Q_j w + Q_{j-1})^{-2k} and p = prefactor_sign * 2k. Termwise,
/// T_j(lhs(z)) = z^p T_{s j + t}(rhs(z)) with (s, t) = (reindex_scale,
/// reindex_offset).
struct EquationShape {
  IntegerMobius lhs;
  IntegerMobius rhs;
  int prefactor_sign;
  int reindex_scale;
  int reindex_offset;
  bool rhs_needs_nonzero;
};

constexpr EquationShape shape(Equation eq) noexcept {
  switch (eq) {
    case Equation::Inversion: return {{0, -1, 1, 0}, {1, 0, 0, 1}, +1, -1, 1, false};
    case Equation::Reflection: return {{-1, 2, 0, 1}, {1, 0, 0, 1}, 0, -1, 0, false};
    case Equation::Shift: return {{1, 2, 0, 1}, {0, 1, 1, 0}, -1, 1, 1, true};
    case Equation::Negation: return {{-1, 0, 0, 1}, {0, 1, 1, 0}, -1, -1, 1, true};
  }
  return {{1, 0, 0, 1}, {1, 0, 0, 1}, 0, 1, 0, false};
}

}  // namespace pellucas
