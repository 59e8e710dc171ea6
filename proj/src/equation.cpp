#include "pellucas/equation.hpp"

namespace pellucas {

std::string_view to_string(Equation eq) noexcept {
  switch (eq) {
    case Equation::Inversion: return "inversion";
    case Equation::Reflection: return "reflection";
    case Equation::Shift: return "shift";
    case Equation::Negation: return "negation";
  }
  return "unknown";
}

std::optional<Equation> parse_equation(std::string_view name) noexcept {
  for (Equation eq : kAllEquations)
    if (to_string(eq) == name) return eq;
  return std::nullopt;
}

}  // namespace pellucas
