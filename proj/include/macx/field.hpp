#pragma once

#include <string>

#include "macx/errors.hpp"

namespace macx {

/// Coefficient field for cohomology computations. GF2 and the rationals
/// distinguish characteristic 2 from characteristic 0, which is the only
/// field dependence this library exercises.
enum class FieldTag { GF2, Rational };

inline std::string to_string(FieldTag f) {
  return f == FieldTag::GF2 ? "GF2" : "Rational";
}

inline FieldTag field_from_string(const std::string& s) {
  if (s == "GF2" || s == "gf2") return FieldTag::GF2;
  if (s == "Rational" || s == "rational" || s == "Q" || s == "q")
    return FieldTag::Rational;
  throw InputError("unknown field '" + s + "' (expected gf2 or rational)");
}

}  // namespace macx
