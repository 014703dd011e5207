#pragma once

#include <string_view>

#include "vnfree/expr.hpp"

namespace testutil {

using namespace vnfree;

inline Rational Q(long p, long q = 1) { return Rational(p, q); }

// Evaluates a DSL expression that must yield an algebra.
inline Algebra alg(std::string_view dsl) {
  const EvalResult r = evaluate(*parse(dsl));
  REQUIRE(r.value.is_algebra());
  return r.value.algebra();
}

inline Algebra lf(const ExtParam& s) {
  return Algebra::make({{Rational(1), Summand::free_group(s)}});
}

}  // namespace testutil
