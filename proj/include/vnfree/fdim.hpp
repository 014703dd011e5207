#pragma once

#include "vnfree/algebra.hpp"

namespace vnfree {

using FdimValue = ExtParam;

// Free dimension of an algebra in the closed class:
//   fdim(A) = 1 + sum_i w_i^2 (d_i - 1)
// with summand density d = 1 - 1/n^2 for M_n, d = s for L(F_s), d = 1 for the
// diffuse kinds. Infinite as soon as an L(F_inf) summand is present.
FdimValue fdim(const Algebra& a);

// Largest weight/n^2 over matrix summands; 0 if the algebra is diffuse.
Rational lumpiness(const Algebra& a);

// Whether the free product of two algebras is a factor: true iff
// lumpiness(a) + lumpiness(b) <= 1. Requires dim >= 2 on each side and
// dim(a) + dim(b) >= 5; otherwise HypothesisViolation.
bool product_is_factor(const Algebra& a, const Algebra& b);

}  // namespace vnfree
