#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnfree/algebra.hpp"

namespace vnfree {

// Which rule justified a free-product computation. Labels are the audit
// identifiers emitted in reports and JSON output.
enum class Rule {
  Trivial,            // one input is the scalars
  TwoProjections,     // both inputs two-atom abelian ("Thm1.1")
  FinDimAbelian,      // both finite dimensional abelian ("Thm2.3")
  FinDim,             // both finite dimensional ("Thm3.6")
  FgfWithScalars,     // L(F_r)-plus-scalars on both sides ("Prop2.4")
  TimesMatrixFactor,  // L(F_r)-plus-matrices times a full matrix factor ("Prop3.5")
  Hyperfinite,        // both hyperfinite, no free group summands ("Thm4.6")
  Extrapolated,       // unified formula applied beyond the proven rules
};

std::string_view rule_label(Rule r);

struct Justification {
  Rule rule;
  std::string note;
};

// Which input summand pair produced an output atom. Indices refer to the
// canonical summand order of the two inputs; size is max(n_i, m_j).
struct AtomProvenance {
  int left_index = -1;
  int right_index = -1;
  int size = 1;
};

struct OutputAtom {
  Rational weight;
  AtomProvenance source;
  int position = -1;  // index into algebra.summands()
};

struct FreeProductResult {
  Algebra algebra;
  // Parameter s of the output L(F_s) part; absent for the trivial and
  // two-projections branches.
  std::optional<ExtParam> factor_param;
  std::vector<OutputAtom> atoms;
  Justification justification;
  // One entry per engine step; a single product has a singleton trace, folds
  // accumulate one entry per application.
  std::vector<Justification> trace;
};

// Free product of two algebras in the closed class. With strict = true,
// input combinations outside the proven rules raise ExtrapolationRejected
// instead of being computed by the unified formula.
FreeProductResult free_product(const Algebra& a, const Algebra& b,
                               bool strict = false);

// Left fold of free_product over at least two algebras.
FreeProductResult free_product_fold(const std::vector<Algebra>& items,
                                    bool strict = false);

// Solves the free group parameter s so that L(F_s) with weight gamma plus the
// given atoms (weight, matrix size pairs) has free dimension equal to target.
// Infinite target gives s = inf. Throws InternalInvariantViolation if the
// solved parameter is <= 1.
ExtParam solve_factor_param(const ExtParam& target, const Rational& gamma,
                            const std::vector<std::pair<Rational, AtomProvenance>>& atoms);

}  // namespace vnfree
