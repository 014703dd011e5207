#include "vnfree/free_product.hpp"

#include <algorithm>

#include "vnfree/fdim.hpp"

namespace vnfree {

std::string_view rule_label(Rule r) {
  switch (r) {
    case Rule::Trivial: return "Trivial";
    case Rule::TwoProjections: return "Thm1.1";
    case Rule::FinDimAbelian: return "Thm2.3";
    case Rule::FinDim: return "Thm3.6";
    case Rule::FgfWithScalars: return "Prop2.4";
    case Rule::TimesMatrixFactor: return "Prop3.5";
    case Rule::Hyperfinite: return "Thm4.6";
    case Rule::Extrapolated: return "Extrapolated";
  }
  throw InternalInvariantViolation("unknown rule");
}

namespace {

// An L(F_r) slot with r >= 1: either a genuine free group summand or the
// diffuse abelian summand, which plays the role of the r = 1 case.
bool is_fgf_slot(const Summand& s) {
  return s.is_free_group() ||
         (s.kind() == Summand::Kind::DiffuseAbelianMatrix && s.size() == 1);
}

bool all_scalars(const Algebra& a) {
  return std::all_of(a.summands().begin(), a.summands().end(),
                     [](const auto& e) { return e.summand.is_scalar(); });
}

bool all_matrices(const Algebra& a) {
  return std::all_of(a.summands().begin(), a.summands().end(),
                     [](const auto& e) { return e.summand.is_matrix(); });
}

// At most one L(F_r) slot, everything else of the given shape.
bool fgf_plus(const Algebra& a, bool (*rest)(const Summand&)) {
  int slots = 0;
  for (const auto& e : a.summands()) {
    if (is_fgf_slot(e.summand)) {
      if (++slots > 1) return false;
    } else if (!rest(e.summand)) {
      return false;
    }
  }
  return true;
}

bool fgf_plus_scalars(const Algebra& a) {
  return fgf_plus(a, [](const Summand& s) { return s.is_scalar(); });
}

bool fgf_plus_matrices(const Algebra& a) {
  return fgf_plus(a, [](const Summand& s) { return s.is_matrix(); });
}

bool single_full_matrix(const Algebra& a) {
  return a.summands().size() == 1 && a.summands()[0].summand.is_matrix() &&
         a.summands()[0].summand.size() >= 2;
}

Rule classify(const Algebra& a, const Algebra& b) {
  if (all_scalars(a) && all_scalars(b)) return Rule::FinDimAbelian;
  if (all_matrices(a) && all_matrices(b)) return Rule::FinDim;
  if (fgf_plus_scalars(a) && fgf_plus_scalars(b)) return Rule::FgfWithScalars;
  if ((fgf_plus_matrices(a) && single_full_matrix(b)) ||
      (fgf_plus_matrices(b) && single_full_matrix(a)))
    return Rule::TimesMatrixFactor;
  if (!a.has_free_group_summand() && !b.has_free_group_summand())
    return Rule::Hyperfinite;
  return Rule::Extrapolated;
}

std::string_view rule_note(Rule r) {
  switch (r) {
    case Rule::Trivial: return "free product with the scalars";
    case Rule::TwoProjections: return "two-atom abelian pair";
    case Rule::FinDimAbelian: return "both sides finite dimensional abelian";
    case Rule::FinDim: return "both sides finite dimensional";
    case Rule::FgfWithScalars: return "free group slot plus scalar atoms on each side";
    case Rule::TimesMatrixFactor: return "one side a full-weight matrix factor";
    case Rule::Hyperfinite: return "both sides hyperfinite";
    case Rule::Extrapolated: return "outside the proven rules; unified formula applied";
  }
  return "";
}

FreeProductResult assemble(std::vector<std::pair<Rational, AtomProvenance>> atoms,
                           Algebra::Entry bulk, std::optional<ExtParam> factor_param,
                           Rule rule) {
  std::vector<Algebra::Entry> entries;
  entries.reserve(atoms.size() + 1);
  for (const auto& [w, src] : atoms)
    entries.push_back({w, Summand::matrix(src.size)});
  entries.push_back(std::move(bulk));

  std::vector<int> positions;
  Algebra out = Algebra::make(std::move(entries), positions);

  FreeProductResult result{std::move(out), std::move(factor_param), {},
                           Justification{rule, std::string(rule_note(rule))}, {}};
  for (std::size_t k = 0; k < atoms.size(); ++k)
    result.atoms.push_back({atoms[k].first, atoms[k].second, positions[k]});
  result.trace.push_back(result.justification);
  return result;
}

// Both inputs two-atom abelian: atoms come from the four summand pairs with
// weight max(a_i + b_j - 1, 0), the rest is the diffuse block tensor M_2.
FreeProductResult two_projections(const Algebra& a, const Algebra& b) {
  std::vector<std::pair<Rational, AtomProvenance>> atoms;
  Rational atom_total(0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Rational g =
          a.summands()[i].weight + b.summands()[j].weight - Rational(1);
      if (g.is_positive()) {
        atoms.push_back({g, AtomProvenance{i, j, 1}});
        atom_total += g;
      }
    }
  }
  const Rational diffuse = Rational(1) - atom_total;
  if (!diffuse.is_positive())
    throw InternalInvariantViolation("two-projections diffuse part vanished");
  return assemble(std::move(atoms),
                  {diffuse, Summand::diffuse_abelian_matrix(2)}, std::nullopt,
                  Rule::TwoProjections);
}

FreeProductResult general(const Algebra& a, const Algebra& b, bool strict) {
  if (dim(a) + dim(b) < ExtParam(Rational(5)))
    throw InternalInvariantViolation(
        "general rule reached with total dimension < 5");

  const Rule rule = classify(a, b);
  if (strict && rule == Rule::Extrapolated)
    throw ExtrapolationRejected(
        "strict mode: no proven rule covers this input combination");

  std::vector<std::pair<Rational, AtomProvenance>> atoms;
  Rational atom_total(0);
  const auto& sa = a.summands();
  const auto& sb = b.summands();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (!sa[i].summand.is_matrix()) continue;
    const int n = sa[i].summand.size();
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (!sb[j].summand.is_matrix()) continue;
      const int m = sb[j].summand.size();
      const Rational excess = sa[i].weight / Rational(long(n) * n) +
                              sb[j].weight / Rational(long(m) * m) - Rational(1);
      if (!excess.is_positive()) continue;
      if (n != 1 && m != 1)
        throw InternalInvariantViolation("atom from two non-scalar summands");
      const int size = std::max(n, m);
      const Rational w = Rational(long(size) * size) * excess;
      atoms.push_back({w, AtomProvenance{int(i), int(j), size}});
      atom_total += w;
    }
  }

  const Rational gamma = Rational(1) - atom_total;
  if (!gamma.is_positive())
    throw InternalInvariantViolation("atoms exhausted the trace");

  const ExtParam s = solve_factor_param(fdim(a) + fdim(b), gamma, atoms);
  return assemble(std::move(atoms), {gamma, Summand::free_group(s)}, s, rule);
}

}  // namespace

ExtParam solve_factor_param(
    const ExtParam& target, const Rational& gamma,
    const std::vector<std::pair<Rational, AtomProvenance>>& atoms) {
  if (!gamma.is_positive())
    throw InternalInvariantViolation("factor weight must be positive");
  if (target.is_infinite()) return ExtParam::infinity();

  // fdim of the assembled output is 1 + gamma^2 (s - 1) - sum w^2/N^2.
  Rational atom_sq(0);
  for (const auto& [w, src] : atoms)
    atom_sq += (w * w) / Rational(long(src.size) * src.size);
  const Rational s =
      Rational(1) + (target.finite() - Rational(1) + atom_sq) / (gamma * gamma);
  if (s <= Rational(1))
    throw InternalInvariantViolation("solved free group parameter is " +
                                     s.str() + " <= 1");
  return ExtParam(s);
}

FreeProductResult free_product(const Algebra& a, const Algebra& b, bool strict) {
  if (a.is_scalar() || b.is_scalar()) {
    const Algebra& other = a.is_scalar() ? b : a;
    FreeProductResult result{other, std::nullopt, {},
                             Justification{Rule::Trivial,
                                           std::string(rule_note(Rule::Trivial))},
                             {}};
    result.trace.push_back(result.justification);
    return result;
  }
  if (a.is_two_atom_abelian() && b.is_two_atom_abelian())
    return two_projections(a, b);
  return general(a, b, strict);
}

FreeProductResult free_product_fold(const std::vector<Algebra>& items,
                                    bool strict) {
  if (items.size() < 2)
    throw RangeError("fold requires at least two algebras");
  FreeProductResult acc = free_product(items[0], items[1], strict);
  for (std::size_t k = 2; k < items.size(); ++k) {
    std::vector<Justification> trace = std::move(acc.trace);
    acc = free_product(acc.algebra, items[k], strict);
    trace.push_back(acc.justification);
    acc.trace = std::move(trace);
  }
  return acc;
}

}  // namespace vnfree
