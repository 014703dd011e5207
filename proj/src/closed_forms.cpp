#include "vnfree/closed_forms.hpp"

#include <algorithm>

namespace vnfree::closed_forms {
namespace {

const Rational kOne(1);

// Accumulates a possibly-infinite sum of rational terms and param * coeff
// products, where a zero coefficient suppresses the term entirely.
struct ParamSum {
  bool infinite = false;
  Rational value{0};

  void add(const Rational& x) { value += x; }
  void add_scaled(const ExtParam& p, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (p.is_infinite())
      infinite = true;
    else
      value += p.finite() * coeff;
  }
  ExtParam get() const {
    return infinite ? ExtParam::infinity() : ExtParam(value);
  }
};

Rational cross_terms(const std::vector<Rational>& w) {
  Rational acc(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j) acc += w[i] * w[j];
  return acc;
}

void require(bool ok, const char* message) {
  if (!ok) throw RangeError(message);
}

Rational inv_sq(int n) { return kOne / Rational(long(n) * n); }

}  // namespace

ExtParam fgf_add(const ExtParam& r, const ExtParam& rp) {
  require(r > ExtParam(kOne) && rp > ExtParam(kOne),
          "addition law requires parameters > 1");
  return r + rp;
}

ExtParam fgf_compress(const ExtParam& r, const Rational& gamma) {
  require(r >= ExtParam(kOne), "compression requires parameter >= 1");
  require(gamma.is_positive(), "compression requires gamma > 0");
  if (r.is_infinite()) return ExtParam::infinity();
  return ExtParam(kOne + (r.finite() - kOne) / (gamma * gamma));
}

Algebra fgf_pair_product(const ExtParam& r, const ExtParam& s,
                         const Rational& gamma, const Rational& delta) {
  require(r >= ExtParam(kOne) && s >= ExtParam(kOne),
          "free group parameters must be >= 1");
  require(!gamma.is_negative() && gamma <= kOne, "gamma must lie in [0,1]");
  require(!delta.is_negative() && delta <= kOne, "delta must lie in [0,1]");

  if (gamma.is_one()) {
    ParamSum t;
    t.add_scaled(r, kOne);
    t.add_scaled(s, delta * delta);
    t.add(2 * delta * (kOne - delta));
    return Algebra::make({{kOne, Summand::free_group(t.get())}});
  }

  const Rational corner = gamma + delta;
  if (corner.is_zero()) return Algebra::scalar();

  if (corner >= kOne) {
    ParamSum t;
    t.add_scaled(r, gamma * gamma);
    t.add(2 * gamma * (kOne - gamma));
    t.add_scaled(s, delta * delta);
    t.add(2 * delta * (kOne - delta));
    return Algebra::make({{kOne, Summand::free_group(t.get())}});
  }

  ParamSum t;
  t.add_scaled(r, gamma * gamma);
  t.add_scaled(s, delta * delta);
  t.add(4 * gamma * delta);
  const ExtParam param = t.infinite
                             ? ExtParam::infinity()
                             : ExtParam(t.value / (corner * corner));
  return Algebra::make({{corner, Summand::free_group(param)},
                        {kOne - corner, Summand::scalar()}});
}

Algebra fgf_scalars_times_two_atoms(const Rational& alpha0, const ExtParam& r,
                                    const std::vector<Rational>& atom_weights,
                                    const Rational& beta) {
  require(alpha0.is_positive(), "leading weight must be positive");
  require(r >= ExtParam(kOne), "free group parameter must be >= 1");
  require(beta >= Rational(1, 2) && beta <= kOne, "beta must lie in [1/2,1]");
  for (std::size_t i = 0; i < atom_weights.size(); ++i) {
    require(atom_weights[i].is_positive(), "atom weights must be positive");
    require(i == 0 || atom_weights[i] <= atom_weights[i - 1],
            "atom weights must be descending");
  }
  Rational total = alpha0;
  for (const auto& w : atom_weights) total += w;
  if (!total.is_one())
    throw WeightSumError("input weights sum to " + total.str());

  const Rational alpha1 =
      atom_weights.empty() ? Rational(0) : atom_weights[0];

  std::vector<Rational> out_atoms;
  if (beta >= alpha1) {
    for (const auto& a : atom_weights) {
      const Rational g = beta + a - kOne;
      if (g.is_positive()) out_atoms.push_back(g);
    }
  } else {
    const Rational g1 = alpha1 + beta - kOne;
    if (g1.is_positive()) out_atoms.push_back(g1);
    out_atoms.push_back(alpha1 - beta);
  }

  Rational gamma0 = kOne;
  for (const auto& g : out_atoms) gamma0 -= g;

  // The output parameter makes the free dimensions match:
  //   fdim(out) = fdim(in) + 2 beta (1 - beta),
  // both sides evaluated by the abelian-plus-one-factor formula
  //   s a0^2 + sum_{i != j} a_i a_j.
  std::vector<Rational> in_weights{alpha0};
  in_weights.insert(in_weights.end(), atom_weights.begin(), atom_weights.end());
  std::vector<Rational> out_weights{gamma0};
  out_weights.insert(out_weights.end(), out_atoms.begin(), out_atoms.end());

  std::vector<Algebra::Entry> entries;
  if (r.is_infinite()) {
    entries.push_back({gamma0, Summand::free_group(ExtParam::infinity())});
  } else {
    const Rational target = r.finite() * alpha0 * alpha0 +
                            cross_terms(in_weights) +
                            2 * beta * (kOne - beta);
    const Rational s = (target - cross_terms(out_weights)) / (gamma0 * gamma0);
    if (s < kOne)
      throw InternalInvariantViolation("solved parameter below 1");
    entries.push_back({gamma0, Summand::free_group(ExtParam(s))});
  }
  for (const auto& g : out_atoms) entries.push_back({g, Summand::scalar()});
  return Algebra::make(std::move(entries));
}

Algebra two_atoms_times_matrix(const Rational& alpha, int n) {
  require(alpha >= Rational(1, 2) && alpha < kOne,
          "alpha must lie in [1/2,1)");
  require(n >= 2, "matrix size must be >= 2");

  const Rational n2 = Rational(long(n) * n);
  if (alpha <= kOne - inv_sq(n)) {
    const Rational t = kOne - inv_sq(n) + 2 * alpha * (kOne - alpha);
    return Algebra::make({{kOne, Summand::free_group(ExtParam(t))}});
  }
  const Rational atom = n2 * (alpha + inv_sq(n) - kOne);
  const Rational t = kOne + inv_sq(n) - 2 * inv_sq(n) * inv_sq(n);
  return Algebra::make({{atom, Summand::matrix(n)},
                        {n2 * (kOne - alpha), Summand::free_group(ExtParam(t))}});
}

Algebra times_matrix_factor(
    const Rational& alpha0, const ExtParam& r,
    const std::vector<std::pair<Rational, int>>& matrix_summands, int m) {
  require(m >= 2, "matrix size must be >= 2");
  require(r >= ExtParam(kOne), "free group parameter must be >= 1");
  require(!alpha0.is_negative(), "leading weight must be >= 0");
  Rational total = alpha0;
  for (const auto& [w, n] : matrix_summands) {
    require(w.is_positive(), "matrix summand weights must be positive");
    require(n >= 1, "matrix size must be >= 1");
    total += w;
  }
  if (!total.is_one())
    throw WeightSumError("input weights sum to " + total.str());

  const Rational m_term = kOne - inv_sq(m);

  Rational alpha_k(0);  // largest scalar atom
  for (const auto& [w, n] : matrix_summands)
    if (n == 1 && w > alpha_k) alpha_k = w;

  ParamSum target;
  target.add_scaled(r, alpha0 * alpha0);
  {
    std::vector<Rational> weights{alpha0};
    for (const auto& [w, n] : matrix_summands) {
      target.add(w * w * (kOne - inv_sq(n)));
      weights.push_back(w);
    }
    target.add(cross_terms(weights));
  }
  target.add(m_term);

  if (alpha_k <= m_term) {
    return Algebra::make({{kOne, Summand::free_group(target.get())}});
  }

  const Rational atom = Rational(long(m) * m) * alpha_k - Rational(long(m) * m) + kOne;
  const Rational gamma0 = kOne - atom;
  if (gamma0.is_zero())  // the input was the scalars
    return Algebra::make({{kOne, Summand::matrix(m)}});

  std::vector<Algebra::Entry> entries;
  if (target.infinite) {
    entries.push_back({gamma0, Summand::free_group(ExtParam::infinity())});
  } else {
    const Rational s = (target.value - atom * atom * m_term -
                        2 * gamma0 * atom) /
                       (gamma0 * gamma0);
    if (s < kOne)
      throw InternalInvariantViolation("solved parameter below 1");
    entries.push_back({gamma0, Summand::free_group(ExtParam(s))});
  }
  entries.push_back({atom, Summand::matrix(m)});
  return Algebra::make(std::move(entries));
}

}  // namespace vnfree::closed_forms
