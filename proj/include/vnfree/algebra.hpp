#pragma once

#include <vector>

#include "vnfree/rational.hpp"

namespace vnfree {

// One central summand of a tracial von Neumann algebra in the closed class:
// a matrix factor M_n (n = 1 being the scalars C), an interpolated free group
// factor L(F_s) with s > 1, or one of the diffuse kinds. The diffuse kinds are
// kept structurally distinct even though they share free-dimension density 1.
class Summand {
 public:
  enum class Kind {
    Matrix,                    // M_n, linear dimension n^2
    FreeGroup,                 // L(F_s), s > 1 (s = 1 is rewritten to L(Z))
    DiffuseAbelianMatrix,      // L(Z) x M_k, k = 1 being L(Z) itself
    Hyperfinite,               // the hyperfinite II_1 factor R
    AbelianTensorHyperfinite,  // L(Z) x R
    DiffuseUnspecified,        // diffuse with unspecified internal structure
  };

  static Summand matrix(int n);
  // param >= 1 required; param = 1 yields the diffuse abelian summand.
  static Summand free_group(ExtParam param);
  static Summand diffuse_abelian_matrix(int k);
  static Summand hyperfinite() { return Summand(Kind::Hyperfinite, 0); }
  static Summand abelian_tensor_hyperfinite() {
    return Summand(Kind::AbelianTensorHyperfinite, 0);
  }
  static Summand diffuse_unspecified() {
    return Summand(Kind::DiffuseUnspecified, 0);
  }
  static Summand scalar() { return matrix(1); }

  Kind kind() const { return kind_; }
  // Matrix size n, or the tensor size k of L(Z) x M_k; 0 otherwise.
  int size() const { return size_; }
  const ExtParam& param() const { return param_; }

  bool is_matrix() const { return kind_ == Kind::Matrix; }
  bool is_scalar() const { return kind_ == Kind::Matrix && size_ == 1; }
  bool is_free_group() const { return kind_ == Kind::FreeGroup; }
  bool is_diffuse() const { return !is_matrix() && !is_free_group(); }
  bool infinite_dimensional() const { return kind_ != Kind::Matrix; }

  bool operator==(const Summand& o) const {
    return kind_ == o.kind_ && size_ == o.size_ && param_ == o.param_;
  }

 private:
  Summand(Kind kind, int size) : kind_(kind), size_(size) {}
  Summand(Kind kind, ExtParam param) : kind_(kind), param_(std::move(param)) {}

  Kind kind_;
  int size_ = 0;
  ExtParam param_{Rational(0)};
};

// Canonical ordering: matrix summands first by (n, weight), then free group
// factors by (param, weight), then the diffuse kinds in declaration order.
bool canonical_less(const Rational& wa, const Summand& a, const Rational& wb,
                    const Summand& b);

// Finite weighted direct sum with weights summing exactly to 1; the central
// decomposition of an algebra in the closed class. Values are immutable and
// always canonical: zero-weight entries dropped, entries sorted, equal entries
// kept separate (C_{1/2} (+) C_{1/2} is not C).
class Algebra {
 public:
  struct Entry {
    Rational weight;
    Summand summand;
    bool operator==(const Entry& o) const = default;
  };

  // Canonicalizes and validates. Throws RangeError on a negative weight,
  // EmptyAlgebraError if nothing is left, WeightSumError if the sum is not 1.
  static Algebra make(std::vector<Entry> entries);
  // Same, additionally reporting where each input entry landed in the
  // canonical order (-1 for dropped zero-weight entries).
  static Algebra make(std::vector<Entry> entries, std::vector<int>& positions);

  static Algebra scalar() { return make({{Rational(1), Summand::scalar()}}); }

  const std::vector<Entry>& summands() const { return summands_; }

  // Linear dimension: sum of n^2 over matrix summands, or infinity as soon as
  // any infinite-dimensional summand is present.
  ExtParam linear_dim() const;

  bool is_scalar() const {
    return summands_.size() == 1 && summands_[0].summand.is_scalar();
  }
  // Exactly two scalar summands; the one shape handled by the two-projections
  // rule rather than the general rule.
  bool is_two_atom_abelian() const {
    return summands_.size() == 2 && summands_[0].summand.is_scalar() &&
           summands_[1].summand.is_scalar();
  }
  bool has_free_group_summand() const;
  bool has_matrix_summand() const;

  bool operator==(const Algebra& o) const { return summands_ == o.summands_; }

 private:
  explicit Algebra(std::vector<Entry> s) : summands_(std::move(s)) {}
  std::vector<Entry> summands_;
};

// Trace-preserving isomorphism test: canonical forms compared entry by entry,
// free group parameters included. (If all interpolated factors were pairwise
// isomorphic this would be too fine; parameters are compared formally.)
inline bool iso_eq(const Algebra& a, const Algebra& b) { return a == b; }

inline ExtParam dim(const Algebra& a) { return a.linear_dim(); }

// Flattens a weighted sum of algebras into one algebra: inner weights are
// scaled by the outer weight and the result is canonicalized.
Algebra direct_sum(const std::vector<std::pair<Rational, Algebra>>& parts);

}  // namespace vnfree
