#include "vnfree/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace vnfree {

Summand Summand::matrix(int n) {
  if (n < 1) throw RangeError("matrix size must be >= 1");
  return Summand(Kind::Matrix, n);
}

Summand Summand::free_group(ExtParam param) {
  if (param < ExtParam(Rational(1)))
    throw RangeError("free group parameter must be >= 1");
  if (param == ExtParam(Rational(1))) return diffuse_abelian_matrix(1);
  return Summand(Kind::FreeGroup, std::move(param));
}

Summand Summand::diffuse_abelian_matrix(int k) {
  if (k < 1) throw RangeError("tensor size must be >= 1");
  return Summand(Kind::DiffuseAbelianMatrix, k);
}

namespace {

int kind_rank(Summand::Kind k) {
  switch (k) {
    case Summand::Kind::Matrix: return 0;
    case Summand::Kind::FreeGroup: return 1;
    case Summand::Kind::DiffuseAbelianMatrix: return 2;
    case Summand::Kind::Hyperfinite: return 3;
    case Summand::Kind::AbelianTensorHyperfinite: return 4;
    case Summand::Kind::DiffuseUnspecified: return 5;
  }
  throw InternalInvariantViolation("unknown summand kind");
}

}  // namespace

bool canonical_less(const Rational& wa, const Summand& a, const Rational& wb,
                    const Summand& b) {
  const int ra = kind_rank(a.kind()), rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb;
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.param() != b.param()) return a.param() < b.param();
  return wa < wb;
}

Algebra Algebra::make(std::vector<Entry> entries) {
  std::vector<int> positions;
  return make(std::move(entries), positions);
}

Algebra Algebra::make(std::vector<Entry> entries, std::vector<int>& positions) {
  positions.assign(entries.size(), -1);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].weight.is_negative())
      throw RangeError("negative weight in direct sum");
    if (!entries[i].weight.is_zero()) keep.push_back(i);
  }
  if (keep.empty()) throw EmptyAlgebraError("all weights are zero");

  Rational total(0);
  for (auto i : keep) total += entries[i].weight;
  if (!total.is_one())
    throw WeightSumError("weights sum to " + total.str() + ", expected 1");

  std::stable_sort(keep.begin(), keep.end(), [&](std::size_t i, std::size_t j) {
    return canonical_less(entries[i].weight, entries[i].summand,
                          entries[j].weight, entries[j].summand);
  });

  std::vector<Entry> canon;
  canon.reserve(keep.size());
  for (std::size_t pos = 0; pos < keep.size(); ++pos) {
    positions[keep[pos]] = static_cast<int>(pos);
    canon.push_back(std::move(entries[keep[pos]]));
  }
  return Algebra(std::move(canon));
}

ExtParam Algebra::linear_dim() const {
  Rational total(0);
  for (const auto& e : summands_) {
    if (e.summand.infinite_dimensional()) return ExtParam::infinity();
    total += Rational(e.summand.size()) * Rational(e.summand.size());
  }
  return ExtParam(total);
}

bool Algebra::has_free_group_summand() const {
  return std::any_of(summands_.begin(), summands_.end(),
                     [](const Entry& e) { return e.summand.is_free_group(); });
}

bool Algebra::has_matrix_summand() const {
  return std::any_of(summands_.begin(), summands_.end(),
                     [](const Entry& e) { return e.summand.is_matrix(); });
}

Algebra direct_sum(const std::vector<std::pair<Rational, Algebra>>& parts) {
  std::vector<Algebra::Entry> flat;
  for (const auto& [outer, algebra] : parts) {
    if (outer.is_negative()) throw RangeError("negative weight in direct sum");
    for (const auto& e : algebra.summands())
      flat.push_back({outer * e.weight, e.summand});
  }
  return Algebra::make(std::move(flat));
}

}  // namespace vnfree
