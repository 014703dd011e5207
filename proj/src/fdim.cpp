#include "vnfree/fdim.hpp"

namespace vnfree {

FdimValue fdim(const Algebra& a) {
  // density - 1 is 0 for diffuse summands, -1/n^2 for M_n, s - 1 for L(F_s).
  Rational acc(1);
  for (const auto& e : a.summands()) {
    const Summand& s = e.summand;
    const Rational w2 = e.weight * e.weight;
    switch (s.kind()) {
      case Summand::Kind::Matrix: {
        const Rational n2(static_cast<long>(s.size()) * s.size());
        acc -= w2 / n2;
        break;
      }
      case Summand::Kind::FreeGroup: {
        if (s.param().is_infinite()) return ExtParam::infinity();
        acc += w2 * (s.param().finite() - Rational(1));
        break;
      }
      default:
        break;  // diffuse: density 1
    }
  }
  return ExtParam(acc);
}

Rational lumpiness(const Algebra& a) {
  Rational best(0);
  for (const auto& e : a.summands()) {
    if (!e.summand.is_matrix()) continue;
    const Rational n2(static_cast<long>(e.summand.size()) * e.summand.size());
    const Rational l = e.weight / n2;
    if (l > best) best = l;
  }
  return best;
}

bool product_is_factor(const Algebra& a, const Algebra& b) {
  const ExtParam da = dim(a), db = dim(b);
  if (da < ExtParam(Rational(2)) || db < ExtParam(Rational(2)))
    throw HypothesisViolation("factoriality test requires dimension >= 2 on both sides");
  if (da + db < ExtParam(Rational(5)))
    throw HypothesisViolation("factoriality test requires total dimension >= 5");
  return lumpiness(a) + lumpiness(b) <= Rational(1);
}

}  // namespace vnfree
