#include <doctest.h>

#include "helpers.hpp"
#include "vnfree/fdim.hpp"
#include "vnfree/verify.hpp"

using namespace testutil;

TEST_SUITE("fdim") {

TEST_CASE("pinned values") {
  CHECK(fdim(alg("C")) == ExtParam(Q(0)));
  CHECK(fdim(alg("LZ")) == ExtParam(Q(1)));
  CHECK(fdim(alg("R")) == ExtParam(Q(1)));
  CHECK(fdim(alg("LZxR")) == ExtParam(Q(1)));
  CHECK(fdim(alg("LZxM3")) == ExtParam(Q(1)));
  CHECK(fdim(alg("D")) == ExtParam(Q(1)));
  CHECK(fdim(alg("1/3:C + 2/3:C")) == ExtParam(Q(4, 9)));
  CHECK(fdim(alg("1/2:C + 1/2:C")) == ExtParam(Q(1, 2)));
  CHECK(fdim(alg("M2")) == ExtParam(Q(3, 4)));
  CHECK(fdim(alg("LF(5/2)")) == ExtParam(Q(5, 2)));
  CHECK(fdim(alg("LF(inf)")).is_infinite());
  // L(S3) = C_{1/6} (+) C_{1/6} (+) M2_{2/3}
  CHECK(fdim(alg("1/6:C + 1/6:C + 2/3:M2")) == ExtParam(Q(5, 6)));
  // Mixed kinds: 1 + (1/4)(2-1) - (1/4)(1/4) with an LF(2) and an M2 half.
  CHECK(fdim(alg("1/2:LF(2) + 1/2:M2")) == ExtParam(Q(19, 16)));
}

TEST_CASE("lumpiness") {
  CHECK(lumpiness(alg("LZ")) == Q(0));
  CHECK(lumpiness(alg("LF(2)")) == Q(0));
  CHECK(lumpiness(alg("3/4:C + 1/4:C")) == Q(3, 4));
  CHECK(lumpiness(alg("1/6:C + 1/6:C + 2/3:M2")) == Q(1, 6));
  CHECK(lumpiness(alg("1/2:M2 + 1/2:LZ")) == Q(1, 8));
}

TEST_CASE("factoriality criterion") {
  CHECK(product_is_factor(alg("1/2:C + 1/2:C"),
                          alg("1/3:C + 1/3:C + 1/3:C")));
  CHECK_FALSE(product_is_factor(alg("3/4:C + 1/4:C"),
                                alg("1/3:C + 1/3:C + 1/3:C")));
  CHECK(product_is_factor(alg("M2"), alg("M2")));
  CHECK_THROWS_AS(product_is_factor(alg("C"), alg("M2")), HypothesisViolation);
  // Both two-atom abelian: total dimension 4, outside the criterion.
  CHECK_THROWS_AS(product_is_factor(alg("3/4:C + 1/4:C"),
                                    alg("1/2:C + 1/2:C")),
                  HypothesisViolation);
}

TEST_CASE("every all-diffuse algebra has free dimension exactly 1") {
  std::mt19937_64 rng(5);
  const Summand kinds[] = {
      Summand::diffuse_abelian_matrix(1), Summand::diffuse_abelian_matrix(3),
      Summand::hyperfinite(), Summand::abelian_tensor_hyperfinite(),
      Summand::diffuse_unspecified()};
  for (int i = 0; i < 200; ++i) {
    const int count = 1 + int(rng() % 4);
    std::vector<Algebra::Entry> entries;
    Rational total(0);
    std::vector<Rational> raw;
    for (int k = 0; k < count; ++k) {
      raw.emplace_back(1 + long(rng() % 12), 1 + long(rng() % 12));
      total += raw.back();
      entries.push_back({Q(0), kinds[rng() % 5]});
    }
    for (int k = 0; k < count; ++k) entries[k].weight = raw[k] / total;
    CHECK(fdim(Algebra::make(std::move(entries))) == ExtParam(Q(1)));
  }
}

TEST_CASE("free dimension is zero only for the scalars") {
  VerifyConfig cfg;
  cfg.seed = 31337;
  AlgebraGen gen(cfg);
  for (int i = 0; i < 300; ++i) {
    const Algebra a = gen.random_algebra();
    CHECK((fdim(a) == ExtParam(Q(0))) == a.is_scalar());
    CHECK(fdim(a) >= ExtParam(Q(0)));
  }
}

}  // TEST_SUITE
