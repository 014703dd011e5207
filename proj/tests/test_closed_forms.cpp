#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "vnfree/closed_forms.hpp"

using namespace testutil;
namespace cf = vnfree::closed_forms;

TEST_SUITE("closed_forms") {

TEST_CASE("parameter addition") {
  CHECK(cf::fgf_add(ExtParam(Q(2)), ExtParam(Q(3))) == ExtParam(Q(5)));
  CHECK(cf::fgf_add(ExtParam(Q(3, 2)), ExtParam(Q(3, 2))) == ExtParam(Q(3)));
  CHECK(cf::fgf_add(ExtParam(Q(2)), ExtParam::infinity()).is_infinite());
  CHECK_THROWS_AS(cf::fgf_add(ExtParam(Q(1)), ExtParam(Q(2))), RangeError);
}

TEST_CASE("compression") {
  CHECK(cf::fgf_compress(ExtParam(Q(2)), Q(1, 2)) == ExtParam(Q(5)));
  CHECK(cf::fgf_compress(ExtParam(Q(7, 3)), Q(1)) == ExtParam(Q(7, 3)));
  CHECK(cf::fgf_compress(ExtParam(Q(5)), Q(2)) == ExtParam(Q(2)));
  CHECK(cf::fgf_compress(ExtParam(Q(1)), Q(1, 3)) == ExtParam(Q(1)));
  CHECK(cf::fgf_compress(ExtParam::infinity(), Q(1, 2)).is_infinite());
  CHECK_THROWS_AS(cf::fgf_compress(ExtParam(Q(2)), Q(0)), RangeError);
  CHECK_THROWS_AS(cf::fgf_compress(ExtParam(Q(1, 2)), Q(1, 2)), RangeError);
}

TEST_CASE("compression semigroup and addition compatibility") {
  std::mt19937_64 rng(11);
  auto rat = [&](long lo, long hi) {
    const long d = 1 + long(rng() % 12);
    return Rational(lo * d + long(rng() % ((hi - lo) * d)), d);
  };
  for (int i = 0; i < 100; ++i) {
    const Rational g = rat(1, 4) / Q(2), d = rat(1, 4) / Q(2);  // in (0, 2)
    const ExtParam r(rat(1, 4) + Q(1, 7));                      // > 1
    CHECK(cf::fgf_compress(cf::fgf_compress(r, g), d) ==
          cf::fgf_compress(r, g * d));
    // Compressing an added pair: 1 + (r + r' - 1)/g^2.
    const ExtParam rp(rat(1, 4) + Q(2, 7));
    const ExtParam lhs = cf::fgf_compress(cf::fgf_add(r, rp), g);
    const Rational expect =
        Q(1) + (r.finite() + rp.finite() - Q(1)) / (g * g);
    CHECK(lhs == ExtParam(expect));
  }
}

TEST_CASE("corner pair products") {
  CHECK(iso_eq(cf::fgf_pair_product(ExtParam(Q(1)), ExtParam(Q(1)), Q(1), Q(1, 2)),
               alg("LF(7/4)")));
  CHECK(iso_eq(cf::fgf_pair_product(ExtParam(Q(1)), ExtParam(Q(1)), Q(1, 2), Q(1, 2)),
               alg("LF(3/2)")));
  CHECK(iso_eq(cf::fgf_pair_product(ExtParam(Q(1)), ExtParam(Q(1)), Q(1, 4), Q(1, 4)),
               alg("1/2:LF(3/2) + 1/2:C")));
  // One-sided corner against a plain factor.
  CHECK(iso_eq(cf::fgf_pair_product(ExtParam(Q(2)), ExtParam(Q(3)), Q(1), Q(1)),
               alg("LF(5)")));
  CHECK(iso_eq(cf::fgf_pair_product(ExtParam(Q(2)), ExtParam(Q(1)), Q(1), Q(0)),
               alg("LF(2)")));
  CHECK(iso_eq(cf::fgf_pair_product(ExtParam(Q(1)), ExtParam(Q(1)), Q(0), Q(0)),
               alg("C")));
  CHECK_THROWS_AS(cf::fgf_pair_product(ExtParam(Q(1)), ExtParam(Q(1)), Q(2), Q(0)),
                  RangeError);
}

TEST_CASE("corner pair boundary: both branch formulas agree at gamma+delta=1") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const long d = 2 + long(rng() % 10);
    const Rational g(1 + long(rng() % (d - 1)), d);
    const Rational dl = Q(1) - g;
    const Rational r(1 + long(rng() % 12), 1 + long(rng() % 4));
    const Rational s(1 + long(rng() % 12), 1 + long(rng() % 4));
    const ExtParam rr(r + Q(1)), ss(s + Q(1));
    const Rational first = rr.finite() * g * g + Q(2) * g * (Q(1) - g) +
                           ss.finite() * dl * dl + Q(2) * dl * (Q(1) - dl);
    const Rational second =
        rr.finite() * g * g + ss.finite() * dl * dl + Q(4) * g * dl;
    CHECK(first == second);
    CHECK(iso_eq(cf::fgf_pair_product(rr, ss, g, dl), lf(ExtParam(first))));
  }
}

TEST_CASE("factor-plus-scalars against two atoms") {
  CHECK(iso_eq(
      cf::fgf_scalars_times_two_atoms(Q(1, 2), ExtParam(Q(1)), {Q(1, 2)}, Q(3, 4)),
      alg("3/4:LF(4/3) + 1/4:C")));
  CHECK(iso_eq(cf::fgf_scalars_times_two_atoms(Q(1), ExtParam(Q(1)), {}, Q(1, 2)),
               alg("LF(3/2)")));
  // Boundary beta = alpha_1: both output shapes coincide, no atoms survive,
  // and the solved parameter is pinned by additivity at 5/4.
  CHECK(iso_eq(
      cf::fgf_scalars_times_two_atoms(Q(1, 2), ExtParam(Q(1)), {Q(1, 2)}, Q(1, 2)),
      alg("LF(5/4)")));
  CHECK_THROWS_AS(cf::fgf_scalars_times_two_atoms(Q(1, 2), ExtParam(Q(1)),
                                                  {Q(1, 2)}, Q(1, 4)),
                  RangeError);
  CHECK_THROWS_AS(cf::fgf_scalars_times_two_atoms(Q(1, 2), ExtParam(Q(1)),
                                                  {Q(1, 4)}, Q(3, 4)),
                  WeightSumError);
  CHECK_THROWS_AS(cf::fgf_scalars_times_two_atoms(Q(1, 4), ExtParam(Q(1)),
                                                  {Q(1, 4), Q(1, 2)}, Q(3, 4)),
                  RangeError);  // not descending
  // Ties are fine: descending means non-increasing.
  CHECK_NOTHROW(cf::fgf_scalars_times_two_atoms(Q(1, 2), ExtParam(Q(1)),
                                                {Q(1, 4), Q(1, 4)}, Q(3, 4)));
}

TEST_CASE("two atoms against a matrix factor") {
  CHECK(iso_eq(cf::two_atoms_times_matrix(Q(2, 3), 2), alg("LF(43/36)")));
  CHECK(iso_eq(cf::two_atoms_times_matrix(Q(4, 5), 2),
               alg("1/5:M2 + 4/5:LF(9/8)")));
  // Boundary alpha = 1 - 1/n^2: the atom has weight zero and both branches
  // give LF(9/8).
  CHECK(iso_eq(cf::two_atoms_times_matrix(Q(3, 4), 2), alg("LF(9/8)")));
  const Rational second_branch_param = Q(1) + Q(1, 4) - Q(2) * Q(1, 16);
  CHECK(second_branch_param == Q(9, 8));
  CHECK_THROWS_AS(cf::two_atoms_times_matrix(Q(1, 3), 2), RangeError);
  CHECK_THROWS_AS(cf::two_atoms_times_matrix(Q(1), 2), RangeError);
  CHECK_THROWS_AS(cf::two_atoms_times_matrix(Q(1, 2), 1), RangeError);
}

TEST_CASE("general times a full matrix factor") {
  CHECK(iso_eq(
      cf::times_matrix_factor(Q(0), ExtParam(Q(1)),
                              {{Q(1, 2), 1}, {Q(1, 2), 1}}, 2),
      alg("LF(5/4)")));
  CHECK(iso_eq(
      cf::times_matrix_factor(Q(0), ExtParam(Q(1)),
                              {{Q(4, 5), 1}, {Q(1, 5), 1}}, 2),
      alg("1/5:M2 + 4/5:LF(9/8)")));
  CHECK(iso_eq(cf::times_matrix_factor(Q(0), ExtParam(Q(1)), {{Q(1), 3}}, 2),
               alg("LF(59/36)")));
  CHECK(iso_eq(cf::times_matrix_factor(Q(1), ExtParam(Q(2)), {}, 3),
               alg("LF(26/9)")));
  CHECK_THROWS_AS(
      cf::times_matrix_factor(Q(1, 2), ExtParam(Q(1)), {{Q(1, 4), 1}}, 2),
      WeightSumError);
}

}  // TEST_SUITE
