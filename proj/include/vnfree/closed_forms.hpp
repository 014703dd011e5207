#pragma once

#include <utility>
#include <vector>

#include "vnfree/algebra.hpp"

// Special-case product formulas transcribed directly from their source
// identities, independent of the general engine. Used both as public
// convenience operations and as oracles: every operation here must agree
// with the corresponding free_product call, and the tests enforce it.
namespace vnfree::closed_forms {

// L(F_r) * L(F_r') = L(F_{r+r'}). Both parameters must exceed 1 (or be inf).
ExtParam fgf_add(const ExtParam& r, const ExtParam& rp);

// Compression/amplification: L(F_r) cut by a trace-gamma projection is
// L(F(1 + (r-1)/gamma^2)); gamma > 1 is amplification. Requires r >= 1 and
// 0 < gamma finite.
ExtParam fgf_compress(const ExtParam& r, const Rational& gamma);

// (L(F_r)_gamma (+) C_{1-gamma}) * (L(F_s)_delta (+) C_{1-delta}) for
// r, s >= 1, 0 <= gamma, delta <= 1. gamma = 1 is the corner-free form.
Algebra fgf_pair_product(const ExtParam& r, const ExtParam& s,
                         const Rational& gamma, const Rational& delta);

// (L(F_r)_alpha0 (+) C_{a_1} (+) ... (+) C_{a_n}) * (C_beta (+) C_{1-beta})
// with alpha0 > 0, atom weights descending, 1/2 <= beta <= 1.
Algebra fgf_scalars_times_two_atoms(const Rational& alpha0, const ExtParam& r,
                                    const std::vector<Rational>& atom_weights,
                                    const Rational& beta);

// (C_alpha (+) C_{1-alpha}) * M_n for 1/2 <= alpha < 1, n >= 2.
Algebra two_atoms_times_matrix(const Rational& alpha, int n);

// (L(F_r)_alpha0 (+) M_{n_1} (+) ... (+) M_{n_k}) * M_m for m >= 2.
// matrix_summands holds (weight, n) pairs; alpha0 may be 0, r >= 1.
Algebra times_matrix_factor(const Rational& alpha0, const ExtParam& r,
                            const std::vector<std::pair<Rational, int>>& matrix_summands,
                            int m);

}  // namespace vnfree::closed_forms
