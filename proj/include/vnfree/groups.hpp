#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnfree/algebra.hpp"

namespace vnfree {

// A discrete amenable group given by its order and, when finite, the
// dimensions of its irreducible representations (sum of squares = order).
struct GroupDescriptor {
  std::string name;
  std::optional<long> order;   // nullopt = infinite
  std::vector<int> irrep_dims; // empty when infinite
  bool amenable = true;        // asserted by the descriptor, not checked

  bool is_finite() const { return order.has_value(); }
};

// Checks sum of d^2 = |G| for finite descriptors; throws TableValidationError.
void validate_descriptor(const GroupDescriptor& g);

// L(G): for finite G the direct sum of M_{n_a} with weight n_a^2/|G|; for
// infinite amenable G a single diffuse summand of unspecified internal kind.
Algebra group_algebra(const GroupDescriptor& g);

// Built-in table: Z<n> for n >= 2, S3, D4, Q8, A4, S4 and the infinite Z.
// Throws UnknownGroupError for anything else.
GroupDescriptor builtin_group(std::string_view name);

// The fixed descriptors listed by the CLI (Z<n> shown for small n only).
const std::vector<GroupDescriptor>& builtin_groups();

// Parses a group table file: one descriptor per line in the form
// "NAME ORDER d1,d2,...,dk", ORDER = inf for infinite groups (dims omitted),
// '#' starts a comment. Throws ParseError / TableValidationError.
std::vector<GroupDescriptor> load_group_table(const std::string& path);

// Parameter of the interpolated factor L(G * H) = L(F(2 - 1/|G| - 1/|H|)),
// with 1/inf = 0. Requires |G|, |H| >= 2 and |G| + |H| >= 5.
ExtParam group_product_param(const GroupDescriptor& g, const GroupDescriptor& h);

}  // namespace vnfree
