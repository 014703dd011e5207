#include "vnfree/groups.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace vnfree {

void validate_descriptor(const GroupDescriptor& g) {
  if (!g.is_finite()) {
    if (!g.irrep_dims.empty())
      throw TableValidationError(g.name + ": infinite group with irrep dims");
    return;
  }
  if (*g.order < 1)
    throw TableValidationError(g.name + ": order must be positive");
  if (g.irrep_dims.empty())
    throw TableValidationError(g.name + ": missing irrep dims");
  long sum = 0;
  for (int d : g.irrep_dims) {
    if (d < 1) throw TableValidationError(g.name + ": irrep dim must be positive");
    sum += static_cast<long>(d) * d;
  }
  if (sum != *g.order)
    throw TableValidationError(g.name + ": sum of squared dims is " +
                               std::to_string(sum) + ", order is " +
                               std::to_string(*g.order));
}

Algebra group_algebra(const GroupDescriptor& g) {
  validate_descriptor(g);
  if (!g.is_finite()) {
    // Diffuse by Connes' classification of amenable groups; the internal
    // structure is not pinned down, only the class matters.
    return Algebra::make({{Rational(1), Summand::diffuse_unspecified()}});
  }
  std::vector<Algebra::Entry> entries;
  entries.reserve(g.irrep_dims.size());
  for (int d : g.irrep_dims)
    entries.push_back({Rational(static_cast<long>(d) * d, *g.order),
                       Summand::matrix(d)});
  return Algebra::make(std::move(entries));
}

namespace {

GroupDescriptor table_entry(std::string name, long order, std::vector<int> dims) {
  GroupDescriptor g{std::move(name), order, std::move(dims), true};
  validate_descriptor(g);
  return g;
}

}  // namespace

const std::vector<GroupDescriptor>& builtin_groups() {
  static const std::vector<GroupDescriptor> table = [] {
    std::vector<GroupDescriptor> t;
    for (long n = 2; n <= 6; ++n)
      t.push_back(table_entry("Z" + std::to_string(n), n,
                              std::vector<int>(n, 1)));
    t.push_back(table_entry("S3", 6, {1, 1, 2}));
    t.push_back(table_entry("D4", 8, {1, 1, 1, 1, 2}));
    t.push_back(table_entry("Q8", 8, {1, 1, 1, 1, 2}));
    t.push_back(table_entry("A4", 12, {1, 1, 1, 3}));
    t.push_back(table_entry("S4", 24, {1, 1, 2, 3, 3}));
    t.push_back(GroupDescriptor{"Z", std::nullopt, {}, true});
    return t;
  }();
  return table;
}

GroupDescriptor builtin_group(std::string_view name) {
  for (const auto& g : builtin_groups())
    if (g.name == name) return g;
  // Any cyclic group Z<n>, n >= 2.
  if (name.size() >= 2 && name[0] == 'Z') {
    long n = 0;
    const auto [ptr, ec] =
        std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 2)
      return table_entry(std::string(name), n, std::vector<int>(n, 1));
  }
  throw UnknownGroupError("unknown group '" + std::string(name) + "'");
}

std::vector<GroupDescriptor> load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RangeError("cannot open group table '" + path + "'");

  std::vector<GroupDescriptor> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string name, order_text, dims_text;
    if (!(ls >> name)) continue;  // blank line
    if (!(ls >> order_text))
      throw ParseError("missing group order", lineno, 1);

    GroupDescriptor g;
    g.name = name;
    if (order_text == "inf") {
      g.order = std::nullopt;
    } else {
      long order = 0;
      const auto [ptr, ec] = std::from_chars(
          order_text.data(), order_text.data() + order_text.size(), order);
      if (ec != std::errc() || ptr != order_text.data() + order_text.size())
        throw ParseError("bad group order '" + order_text + "'", lineno, 1);
      g.order = order;
      if (!(ls >> dims_text))
        throw ParseError("missing irrep dims", lineno, 1);
      std::size_t pos = 0;
      while (pos <= dims_text.size()) {
        const auto comma = dims_text.find(',', pos);
        const std::string item = dims_text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int d = 0;
        const auto [ptr2, ec2] =
            std::from_chars(item.data(), item.data() + item.size(), d);
        if (ec2 != std::errc() || ptr2 != item.data() + item.size())
          throw ParseError("bad irrep dim '" + item + "'", lineno, 1);
        g.irrep_dims.push_back(d);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    std::string trailing;
    if (ls >> trailing)
      throw ParseError("unexpected trailing field '" + trailing + "'", lineno, 1);
    validate_descriptor(g);
    out.push_back(std::move(g));
  }
  return out;
}

ExtParam group_product_param(const GroupDescriptor& g, const GroupDescriptor& h) {
  validate_descriptor(g);
  validate_descriptor(h);
  auto order_ok = [](const GroupDescriptor& d) {
    return !d.is_finite() || *d.order >= 2;
  };
  if (!order_ok(g) || !order_ok(h))
    throw HypothesisViolation("group orders must be >= 2");
  const bool both_finite = g.is_finite() && h.is_finite();
  if (both_finite && *g.order + *h.order < 5)
    throw HypothesisViolation("group orders must total >= 5");

  Rational param(2);
  if (g.is_finite()) param -= Rational(1, *g.order);
  if (h.is_finite()) param -= Rational(1, *h.order);
  return ExtParam(param);
}

}  // namespace vnfree
