#include "vnfree/rational.hpp"

#include <cctype>

namespace vnfree {

Rational Rational::from_string(std::string_view text) {
  auto bad = [&] { return RangeError("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  std::string_view den = "1";
  if (slash != std::string_view::npos) {
    den = text.substr(slash + 1);
    if (den.empty() || den.find('/') != std::string_view::npos) throw bad();
  }
  auto check_int = [&](std::string_view s, bool sign_ok) {
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    }
  };
  check_int(num, true);
  check_int(den, false);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw RangeError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

}  // namespace vnfree
