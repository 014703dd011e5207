#include "vnfree/verify.hpp"

#include <functional>
#include <sstream>

#include "vnfree/closed_forms.hpp"
#include "vnfree/expr.hpp"
#include "vnfree/fdim.hpp"
#include "vnfree/free_product.hpp"

namespace vnfree {

bool VerifyReport::all_passed() const {
  for (const auto& s : suites)
    if (!s.ok()) return false;
  return true;
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << "suite " << s.name << ": " << s.passed << "/" << (s.passed + s.failed)
        << " passed";
    if (s.regenerated > 0) out << " (regenerated " << s.regenerated << ")";
    if (s.discarded > 0) out << " (discarded " << s.discarded << ")";
    out << "\n";
    if (!s.ok())
      out << "  first counterexample: " << s.first_counterexample << "\n";
  }
  if (config.cases == 0)
    out << "warning: 0 cases requested; all suites pass vacuously\n";
  out << (all_passed() ? "all suites passed" : "FAILED") << " (seed="
      << config.seed << ", cases=" << config.cases
      << (config.strict ? ", strict" : "") << ")\n";
  return out.str();
}

std::uint64_t AlgebraGen::uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  return dist(rng_);
}

Rational AlgebraGen::random_fgf_param() {
  const long d = long(uniform(1, cfg_.weight_denominator_bound));
  const long p = long(uniform(d + 1, 4 * d));
  return Rational(p, d);
}

Rational AlgebraGen::random_unit_fraction() {
  const long d = long(uniform(1, cfg_.weight_denominator_bound));
  return Rational(long(uniform(1, d)), d);
}

Algebra AlgebraGen::random_algebra() {
  const int count = int(uniform(1, cfg_.max_summands));
  std::vector<Algebra::Entry> entries;
  std::vector<Rational> raw;
  Rational total(0);
  for (int i = 0; i < count; ++i) {
    Summand s = Summand::scalar();
    switch (uniform(0, 3)) {
      case 0: s = Summand::scalar(); break;
      case 1:
        s = cfg_.max_matrix_size >= 2
                ? Summand::matrix(int(uniform(2, cfg_.max_matrix_size)))
                : Summand::scalar();
        break;
      case 2: s = Summand::diffuse_abelian_matrix(1); break;
      case 3: s = Summand::free_group(ExtParam(random_fgf_param())); break;
    }
    Rational w = random_unit_fraction();
    total += w;
    raw.push_back(w);
    entries.push_back({w, std::move(s)});
  }
  for (int i = 0; i < count; ++i) entries[i].weight = raw[i] / total;
  return Algebra::make(std::move(entries));
}

namespace {

constexpr int kMaxAttempts = 100000;

using CaseFn = std::function<bool(SuiteReport&, std::string&)>;

SuiteReport run_suite(std::string name, int cases, const CaseFn& one_case) {
  SuiteReport r;
  r.name = std::move(name);
  for (int i = 0; i < cases; ++i) {
    std::string cx;
    bool ok = false;
    try {
      ok = one_case(r, cx);
    } catch (const Error& e) {
      cx += std::string(cx.empty() ? "" : " ; ") + "error: " + e.what();
    }
    if (ok) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.first_counterexample.empty()) r.first_counterexample = cx;
    }
  }
  return r;
}

std::string show_pair(const Algebra& a, const Algebra& b) {
  return "A = " + render_text(a) + " ; B = " + render_text(b);
}

struct ProductGen {
  AlgebraGen& gen;
  bool strict;

  // Draws inputs until the acceptance predicate holds and, in strict mode,
  // until the product is covered by a proven rule. Redraws are counted.
  std::tuple<Algebra, Algebra, FreeProductResult> pair(
      SuiteReport& r, const std::function<bool(const Algebra&, const Algebra&)>& admits) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      Algebra a = gen.random_algebra();
      Algebra b = gen.random_algebra();
      if (!admits(a, b)) {
        ++r.regenerated;
        continue;
      }
      try {
        return {a, b, free_product(a, b, strict)};
      } catch (const ExtrapolationRejected&) {
        ++r.regenerated;
      }
    }
    throw InternalInvariantViolation("could not draw admissible inputs");
  }
};

bool always(const Algebra&, const Algebra&) { return true; }

// L(F_r) with weight gamma in a corner, scalars on the rest.
Algebra corner_algebra(const ExtParam& r, const Rational& gamma) {
  if (gamma.is_zero()) return Algebra::scalar();
  if (gamma.is_one())
    return Algebra::make({{Rational(1), Summand::free_group(r)}});
  return Algebra::make({{gamma, Summand::free_group(r)},
                        {Rational(1) - gamma, Summand::scalar()}});
}

SuiteReport suite_fdim_additivity(AlgebraGen& gen, const VerifyConfig& cfg) {
  ProductGen pg{gen, cfg.strict};
  return run_suite("fdim-additivity", cfg.cases, [&](SuiteReport& r, std::string& cx) {
    auto [a, b, p] = pg.pair(r, always);
    cx = show_pair(a, b);
    return fdim(p.algebra) == fdim(a) + fdim(b);
  });
}

SuiteReport suite_commutativity(AlgebraGen& gen, const VerifyConfig& cfg) {
  ProductGen pg{gen, cfg.strict};
  return run_suite("commutativity", cfg.cases, [&](SuiteReport& r, std::string& cx) {
    auto [a, b, p] = pg.pair(r, always);
    cx = show_pair(a, b);
    return iso_eq(p.algebra, free_product(b, a, cfg.strict).algebra);
  });
}

SuiteReport suite_associativity(AlgebraGen& gen, const VerifyConfig& cfg) {
  return run_suite("associativity", cfg.cases, [&](SuiteReport& r, std::string& cx) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      Algebra a = gen.random_algebra();
      Algebra b = gen.random_algebra();
      Algebra c = gen.random_algebra();
      cx = show_pair(a, b) + " ; C = " + render_text(c);
      try {
        const Algebra ab_c =
            free_product(free_product(a, b, cfg.strict).algebra, c, cfg.strict)
                .algebra;
        const Algebra a_bc =
            free_product(a, free_product(b, c, cfg.strict).algebra, cfg.strict)
                .algebra;
        return iso_eq(ab_c, a_bc);
      } catch (const ExtrapolationRejected&) {
        ++r.discarded;  // an intermediate product has no proven rule
      }
    }
    throw InternalInvariantViolation("could not draw an admissible triple");
  });
}

SuiteReport suite_factoriality(AlgebraGen& gen, const VerifyConfig& cfg) {
  ProductGen pg{gen, cfg.strict};
  auto admits = [](const Algebra& a, const Algebra& b) {
    return !a.is_scalar() && !b.is_scalar() &&
           !(a.is_two_atom_abelian() && b.is_two_atom_abelian());
  };
  return run_suite("factoriality", cfg.cases, [&](SuiteReport& r, std::string& cx) {
    auto [a, b, p] = pg.pair(r, admits);
    cx = show_pair(a, b);
    const bool factor = product_is_factor(a, b);
    return p.algebra.has_matrix_summand() == !factor;
  });
}

// If L(Z) * A is the pure factor L(F_{1+s}), then L(F_r) * A = L(F_{r+s}).
SuiteReport suite_parameter_shift(AlgebraGen& gen, const VerifyConfig& cfg) {
  const Algebra lz =
      Algebra::make({{Rational(1), Summand::diffuse_abelian_matrix(1)}});
  return run_suite("parameter-shift", cfg.cases, [&](SuiteReport& r, std::string& cx) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      Algebra a = gen.random_algebra();
      cx = "A = " + render_text(a);
      FreeProductResult base{Algebra::scalar(), {}, {}, {}, {}};
      try {
        base = free_product(lz, a, cfg.strict);
      } catch (const ExtrapolationRejected&) {
        ++r.regenerated;
        continue;
      }
      const auto& out = base.algebra.summands();
      if (out.size() != 1) {
        ++r.regenerated;  // not a pure factor; the shift property does not apply
        continue;
      }
      // Pure factor L(F_{1+s}); L(Z) itself is the s = 0 case.
      ExtParam shifted_base(Rational(1));
      if (out[0].summand.is_free_group())
        shifted_base = out[0].summand.param();
      else if (!(out[0].summand.kind() == Summand::Kind::DiffuseAbelianMatrix &&
                 out[0].summand.size() == 1))
        return false;
      const Rational s = shifted_base.finite() - Rational(1);

      try {
        for (int k = 0; k < 3; ++k) {
          const Rational rp = gen.random_fgf_param();
          cx = "A = " + render_text(a) + " ; r = " + rp.str();
          const Algebra lhs =
              free_product(Algebra::make({{Rational(1),
                                           Summand::free_group(ExtParam(rp))}}),
                           a, cfg.strict)
                  .algebra;
          const Algebra rhs = Algebra::make(
              {{Rational(1), Summand::free_group(ExtParam(rp + s))}});
          if (!iso_eq(lhs, rhs)) return false;
        }
      } catch (const ExtrapolationRejected&) {
        ++r.regenerated;
        continue;
      }
      return true;
    }
    throw InternalInvariantViolation("could not draw an admissible input");
  });
}

SuiteReport suite_oracle_fgf_pair(AlgebraGen& gen, const VerifyConfig& cfg) {
  int counter = 0;
  return run_suite("oracle-fgf-pair", cfg.cases, [&](SuiteReport&, std::string& cx) {
    ++counter;
    auto param = [&] {
      return gen.uniform(0, 3) == 0 ? ExtParam(Rational(1))
                                    : ExtParam(gen.random_fgf_param());
    };
    const ExtParam r = param(), s = param();
    const long d = long(gen.uniform(1, cfg.weight_denominator_bound));
    Rational gamma(long(gen.uniform(0, d)), d);
    Rational delta(long(gen.uniform(0, d)), d);
    if (counter % 8 == 0) delta = Rational(1) - gamma;  // corner boundary
    if (counter % 11 == 0) gamma = Rational(1);

    cx = "r = " + r.str() + " ; s = " + s.str() + " ; gamma = " + gamma.str() +
         " ; delta = " + delta.str();
    const Algebra oracle = closed_forms::fgf_pair_product(r, s, gamma, delta);
    const Algebra engine =
        free_product(corner_algebra(r, gamma), corner_algebra(s, delta), false)
            .algebra;
    return iso_eq(oracle, engine);
  });
}

SuiteReport suite_oracle_fgf_scalars(AlgebraGen& gen, const VerifyConfig& cfg) {
  int counter = 0;
  return run_suite("oracle-fgf-scalars", cfg.cases, [&](SuiteReport&, std::string& cx) {
    ++counter;
    const ExtParam r = gen.uniform(0, 3) == 0 ? ExtParam(Rational(1))
                                              : ExtParam(gen.random_fgf_param());
    const int atom_count = int(gen.uniform(0, 3));
    Rational alpha0 = gen.random_unit_fraction();
    std::vector<Rational> atoms;
    Rational total = alpha0;
    for (int i = 0; i < atom_count; ++i) {
      atoms.push_back(gen.random_unit_fraction());
      total += atoms.back();
    }
    alpha0 /= total;
    for (auto& a : atoms) a /= total;
    std::sort(atoms.begin(), atoms.end(), std::greater<>());

    const long d = long(gen.uniform(1, cfg.weight_denominator_bound));
    Rational beta(long(gen.uniform(d, 2 * d)), 2 * d);
    if (counter % 8 == 0 && !atoms.empty() && atoms[0] >= Rational(1, 2))
      beta = atoms[0];  // split boundary between the two output shapes

    cx = "alpha0 = " + alpha0.str() + " ; r = " + r.str() +
         " ; beta = " + beta.str();
    const Algebra oracle =
        closed_forms::fgf_scalars_times_two_atoms(alpha0, r, atoms, beta);

    std::vector<Algebra::Entry> entries{{alpha0, Summand::free_group(r)}};
    for (const auto& a : atoms) entries.push_back({a, Summand::scalar()});
    const Algebra left = Algebra::make(std::move(entries));
    const Algebra right = beta.is_one()
                              ? Algebra::scalar()
                              : Algebra::make({{beta, Summand::scalar()},
                                               {Rational(1) - beta,
                                                Summand::scalar()}});
    cx += " ; A = " + render_text(left);
    return iso_eq(oracle, free_product(left, right, false).algebra);
  });
}

SuiteReport suite_oracle_two_atoms_matrix(AlgebraGen& gen, const VerifyConfig& cfg) {
  int counter = 0;
  return run_suite("oracle-two-atoms-matrix", cfg.cases,
                   [&](SuiteReport&, std::string& cx) {
    ++counter;
    const int n = int(gen.uniform(2, cfg.max_matrix_size));
    const long d = long(gen.uniform(1, cfg.weight_denominator_bound));
    Rational alpha(long(gen.uniform(d, 2 * d - 1)), 2 * d);
    if (counter % 8 == 0)
      alpha = Rational(1) - Rational(1, long(n) * n);  // atom threshold

    cx = "alpha = " + alpha.str() + " ; n = " + std::to_string(n);
    const Algebra oracle = closed_forms::two_atoms_times_matrix(alpha, n);
    const Algebra left = Algebra::make({{alpha, Summand::scalar()},
                                        {Rational(1) - alpha, Summand::scalar()}});
    const Algebra right = Algebra::make({{Rational(1), Summand::matrix(n)}});
    return iso_eq(oracle, free_product(left, right, false).algebra);
  });
}

SuiteReport suite_oracle_times_matrix(AlgebraGen& gen, const VerifyConfig& cfg) {
  int counter = 0;
  return run_suite("oracle-times-matrix", cfg.cases,
                   [&](SuiteReport&, std::string& cx) {
    ++counter;
    const int m = int(gen.uniform(2, cfg.max_matrix_size));
    const ExtParam r = gen.uniform(0, 3) == 0 ? ExtParam(Rational(1))
                                              : ExtParam(gen.random_fgf_param());

    Rational alpha0 = gen.uniform(0, 3) == 0 ? Rational(0)
                                             : gen.random_unit_fraction();
    int part_count = int(gen.uniform(alpha0.is_zero() ? 1 : 0, 3));
    std::vector<std::pair<Rational, int>> parts;
    Rational total = alpha0;
    for (int i = 0; i < part_count; ++i) {
      parts.emplace_back(gen.random_unit_fraction(),
                         int(gen.uniform(1, cfg.max_matrix_size)));
      total += parts.back().first;
    }
    if (counter % 8 == 0) {
      // Pin the largest scalar exactly at the atom threshold.
      const Rational at = Rational(1) - Rational(1, long(m) * m);
      parts = {{at, 1}};
      alpha0 = Rational(1) - at;
      total = Rational(1);
    }
    alpha0 /= total;
    for (auto& [w, n] : parts) w /= total;

    std::vector<Algebra::Entry> entries;
    if (!alpha0.is_zero()) entries.push_back({alpha0, Summand::free_group(r)});
    for (const auto& [w, n] : parts) entries.push_back({w, Summand::matrix(n)});
    const Algebra left = Algebra::make(std::move(entries));
    cx = "A = " + render_text(left) + " ; m = " + std::to_string(m);

    const Algebra oracle = closed_forms::times_matrix_factor(
        alpha0, alpha0.is_zero() ? ExtParam(Rational(1)) : r, parts, m);
    const Algebra right = Algebra::make({{Rational(1), Summand::matrix(m)}});
    return iso_eq(oracle, free_product(left, right, false).algebra);
  });
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& cfg) {
  AlgebraGen gen(cfg);
  VerifyReport report{cfg, {}};
  report.suites.push_back(suite_fdim_additivity(gen, cfg));
  report.suites.push_back(suite_commutativity(gen, cfg));
  report.suites.push_back(suite_associativity(gen, cfg));
  report.suites.push_back(suite_oracle_fgf_pair(gen, cfg));
  report.suites.push_back(suite_oracle_fgf_scalars(gen, cfg));
  report.suites.push_back(suite_oracle_two_atoms_matrix(gen, cfg));
  report.suites.push_back(suite_oracle_times_matrix(gen, cfg));
  report.suites.push_back(suite_factoriality(gen, cfg));
  report.suites.push_back(suite_parameter_shift(gen, cfg));
  return report;
}

}  // namespace vnfree
