#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "vnfree/verify.hpp"

using namespace testutil;

namespace {

std::string eval_text(std::string_view dsl) {
  return render_text(evaluate(*parse(dsl)).value);
}

// Random algebras over every summand kind, not just the generator's set.
Algebra any_kind_algebra(std::mt19937_64& rng) {
  const int count = 1 + int(rng() % 4);
  std::vector<Algebra::Entry> entries;
  std::vector<Rational> raw;
  Rational total(0);
  for (int i = 0; i < count; ++i) {
    Summand s = Summand::scalar();
    switch (rng() % 7) {
      case 0: s = Summand::scalar(); break;
      case 1: s = Summand::matrix(2 + int(rng() % 3)); break;
      case 2: s = Summand::diffuse_abelian_matrix(1 + int(rng() % 3)); break;
      case 3: s = Summand::hyperfinite(); break;
      case 4: s = Summand::abelian_tensor_hyperfinite(); break;
      case 5: s = Summand::diffuse_unspecified(); break;
      case 6:
        s = Summand::free_group(
            ExtParam(Rational(long(13 + rng() % 30), long(1 + rng() % 12))));
        break;
    }
    raw.emplace_back(1 + long(rng() % 12), 1 + long(rng() % 12));
    total += raw.back();
    entries.push_back({Q(0), std::move(s)});
  }
  for (int i = 0; i < count; ++i) entries[i].weight = raw[i] / total;
  return Algebra::make(std::move(entries));
}

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("grammar goldens: atoms") {
  CHECK(iso_eq(alg("C"), Algebra::scalar()));
  CHECK(iso_eq(alg("M3"), Algebra::make({{Q(1), Summand::matrix(3)}})));
  CHECK(iso_eq(alg("LZ"),
               Algebra::make({{Q(1), Summand::diffuse_abelian_matrix(1)}})));
  CHECK(iso_eq(alg("LZxM4"),
               Algebra::make({{Q(1), Summand::diffuse_abelian_matrix(4)}})));
  CHECK(iso_eq(alg("R"), Algebra::make({{Q(1), Summand::hyperfinite()}})));
  CHECK(iso_eq(alg("LZxR"),
               Algebra::make({{Q(1), Summand::abelian_tensor_hyperfinite()}})));
  CHECK(iso_eq(alg("D"),
               Algebra::make({{Q(1), Summand::diffuse_unspecified()}})));
  CHECK(iso_eq(alg("LF(7/2)"), lf(ExtParam(Q(7, 2)))));
  CHECK(iso_eq(alg("LF(inf)"), lf(ExtParam::infinity())));
  CHECK(iso_eq(alg("LG(S3)"), alg("1/6:C + 1/6:C + 2/3:M2")));
}

TEST_CASE("grammar goldens: structure") {
  const AstPtr sum = parse("1/2:C + 1/2:C");
  const auto* ws = std::get_if<Ast::WeightedSum>(&sum->node);
  REQUIRE(ws != nullptr);
  REQUIRE(ws->children.size() == 2);
  CHECK(ws->children[0].first == Q(1, 2));

  const AstPtr prod = parse("(1/2:C + 1/2:C) * M2");
  const auto* fp = std::get_if<Ast::FreeProductNode>(&prod->node);
  REQUIRE(fp != nullptr);
  CHECK(std::holds_alternative<Ast::WeightedSum>(fp->left->node));
  CHECK(std::holds_alternative<Ast::Atom>(fp->right->node));

  const AstPtr call = parse("fdim(LF(3/2))");
  const auto* c = std::get_if<Ast::Call>(&call->node);
  REQUIRE(c != nullptr);
  CHECK(c->fn == Ast::Fn::Fdim);
  REQUIRE(c->args.size() == 1);
  const auto* atom = std::get_if<Ast::Atom>(&c->args[0]->node);
  REQUIRE(atom != nullptr);
  CHECK(atom->summand == Summand::free_group(ExtParam(Q(3, 2))));
}

TEST_CASE("precedence: weight binds over sum binds over product") {
  // a:X + b:Y * Z parses as (a:X + b:Y) * Z.
  const AstPtr e = parse("3/5:C + 2/5:C * M2");
  const auto* fp = std::get_if<Ast::FreeProductNode>(&e->node);
  REQUIRE(fp != nullptr);
  const auto* left = std::get_if<Ast::WeightedSum>(&fp->left->node);
  REQUIRE(left != nullptr);
  CHECK(left->children.size() == 2);
  // Chained products associate to the left.
  const AstPtr chain = parse("LZ * LZ * LZ");
  const auto* outer = std::get_if<Ast::FreeProductNode>(&chain->node);
  REQUIRE(outer != nullptr);
  CHECK(std::holds_alternative<Ast::FreeProductNode>(outer->left->node));
  CHECK(iso_eq(alg("LZ * LZ * LZ"), alg("LF(3)")));
  // Parentheses override.
  CHECK(iso_eq(alg("1/2:(1/3:C + 2/3:C) + 1/2:M2"),
               alg("1/6:C + 1/3:C + 1/2:M2")));
}

TEST_CASE("parse errors carry position and expectation") {
  try {
    parse("1/2:C +\n1/2:");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 5);
    CHECK(std::string(e.what()).find("expected an atom") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("C + C"), ParseError);  // weights mandatory
  CHECK_THROWS_AS(parse("1/0:C"), ParseError);
  CHECK_THROWS_AS(parse("LF(1/2)"), ParseError);
  CHECK_THROWS_AS(parse("LF(2"), ParseError);
  CHECK_THROWS_AS(parse("M0"), ParseError);
  CHECK_THROWS_AS(parse("1/2:C + 1/-2:C"), ParseError);
  CHECK_THROWS_AS(parse("C C"), ParseError);
  CHECK_THROWS_AS(parse("compress(LF(2))"), ParseError);
}

TEST_CASE("evaluation goldens") {
  CHECK(eval_text("LF(2) * LF(3)") == "LF(5)");
  CHECK(eval_text("fdim(1/3:C + 2/3:C)") == "4/9");
  CHECK(eval_text("fdim(LG(S3))") == "5/6");
  CHECK(eval_text("dim(M2)") == "4");
  CHECK(eval_text("dim(LZ)") == "inf");
  CHECK(eval_text("lumpy(3/4:C + 1/4:C)") == "3/4");
  CHECK(eval_text("isfactor(M2, M2)") == "true");
  CHECK(eval_text("isfactor(3/4:C + 1/4:C, 1/3:C + 1/3:C + 1/3:C)") == "false");
  CHECK(eval_text("compress(LF(2), 1/2)") == "LF(5)");
  CHECK(eval_text("compress(LZ, 1/2)") == "LZ");
  CHECK(eval_text("compress(LF(5), 2)") == "LF(2)");
  CHECK(eval_text("fdim(compress(LF(3/2), 1/2) * LF(3))") == "6");
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evaluate(*parse("compress(M2, 1/2)")), TypeMismatchError);
  CHECK_THROWS_AS(evaluate(*parse("compress(1/2:LF(2) + 1/2:C, 1/2)")),
                  TypeMismatchError);
  CHECK_THROWS_AS(evaluate(*parse("compress(LF(2), 0)")), RangeError);
  CHECK_THROWS_AS(evaluate(*parse("fdim(fdim(C))")), TypeMismatchError);
  CHECK_THROWS_AS(evaluate(*parse("fdim(C) * LZ")), TypeMismatchError);
  CHECK_THROWS_AS(evaluate(*parse("1/2:fdim(C) + 1/2:C")), TypeMismatchError);
  CHECK_THROWS_AS(evaluate(*parse("1/2:C + 1/3:C")), WeightSumError);
  CHECK_THROWS_AS(evaluate(*parse("-1/2:C + 3/2:C")), RangeError);
  CHECK_THROWS_AS(evaluate(*parse("LG(S5)")), UnknownGroupError);
  CHECK_THROWS_AS(evaluate(*parse("isfactor(3/4:C + 1/4:C, 1/2:C + 1/2:C)")),
                  HypothesisViolation);
}

TEST_CASE("render goldens") {
  CHECK(eval_text("M2") == "M2");
  CHECK(eval_text("1:M2") == "M2");
  CHECK(eval_text("fdim(LF(inf))") == "inf");
  CHECK(eval_text("3/5:C + 2/5:C * (1/2:C + 1/2:C)") ==
        "(1/10)C (+) (1/10)C (+) (4/5)[LZxM2]");
  CHECK(eval_text("4/5:C + 1/5:C * M2") == "(1/5)M2 (+) (4/5)LF(9/8)");
  CHECK(eval_text("LG(Z)") == "D");
  CHECK(eval_text("LZxR") == "[LZxR]");
}

TEST_CASE("rendered output parses back") {
  CHECK(iso_eq(alg("(1/10)C (+) (1/10)C (+) (4/5)[LZxM2]"),
               alg("1/10:C + 1/10:C + 4/5:LZxM2")));
  CHECK(iso_eq(alg("(1/5)M2 (+) (4/5)LF(9/8)"), alg("1/5:M2 + 4/5:LF(9/8)")));
  CHECK(iso_eq(alg("[LZxR]"), alg("LZxR")));
}

TEST_CASE("text round trip over random algebras of every kind") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 500; ++i) {
    const Algebra a = any_kind_algebra(rng);
    const Algebra back = alg(render_text(a));
    CHECK(iso_eq(a, back));
  }
}

TEST_CASE("json output") {
  const EvalResult r = evaluate(*parse("4/5:C + 1/5:C * M2"));
  CHECK(render_json(r) ==
        R"({"summands":[{"weight":"1/5","kind":"matrix","n":2,"atom_source":[1,0]},)"
        R"({"weight":"4/5","kind":"fgf","param":"9/8"}],"fdim":"107/100",)"
        R"("justification":["Thm3.6"]})");
  CHECK(render_json(evaluate(*parse("fdim(M2)"))) == R"({"value":"3/4"})");
  CHECK(render_json(evaluate(*parse("isfactor(M2, M2)"))) ==
        R"({"value":true})");
  CHECK(render_json(evaluate(*parse("LG(Z)"))) ==
        R"({"summands":[{"weight":"1","kind":"diffuse_unspecified"}],)"
        R"("fdim":"1","justification":[]})");
  // Justifications accumulate across every engine call in the expression.
  const EvalResult fold = evaluate(*parse("LZ * LZ * LZ"));
  REQUIRE(fold.justifications.size() == 2);
}

TEST_CASE("parser survives arbitrary bytes") {
  std::mt19937_64 rng(777);
  const std::string alphabet =
      "CMLZRDFG()[]+*:/0123456789 \t\n_abcdefinoprstuxy,-";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int len = int(rng() % 40);
    for (int k = 0; k < len; ++k) {
      if (rng() % 8 == 0)
        s.push_back(char(rng() % 256));
      else
        s.push_back(alphabet[rng() % alphabet.size()]);
    }
    try {
      const AstPtr ast = parse(s);
      evaluate(*ast);
    } catch (const Error&) {
      // any library error is acceptable; crashes are not
    }
  }
}

TEST_CASE("deep nesting is rejected, not crashed on") {
  std::string deep;
  for (int i = 0; i < 5000; ++i) deep += "(";
  deep += "C";
  for (int i = 0; i < 5000; ++i) deep += ")";
  CHECK_THROWS_AS(parse(deep), ParseError);
}

}  // TEST_SUITE
