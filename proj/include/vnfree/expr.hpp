#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vnfree/free_product.hpp"
#include "vnfree/groups.hpp"

namespace vnfree {

// Expression language of the calculator.
//
//   expr     := sum ('*' sum)*                 -- '*' is the free product
//   sum      := weighted ('+' weighted)*       -- '+' is the direct sum
//   weighted := (rational ':')? atom
//   atom     := 'C' | 'M'n | 'LZ' | 'LZxM'n | 'R' | 'LZxR' | 'D'
//             | 'LF' '(' param ')' | 'LG' '(' ident ')' | call | '(' expr ')'
//   call     := ('fdim'|'lumpy'|'dim') '(' expr ')'
//             | 'isfactor' '(' expr ',' expr ')'
//             | 'compress' '(' expr ',' rational ')'
//   param    := rational | 'inf'
//   rational := int ('/' posint)?
//
// Rendered output is also accepted: "(p/q)atom" as a weight prefix, "(+)" as
// the direct sum separator, and brackets around compound atoms ("[LZxM2]").

struct Ast;
using AstPtr = std::unique_ptr<Ast>;

struct Ast {
  struct WeightedSum {
    std::vector<std::pair<Rational, AstPtr>> children;
  };
  struct FreeProductNode {
    AstPtr left, right;
  };
  struct Atom {
    Summand summand;
  };
  struct GroupAtom {
    std::string name;
  };
  enum class Fn { Fdim, Lumpy, Dim, IsFactor, Compress };
  struct Call {
    Fn fn;
    std::vector<AstPtr> args;
    std::optional<Rational> scalar_arg;  // compress's second argument
  };

  std::variant<WeightedSum, FreeProductNode, Atom, GroupAtom, Call> node;
};

// Total on arbitrary input: returns an Ast or throws ParseError. Never
// crashes, whatever the bytes.
AstPtr parse(std::string_view text);

struct Value {
  std::variant<Algebra, ExtParam, bool> v;

  bool is_algebra() const { return std::holds_alternative<Algebra>(v); }
  const Algebra& algebra() const { return std::get<Algebra>(v); }
  bool is_number() const { return std::holds_alternative<ExtParam>(v); }
  const ExtParam& number() const { return std::get<ExtParam>(v); }
  bool is_bool() const { return std::holds_alternative<bool>(v); }
  bool boolean() const { return std::get<bool>(v); }
};

struct EvalOptions {
  bool strict = false;
  // Extra group descriptors consulted by LG(...) before the built-ins.
  const std::vector<GroupDescriptor>* groups = nullptr;
};

struct EvalResult {
  Value value;
  // Every engine rule applied during evaluation, in evaluation order.
  std::vector<Justification> justifications;
  // Set when the root node was a free product; carries atom provenance.
  std::optional<FreeProductResult> root_product;
};

EvalResult evaluate(const Ast& ast, const EvalOptions& opts = {});

enum class RenderStyle { Text, Json };

std::string render_text(const Algebra& a);
std::string render_text(const Value& v);
std::string render_json(const EvalResult& r);
std::string render(const EvalResult& r, RenderStyle style);

}  // namespace vnfree
