#include "vnfree/closed_forms.hpp"
#include "vnfree/expr.hpp"
#include "vnfree/fdim.hpp"

namespace vnfree {
namespace {

class Evaluator {
 public:
  explicit Evaluator(const EvalOptions& opts) : opts_(opts) {}

  Value eval(const Ast& ast) {
    return std::visit([&](const auto& node) { return eval_node(node); },
                      ast.node);
  }

  FreeProductResult eval_product(const Ast::FreeProductNode& node) {
    const Algebra left = algebra_of(*node.left, "free product");
    const Algebra right = algebra_of(*node.right, "free product");
    FreeProductResult r = free_product(left, right, opts_.strict);
    for (const auto& j : r.trace) justifications_.push_back(j);
    return r;
  }

  std::vector<Justification> take_justifications() {
    return std::move(justifications_);
  }

 private:
  Algebra algebra_of(const Ast& ast, const char* who) {
    Value v = eval(ast);
    if (!v.is_algebra())
      throw TypeMismatchError(std::string(who) + " expects an algebra");
    return v.algebra();
  }

  Value eval_node(const Ast::WeightedSum& sum) {
    std::vector<std::pair<Rational, Algebra>> parts;
    parts.reserve(sum.children.size());
    for (const auto& [w, child] : sum.children)
      parts.emplace_back(w, algebra_of(*child, "direct sum"));
    return Value{direct_sum(parts)};
  }

  Value eval_node(const Ast::FreeProductNode& node) {
    return Value{eval_product(node).algebra};
  }

  Value eval_node(const Ast::Atom& atom) {
    return Value{Algebra::make({{Rational(1), atom.summand}})};
  }

  Value eval_node(const Ast::GroupAtom& g) {
    if (opts_.groups) {
      for (const auto& d : *opts_.groups)
        if (d.name == g.name) return Value{group_algebra(d)};
    }
    return Value{group_algebra(builtin_group(g.name))};
  }

  Value eval_node(const Ast::Call& call) {
    switch (call.fn) {
      case Ast::Fn::Fdim:
        return Value{fdim(algebra_of(*call.args[0], "fdim"))};
      case Ast::Fn::Lumpy:
        return Value{ExtParam(lumpiness(algebra_of(*call.args[0], "lumpy")))};
      case Ast::Fn::Dim:
        return Value{dim(algebra_of(*call.args[0], "dim"))};
      case Ast::Fn::IsFactor:
        return Value{product_is_factor(algebra_of(*call.args[0], "isfactor"),
                                       algebra_of(*call.args[1], "isfactor"))};
      case Ast::Fn::Compress: {
        const Algebra a = algebra_of(*call.args[0], "compress");
        // The compressed algebra must be a single full-weight free group
        // factor (or L(Z), playing the parameter-1 role).
        if (a.summands().size() != 1)
          throw TypeMismatchError("compress expects a single free group factor");
        const Summand& s = a.summands()[0].summand;
        ExtParam param(Rational(1));
        if (s.is_free_group()) {
          param = s.param();
        } else if (!(s.kind() == Summand::Kind::DiffuseAbelianMatrix &&
                     s.size() == 1)) {
          throw TypeMismatchError("compress expects a free group factor or LZ");
        }
        const ExtParam t = closed_forms::fgf_compress(param, *call.scalar_arg);
        return Value{Algebra::make({{Rational(1), Summand::free_group(t)}})};
      }
    }
    throw InternalInvariantViolation("unknown call");
  }

  const EvalOptions& opts_;
  std::vector<Justification> justifications_;
};

}  // namespace

EvalResult evaluate(const Ast& ast, const EvalOptions& opts) {
  Evaluator ev(opts);
  if (const auto* product = std::get_if<Ast::FreeProductNode>(&ast.node)) {
    FreeProductResult r = ev.eval_product(*product);
    Value v{r.algebra};
    return EvalResult{std::move(v), ev.take_justifications(), std::move(r)};
  }
  Value v = ev.eval(ast);
  return EvalResult{std::move(v), ev.take_justifications(), std::nullopt};
}

}  // namespace vnfree
