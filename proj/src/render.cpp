#include <json.hpp>

#include "vnfree/expr.hpp"
#include "vnfree/fdim.hpp"

namespace vnfree {
namespace {

std::string summand_token(const Summand& s) {
  switch (s.kind()) {
    case Summand::Kind::Matrix:
      return s.size() == 1 ? "C" : "M" + std::to_string(s.size());
    case Summand::Kind::FreeGroup:
      return "LF(" + s.param().str() + ")";
    case Summand::Kind::DiffuseAbelianMatrix:
      return s.size() == 1 ? "LZ" : "[LZxM" + std::to_string(s.size()) + "]";
    case Summand::Kind::Hyperfinite:
      return "R";
    case Summand::Kind::AbelianTensorHyperfinite:
      return "[LZxR]";
    case Summand::Kind::DiffuseUnspecified:
      return "D";
  }
  throw InternalInvariantViolation("unknown summand kind");
}

const char* kind_tag(const Summand& s) {
  switch (s.kind()) {
    case Summand::Kind::Matrix: return "matrix";
    case Summand::Kind::FreeGroup: return "fgf";
    case Summand::Kind::DiffuseAbelianMatrix: return "diffuse_abelian_matrix";
    case Summand::Kind::Hyperfinite: return "hyperfinite_II1";
    case Summand::Kind::AbelianTensorHyperfinite: return "abelian_tensor_R";
    case Summand::Kind::DiffuseUnspecified: return "diffuse_unspecified";
  }
  throw InternalInvariantViolation("unknown summand kind");
}

}  // namespace

std::string render_text(const Algebra& a) {
  const auto& s = a.summands();
  if (s.size() == 1 && s[0].weight.is_one()) return summand_token(s[0].summand);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " (+) ";
    out += "(" + s[i].weight.str() + ")" + summand_token(s[i].summand);
  }
  return out;
}

std::string render_text(const Value& v) {
  if (v.is_algebra()) return render_text(v.algebra());
  if (v.is_number()) return v.number().str();
  return v.boolean() ? "true" : "false";
}

std::string render_json(const EvalResult& r) {
  using json = nlohmann::ordered_json;

  if (!r.value.is_algebra()) {
    json j;
    if (r.value.is_number())
      j["value"] = r.value.number().str();
    else
      j["value"] = r.value.boolean();
    return j.dump();
  }

  const Algebra& a = r.value.algebra();
  json summands = json::array();
  for (std::size_t i = 0; i < a.summands().size(); ++i) {
    const auto& [w, s] = a.summands()[i];
    json entry;
    entry["weight"] = w.str();
    entry["kind"] = kind_tag(s);
    if (s.kind() == Summand::Kind::Matrix ||
        s.kind() == Summand::Kind::DiffuseAbelianMatrix)
      entry["n"] = s.size();
    if (s.kind() == Summand::Kind::FreeGroup)
      entry["param"] = s.param().str();
    if (r.root_product) {
      for (const auto& atom : r.root_product->atoms) {
        if (atom.position == static_cast<int>(i)) {
          entry["atom_source"] =
              json::array({atom.source.left_index, atom.source.right_index});
          break;
        }
      }
    }
    summands.push_back(std::move(entry));
  }

  json labels = json::array();
  for (const auto& j : r.justifications)
    labels.push_back(std::string(rule_label(j.rule)));

  json out;
  out["summands"] = std::move(summands);
  out["fdim"] = fdim(a).str();
  out["justification"] = std::move(labels);
  return out.dump();
}

std::string render(const EvalResult& r, RenderStyle style) {
  return style == RenderStyle::Json ? render_json(r) : render_text(r.value);
}

}  // namespace vnfree
