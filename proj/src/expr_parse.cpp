#include <cctype>
#include <string>
#include <vector>

#include "vnfree/expr.hpp"

namespace vnfree {
namespace {

enum class Tok {
  Number, Slash, Colon, Plus, Star, Comma,
  LParen, RParen, LBracket, RBracket,
  AtomC, AtomM, AtomLZ, AtomLZxM, AtomR, AtomLZxR, AtomD,
  KwLF, KwLG, KwFdim, KwLumpy, KwDim, KwIsFactor, KwCompress, KwInf,
  Word, End,
};

struct Token {
  Tok kind;
  int line = 1, col = 1;
  std::string text;     // raw spelling (words, numbers)
  int size = 0;         // attached size of M<n> / LZxM<n>
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (!eof()) {
      skip_space();
      if (eof()) break;
      out.push_back(next());
    }
    out.push_back(Token{Tok::End, line_, col_, "", 0});
    return out;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t off = 0) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
    return c;
  }
  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  Token next() {
    const int line = line_, col = col_;
    const char c = peek();
    auto simple = [&](Tok k) { advance(); return Token{k, line, col, {}, 0}; };
    switch (c) {
      case ':': return simple(Tok::Colon);
      case '+': return simple(Tok::Plus);
      case '*': return simple(Tok::Star);
      case ',': return simple(Tok::Comma);
      case '/': return simple(Tok::Slash);
      case ')': return simple(Tok::RParen);
      case '[': return simple(Tok::LBracket);
      case ']': return simple(Tok::RBracket);
      case '(':
        // "(+)" is the rendered direct-sum separator.
        if (peek(1) == '+' && peek(2) == ')') {
          advance(); advance(); advance();
          return Token{Tok::Plus, line, col, {}, 0};
        }
        return simple(Tok::LParen);
      default:
        break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      digits.push_back(advance());
      if (c == '-' && !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("'-' must start an integer", line, col);
      while (std::isdigit(static_cast<unsigned char>(peek())))
        digits.push_back(advance());
      return Token{Tok::Number, line, col, std::move(digits), 0};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        word.push_back(advance());
      return classify(std::move(word), line, col);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  Token classify(std::string word, int line, int col) {
    auto sized = [&](Tok k, std::string_view digits) {
      long n = 0;
      for (char d : digits) {
        n = n * 10 + (d - '0');
        if (n > 1'000'000) throw ParseError("size out of range", line, col);
      }
      if (n < 1) throw ParseError("size must be >= 1", line, col);
      return Token{k, line, col, std::move(word), static_cast<int>(n)};
    };
    auto all_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char d : s)
        if (!std::isdigit(static_cast<unsigned char>(d))) return false;
      return true;
    };

    if (word == "C") return {Tok::AtomC, line, col, word, 0};
    if (word == "LZ") return {Tok::AtomLZ, line, col, word, 0};
    if (word == "R") return {Tok::AtomR, line, col, word, 0};
    if (word == "LZxR") return {Tok::AtomLZxR, line, col, word, 0};
    if (word == "D") return {Tok::AtomD, line, col, word, 0};
    if (word == "LF") return {Tok::KwLF, line, col, word, 0};
    if (word == "LG") return {Tok::KwLG, line, col, word, 0};
    if (word == "fdim") return {Tok::KwFdim, line, col, word, 0};
    if (word == "lumpy") return {Tok::KwLumpy, line, col, word, 0};
    if (word == "dim") return {Tok::KwDim, line, col, word, 0};
    if (word == "isfactor") return {Tok::KwIsFactor, line, col, word, 0};
    if (word == "compress") return {Tok::KwCompress, line, col, word, 0};
    if (word == "inf") return {Tok::KwInf, line, col, word, 0};
    if (word.size() > 1 && word[0] == 'M' && all_digits({word.data() + 1, word.size() - 1}))
      return sized(Tok::AtomM, {word.data() + 1, word.size() - 1});
    if (word.size() > 4 && word.rfind("LZxM", 0) == 0 &&
        all_digits({word.data() + 4, word.size() - 4}))
      return sized(Tok::AtomLZxM, {word.data() + 4, word.size() - 4});
    return {Tok::Word, line, col, std::move(word), 0};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

constexpr int kMaxDepth = 200;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  AstPtr run() {
    AstPtr e = parse_expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t off = 0) const {
    return tokens_[std::min(idx_ + off, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[std::min(idx_++, tokens_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++idx_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError("expected " + expected + ", got " + describe(t), t.line, t.col);
  }
  void expect(Tok k, const std::string& expected) {
    if (!accept(k)) fail(expected);
  }
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Number: return "number '" + t.text + "'";
      case Tok::Word: return "identifier '" + t.text + "'";
      case Tok::Colon: return "':'";
      case Tok::Plus: return "'+'";
      case Tok::Star: return "'*'";
      case Tok::Comma: return "','";
      case Tok::Slash: return "'/'";
      case Tok::LParen: return "'('";
      case Tok::RParen: return "')'";
      case Tok::LBracket: return "'['";
      case Tok::RBracket: return "']'";
      default: return "'" + t.text + "'";
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) {
        const Token& t = p.peek();
        throw ParseError("expression nested too deeply", t.line, t.col);
      }
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  static bool atom_start(Tok k) {
    switch (k) {
      case Tok::AtomC: case Tok::AtomM: case Tok::AtomLZ: case Tok::AtomLZxM:
      case Tok::AtomR: case Tok::AtomLZxR: case Tok::AtomD:
      case Tok::KwLF: case Tok::KwLG: case Tok::KwFdim: case Tok::KwLumpy:
      case Tok::KwDim: case Tok::KwIsFactor: case Tok::KwCompress:
      case Tok::LParen: case Tok::LBracket:
        return true;
      default:
        return false;
    }
  }

  AstPtr parse_expr() {
    DepthGuard guard(*this);
    AstPtr left = parse_sum();
    while (accept(Tok::Star)) {
      AstPtr right = parse_sum();
      auto node = std::make_unique<Ast>();
      node->node = Ast::FreeProductNode{std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  struct WeightedPart {
    std::optional<Rational> weight;
    AstPtr node;
    int line, col;
  };

  AstPtr parse_sum() {
    std::vector<WeightedPart> parts;
    parts.push_back(parse_weighted());
    while (accept(Tok::Plus)) parts.push_back(parse_weighted());

    if (parts.size() == 1 && !parts[0].weight)
      return std::move(parts[0].node);

    // Multi-summand sums require explicit weights on every part.
    Ast::WeightedSum sum;
    for (auto& p : parts) {
      if (!p.weight)
        throw ParseError("weight required in a multi-summand sum", p.line, p.col);
      sum.children.emplace_back(std::move(*p.weight), std::move(p.node));
    }
    auto node = std::make_unique<Ast>();
    node->node = std::move(sum);
    return node;
  }

  WeightedPart parse_weighted() {
    const Token& at = peek();
    if (peek().kind == Tok::Number) {
      Rational w = parse_rational();
      expect(Tok::Colon, "':' after weight");
      return {w, parse_atom(), at.line, at.col};
    }
    // The rendered weight form "(p/q)atom".
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Number) {
      const std::size_t saved = idx_;
      ++idx_;
      Rational w = parse_rational();
      if (accept(Tok::RParen) && atom_start(peek().kind))
        return {w, parse_atom(), at.line, at.col};
      idx_ = saved;
    }
    return {std::nullopt, parse_atom(), at.line, at.col};
  }

  Rational parse_rational() {
    if (peek().kind != Tok::Number) fail("a rational number");
    const Token num = take();
    std::string text = num.text;
    if (accept(Tok::Slash)) {
      if (peek().kind != Tok::Number) fail("a denominator");
      const Token den = take();
      if (!den.text.empty() && den.text[0] == '-')
        throw ParseError("denominator must be positive", den.line, den.col);
      text += "/" + den.text;
    }
    try {
      return Rational::from_string(text);
    } catch (const RangeError& e) {
      throw ParseError(e.what(), num.line, num.col);
    }
  }

  ExtParam parse_param() {
    if (accept(Tok::KwInf)) return ExtParam::infinity();
    return ExtParam(parse_rational());
  }

  AstPtr parse_atom() {
    DepthGuard guard(*this);
    const Token& t = peek();
    auto atom = [&](Summand s) {
      ++idx_;
      auto node = std::make_unique<Ast>();
      node->node = Ast::Atom{std::move(s)};
      return node;
    };
    switch (t.kind) {
      case Tok::AtomC: return atom(Summand::scalar());
      case Tok::AtomM: return atom(Summand::matrix(t.size));
      case Tok::AtomLZ: return atom(Summand::diffuse_abelian_matrix(1));
      case Tok::AtomLZxM: return atom(Summand::diffuse_abelian_matrix(t.size));
      case Tok::AtomR: return atom(Summand::hyperfinite());
      case Tok::AtomLZxR: return atom(Summand::abelian_tensor_hyperfinite());
      case Tok::AtomD: return atom(Summand::diffuse_unspecified());
      case Tok::KwLF: {
        const Token lf = take();
        expect(Tok::LParen, "'(' after LF");
        ExtParam p = parse_param();
        expect(Tok::RParen, "')'");
        try {
          auto node = std::make_unique<Ast>();
          node->node = Ast::Atom{Summand::free_group(std::move(p))};
          return node;
        } catch (const RangeError& e) {
          throw ParseError(e.what(), lf.line, lf.col);
        }
      }
      case Tok::KwLG: {
        take();
        expect(Tok::LParen, "'(' after LG");
        const bool wordlike =
            !peek().text.empty() &&
            (std::isalpha(static_cast<unsigned char>(peek().text[0])) ||
             peek().text[0] == '_');
        if (!wordlike) fail("a group name");
        const Token name = take();
        expect(Tok::RParen, "')'");
        auto node = std::make_unique<Ast>();
        node->node = Ast::GroupAtom{name.text};
        return node;
      }
      case Tok::KwFdim: return parse_unary_call(Ast::Fn::Fdim);
      case Tok::KwLumpy: return parse_unary_call(Ast::Fn::Lumpy);
      case Tok::KwDim: return parse_unary_call(Ast::Fn::Dim);
      case Tok::KwIsFactor: {
        take();
        expect(Tok::LParen, "'(' after isfactor");
        Ast::Call call{Ast::Fn::IsFactor, {}, std::nullopt};
        call.args.push_back(parse_expr());
        expect(Tok::Comma, "','");
        call.args.push_back(parse_expr());
        expect(Tok::RParen, "')'");
        auto node = std::make_unique<Ast>();
        node->node = std::move(call);
        return node;
      }
      case Tok::KwCompress: {
        take();
        expect(Tok::LParen, "'(' after compress");
        Ast::Call call{Ast::Fn::Compress, {}, std::nullopt};
        call.args.push_back(parse_expr());
        expect(Tok::Comma, "','");
        call.scalar_arg = parse_rational();
        expect(Tok::RParen, "')'");
        auto node = std::make_unique<Ast>();
        node->node = std::move(call);
        return node;
      }
      case Tok::LParen: {
        take();
        AstPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        take();
        AstPtr e = parse_atom();
        expect(Tok::RBracket, "']'");
        return e;
      }
      default:
        fail("an atom (C, M<n>, LZ, LZxM<n>, R, LZxR, D, LF, LG, a call or '(')");
    }
  }

  AstPtr parse_unary_call(Ast::Fn fn) {
    const Token& t = take();
    expect(Tok::LParen, "'(' after " + t.text);
    Ast::Call call{fn, {}, std::nullopt};
    call.args.push_back(parse_expr());
    expect(Tok::RParen, "')'");
    auto node = std::make_unique<Ast>();
    node->node = std::move(call);
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  int depth_ = 0;
};

}  // namespace

AstPtr parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace vnfree
