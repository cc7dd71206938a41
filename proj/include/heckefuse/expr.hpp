#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heckefuse/elementary.hpp"
#include "heckefuse/errors.hpp"
#include "heckefuse/ext_hecke.hpp"
#include "heckefuse/hecke.hpp"

namespace heckefuse {

/// Tokens of the element grammar
///
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := INT | 'e' | atom | '(' expr ')'
///   atom   := 'T[' ... ']' | '[' ... ']' | 'H(' ... ')'
///
/// Atoms are kept verbatim (including their brackets); an integer n stands for
/// n times the unit.
struct Token {
  enum class Kind { Int, Unit, Atom, Plus, Star, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text);

/// Recursive descent over the token stream.  `Ops` supplies
///   Value integer(const Integer&), add(Value, Value), mul(Value, Value),
///   Value atom(const Token&)   (throws ParseError on unknown atoms).
template <class Ops>
class ExpressionParser {
 public:
  using Value = decltype(std::declval<const Ops&>().integer(Integer(1)));

  ExpressionParser(std::string_view text, const Ops& ops) : tokens_(tokenize(text)), ops_(ops) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, peek().column); }

  Value expr() {
    Value v = term();
    while (peek().kind == Token::Kind::Plus) {
      ++pos_;
      v = ops_.add(std::move(v), term());
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (peek().kind == Token::Kind::Star) {
      ++pos_;
      v = ops_.mul(std::move(v), factor());
    }
    return v;
  }

  Value factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Int:
        ++pos_;
        return ops_.integer(Integer(t.text));
      case Token::Kind::Unit:
        ++pos_;
        return ops_.integer(Integer(1));
      case Token::Kind::Atom:
        ++pos_;
        return ops_.atom(t);
      case Token::Kind::LParen: {
        ++pos_;
        Value v = expr();
        if (peek().kind != Token::Kind::RParen) fail("expected ')'");
        ++pos_;
        return v;
      }
      case Token::Kind::End:
        fail("unexpected end of expression");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Ops& ops_;
};

template <class Ops>
auto parse_expression(std::string_view text, const Ops& ops) {
  return ExpressionParser<Ops>(text, ops).parse();
}

/// Finite labels accept the double-coset name ("e", "K", "K2") or any element
/// in cycle notation.
std::uint32_t parse_finite_label(const DoubleCosetSystem& system, std::string_view text, std::size_t column);

template <class Backend>
typename Backend::Label parse_backend_label(const Backend& backend, std::string_view text, std::size_t column) {
  try {
    return backend.parse_label(text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, column);
  }
}

inline FiniteHecke::Label parse_backend_label(const FiniteHecke& backend, std::string_view text, std::size_t column) {
  return parse_finite_label(backend.system(), text, column);
}

/// T[label] atoms over a Hecke backend.
template <class Backend>
struct HeckeOps {
  const Backend& backend;
  using Value = HeckeElement<Backend>;

  Value integer(const Integer& n) const { return Value::basis(backend.identity_label(), n); }
  Value add(Value a, const Value& b) const { return a += b; }
  Value mul(const Value& a, const Value& b) const { return convolve(backend, a, b); }
  Value atom(const Token& t) const {
    if (t.text.size() < 3 || t.text.rfind("T[", 0) != 0 || t.text.back() != ']')
      throw ParseError("expected T[label], got '" + t.text + "'", 1, t.column);
    return Value::basis(parse_backend_label(backend, std::string_view(t.text).substr(2, t.text.size() - 3), t.column + 2));
  }
};

/// BasisKey atoms "[label:idx]" (extended Hecke) or "H(perm,idx)"
/// (elementary), multiplied by `Fuser::fuse`.
template <class Fuser>
struct FusionOps {
  const Fuser& fuser;
  using Value = ExtHeckeElement;

  Value integer(const Integer& n) const {
    if (n < 0 || n > Integer(UINT64_MAX)) throw ParseError("coefficient out of range", 1, 1);
    return ExtHeckeElement::basis({0, 0}, n.convert_to<std::uint64_t>());
  }
  Value add(Value a, const Value& b) const { return a += b; }
  Value mul(const Value& a, const Value& b) const { return fuser.fuse(a, b); }
  Value atom(const Token& t) const;
};

BasisKey parse_ext_key(const ExtHeckePair& pair, const Token& t);
BasisKey parse_elementary_key(const ElementaryCalculus& calc, const Token& t);

template <>
inline ExtHeckeElement FusionOps<ExtHeckePair>::atom(const Token& t) const {
  return ExtHeckeElement::basis(parse_ext_key(fuser, t));
}

template <>
inline ExtHeckeElement FusionOps<ElementaryCalculus>::atom(const Token& t) const {
  return ExtHeckeElement::basis(parse_elementary_key(fuser, t));
}

}  // namespace heckefuse
