#include "heckefuse/expr.hpp"

#include <cctype>
#include <charconv>

namespace heckefuse {

namespace {

std::uint32_t parse_index(std::string_view text, std::size_t column) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected an irreducible index, got '" + std::string(text) + "'", 1, column);
  return value;
}

std::size_t find_close(std::string_view text, std::size_t open, char o, char c) {
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == o) ++depth;
    if (text[i] == c && --depth == 0) return i;
  }
  throw ParseError(std::string("unbalanced '") + o + "'", 1, open + 1);
}

Elem parse_element(const DoubleCosetSystem& system, std::string_view text, std::size_t column) {
  const FiniteGroup& G = *system.group();
  Perm p;
  try {
    p = Perm::from_cycles(text, G.degree());
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, column);
  }
  auto g = G.find(p);
  if (!g) throw ParseError("'" + std::string(text) + "' is not an element of G", 1, column);
  return *g;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (c == 'T' && i + 1 < text.size() && text[i + 1] == '[') {
      const std::size_t j = find_close(text, i + 1, '[', ']');
      out.push_back({Token::Kind::Atom, std::string(text.substr(i, j - i + 1)), col});
      i = j + 1;
    } else if (c == 'H' && i + 1 < text.size() && text[i + 1] == '(') {
      const std::size_t j = find_close(text, i + 1, '(', ')');
      out.push_back({Token::Kind::Atom, std::string(text.substr(i, j - i + 1)), col});
      i = j + 1;
    } else if (c == '[') {
      const std::size_t j = find_close(text, i, '[', ']');
      out.push_back({Token::Kind::Atom, std::string(text.substr(i, j - i + 1)), col});
      i = j + 1;
    } else if (c == 'e' && (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      out.push_back({Token::Kind::Unit, "e", col});
      ++i;
    } else if (c == '+' || c == '*' || c == '(' || c == ')') {
      static constexpr Token::Kind kinds[] = {Token::Kind::Plus, Token::Kind::Star, Token::Kind::LParen,
                                              Token::Kind::RParen};
      const auto k = kinds[std::string_view("+*()").find(c)];
      out.push_back({k, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
    }
  }
  out.push_back({Token::Kind::End, "end of input", text.size() + 1});
  return out;
}

std::uint32_t parse_finite_label(const DoubleCosetSystem& system, std::string_view text, std::size_t column) {
  if (auto l = system.find_name(text)) return static_cast<std::uint32_t>(*l);
  if (!text.empty() && text.front() == '(') return system.label(parse_element(system, text, column));
  throw ParseError("unknown double coset '" + std::string(text) + "'", 1, column);
}

BasisKey parse_ext_key(const ExtHeckePair& pair, const Token& t) {
  const std::string_view s(t.text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected [label:index], got '" + t.text + "'", 1, t.column);
  const std::string_view body = s.substr(1, s.size() - 2);
  const auto colon = body.rfind(':');
  if (colon == std::string_view::npos) throw ParseError("expected [label:index]", 1, t.column);
  const BasisKey key{parse_finite_label(pair.system(), body.substr(0, colon), t.column + 1),
                     parse_index(body.substr(colon + 1), t.column + colon + 2)};
  if (key.irrep >= pair.irreps_at(key.label).size())
    throw ParseError("irreducible index out of range in '" + t.text + "'", 1, t.column + colon + 2);
  return key;
}

BasisKey parse_elementary_key(const ElementaryCalculus& calc, const Token& t) {
  const std::string_view s(t.text);
  if (s.size() < 3 || s.rfind("H(", 0) != 0 || s.back() != ')')
    throw ParseError("expected H(perm,index), got '" + t.text + "'", 1, t.column);
  const std::string_view body = s.substr(2, s.size() - 3);
  const auto comma = body.rfind(',');
  if (comma == std::string_view::npos) throw ParseError("expected H(perm,index)", 1, t.column);
  const Elem delta = parse_element(calc.system(), body.substr(0, comma), t.column + 2);
  const BasisKey key{calc.system().label(delta), parse_index(body.substr(comma + 1), t.column + comma + 3)};
  if (key.irrep >= calc.irreps_at(key.label).size())
    throw ParseError("irreducible index out of range in '" + t.text + "'", 1, t.column + comma + 3);
  return key;
}

}  // namespace heckefuse
