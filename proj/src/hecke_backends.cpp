#include "heckefuse/hecke.hpp"

#include <set>

#include <boost/integer/common_factor.hpp>

namespace heckefuse {

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

Rational floor_of(const Rational& x) {
  return Rational(floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x)));
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// g = x a + y b with g >= 0.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Integer as_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw DomainError("expected an integer, got " + to_string(q));
  return boost::multiprecision::numerator(q);
}

}  // namespace

std::string to_string(const Rational& q) {
  const Integer& d = boost::multiprecision::denominator(q);
  if (d == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + d.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError("expected an integer", 1, offset + i + 1);
    for (std::size_t j = i; j < part.size(); ++j)
      if (part[j] < '0' || part[j] > '9') throw ParseError("unexpected character in number", 1, offset + j + 1);
    return Integer(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const Integer num = parse_int(text.substr(0, slash), 0);
  const Integer den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", 1, slash + 2);
  return Rational(num, den);
}

// --- finite ----------------------------------------------------------------

FiniteHecke::Label FiniteHecke::inverse_label(Label l) const {
  const DoubleCosetSystem& sys = *system_;
  return sys.label(sys.group()->inv(sys[l].representative));
}

std::vector<FiniteHecke::Label> FiniteHecke::labels() const {
  std::vector<Label> out(system_->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Label>(i);
  return out;
}

FiniteHecke::Label FiniteHecke::parse_label(std::string_view text) const {
  if (auto l = system_->find_name(text)) return static_cast<Label>(*l);
  throw ParseError("unknown double coset '" + std::string(text) + "'", 1, 1);
}

// --- GL2 -------------------------------------------------------------------

GL2Hecke::Label GL2Hecke::label_of(const Element& g) const {
  const Rational det = g.a * g.d - g.b * g.c;
  if (det <= 0) throw DomainError("GL2 backend handles positive determinant only");
  Integer s = 1;
  for (const Rational* x : {&g.a, &g.b, &g.c, &g.d}) s = boost::multiprecision::lcm(s, boost::multiprecision::denominator(*x));
  const Rational scale(s);
  Integer d1 = 0;
  for (const Rational* x : {&g.a, &g.b, &g.c, &g.d}) d1 = gcd(d1, as_integer(*x * scale));
  const Integer det_n = as_integer(det * scale * scale);
  return {Rational(d1, s), Rational(det_n / d1, s)};
}

GL2Hecke::Element GL2Hecke::mul(const Element& x, const Element& y) const {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::vector<GL2Hecke::Element> GL2Hecke::right_coset_reps(const Label& l) const {
  const Integer n = as_integer(l.d2 / l.d1);
  std::vector<Element> out;
  for (Integer a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const Integer d = n / a;
    for (Integer b = 0; b < d; ++b) {
      if (gcd(gcd(a, b), d) != 1) continue;
      out.push_back({l.d1 * Rational(a), l.d1 * Rational(b), Rational(0), l.d1 * Rational(d)});
    }
  }
  return out;
}

Integer GL2Hecke::right_count(const Label& l) const { return right_coset_reps(l).size(); }

std::vector<GL2Hecke::Label> GL2Hecke::labels(unsigned bound) const {
  std::vector<Label> out;
  for (unsigned d1 = 1; d1 <= bound; ++d1)
    for (unsigned d2 = d1; d2 <= bound; d2 += d1) out.push_back({Rational(d1), Rational(d2)});
  return out;
}

std::string GL2Hecke::format_label(const Label& l) const { return to_string(l.d1) + "," + to_string(l.d2); }

GL2Hecke::Label GL2Hecke::parse_label(std::string_view text) const {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("GL2 label needs the form d1,d2", 1, 1);
  Label l{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  if (l.d1 <= 0 || l.d2 <= 0) throw ParseError("elementary divisors must be positive", 1, 1);
  const Rational q = l.d2 / l.d1;
  if (boost::multiprecision::denominator(q) != 1) throw ParseError("d1 must divide d2", 1, comma + 1);
  return l;
}

GL2Hecke::Element GL2Hecke::hermite_form(const Element& g) {
  Integer a = as_integer(g.a), b = as_integer(g.b), c = as_integer(g.c), d = as_integer(g.d);
  Integer x, y;
  const Integer h = extended_gcd(a, c, x, y);
  if (h == 0) throw DomainError("singular matrix");
  // U = [[x, y], [-c/h, a/h]] has determinant 1 and clears the lower-left entry.
  const Integer top_b = x * b + y * d;
  const Integer bottom_d = (-c / h) * b + (a / h) * d;
  if (bottom_d <= 0) throw DomainError("GL2 backend handles positive determinant only");
  const Integer top_b_reduced = top_b - floor_div(top_b, bottom_d) * bottom_d;
  return {Rational(h), Rational(top_b_reduced), Rational(0), Rational(bottom_d)};
}

// --- Bost-Connes ------------------------------------------------------------

BCHecke::Label BCHecke::label_of(const Element& g) const {
  if (g.a <= 0) throw DomainError("ax+b backend needs a > 0");
  const Integer& q = boost::multiprecision::denominator(g.a);
  const Rational scaled = g.b * Rational(q);
  const Rational residue = (scaled - floor_of(scaled)) / Rational(q);
  return {g.a, residue};
}

std::vector<BCHecke::Element> BCHecke::right_coset_reps(const Label& l) const {
  const Integer& q = boost::multiprecision::denominator(l.a);
  std::vector<Element> out;
  for (Integer k = 0; k < q; ++k) out.push_back({l.a, l.b + Rational(k, q)});
  return out;
}

Integer BCHecke::right_count(const Label& l) const { return right_coset_reps(l).size(); }

Integer BCHecke::left_count(const Label& l) const {
  // Left cosets (a, b + aZ) inside (a, b + (1/q)Z): index of aZ = (p/q)Z in (1/q)Z.
  return right_count(inverse_label(l));
}

std::vector<BCHecke::Label> BCHecke::labels(unsigned bound, unsigned extra_residues) const {
  std::set<Label> out;
  for (unsigned q = 1; q <= bound; ++q)
    for (unsigned p = 1; p <= bound; ++p) {
      if (boost::integer::gcd(p, q) != 1) continue;
      const Rational a(p, q);
      out.insert(label_of({a, Rational(0)}));
      for (unsigned m = 2; m <= extra_residues; ++m)
        for (unsigned k = 1; k < m; ++k) out.insert(label_of({a, Rational(k, m * q)}));
    }
  return {out.begin(), out.end()};
}

std::string BCHecke::format_label(const Label& l) const { return to_string(l.a) + ";" + to_string(l.b); }

BCHecke::Label BCHecke::parse_label(std::string_view text) const {
  const auto semi = text.find(';');
  const Rational a = parse_rational(text.substr(0, semi));
  const Rational b = semi == std::string_view::npos ? Rational(0) : parse_rational(text.substr(semi + 1));
  if (a <= 0) throw ParseError("a must be positive", 1, 1);
  return label_of({a, b});
}

}  // namespace heckefuse
