#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heckefuse/errors.hpp"
#include "heckefuse/group.hpp"

namespace heckefuse {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
/// Accepts "n" or "n/d".
Rational parse_rational(std::string_view text);

// ---------------------------------------------------------------------------
// Backends.  Each provides a label type, an element type with a product, the
// canonical label of an element, the right-coset representatives of a double
// coset, the label of the inverse double coset, and the coset counts.
// ---------------------------------------------------------------------------

/// A finite pair Gamma < G.  Labels are indices into the DoubleCosetSystem.
class FiniteHecke {
 public:
  using Label = std::uint32_t;
  using Element = Elem;

  explicit FiniteHecke(std::shared_ptr<const DoubleCosetSystem> system) : system_(std::move(system)) {}

  const DoubleCosetSystem& system() const { return *system_; }
  const std::shared_ptr<const DoubleCosetSystem>& system_ptr() const { return system_; }

  static constexpr const char* name() { return "finite"; }
  Label identity_label() const { return 0; }
  Label label_of(Element g) const { return system_->label(g); }
  Element mul(Element a, Element b) const { return system_->group()->mul(a, b); }
  const std::vector<Element>& right_coset_reps(Label l) const { return (*system_)[l].right_coset_reps; }
  Label inverse_label(Label l) const;
  Integer right_count(Label l) const { return (*system_)[l].right_coset_reps.size(); }
  Integer left_count(Label l) const { return (*system_)[l].left_count; }
  std::vector<Label> labels() const;

  std::string format_label(Label l) const { return system_->name(l); }
  Label parse_label(std::string_view text) const;

 private:
  std::shared_ptr<const DoubleCosetSystem> system_;
};

struct GL2Label {
  Rational d1 = 1, d2 = 1;  // d2 / d1 is a positive integer

  bool operator==(const GL2Label& o) const { return d1 == o.d1 && d2 == o.d2; }
  bool operator<(const GL2Label& o) const { return std::tie(d1, d2) < std::tie(o.d1, o.d2); }
};

/// SL(2,Z) < GL(2,Q), positive determinant.  Double cosets are labelled by
/// elementary divisors (d1, d2), extended to rational scalings so that the
/// inverse of every double coset is again a label.  Right cosets are
/// enumerated by row Hermite normal forms.
class GL2Hecke {
 public:
  using Label = GL2Label;
  struct Element {
    Rational a, b, c, d;  // [[a, b], [c, d]]
  };

  static constexpr const char* name() { return "gl2"; }
  Label identity_label() const { return {}; }
  /// Throws DomainError for matrices with non-positive determinant.
  Label label_of(const Element& g) const;
  Element mul(const Element& x, const Element& y) const;
  std::vector<Element> right_coset_reps(const Label& l) const;
  Label inverse_label(const Label& l) const { return {1 / l.d2, 1 / l.d1}; }
  Integer right_count(const Label& l) const;
  Integer left_count(const Label& l) const { return right_count(inverse_label(l)); }

  /// Integral labels (d1, d2) with d1 | d2 and d2 <= bound.
  std::vector<Label> labels(unsigned bound) const;

  std::string format_label(const Label& l) const;
  /// "d1,d2"; validates divisibility.
  Label parse_label(std::string_view text) const;

  /// Row Hermite normal form [[a, b], [0, d]] of an integral matrix, used to
  /// name the right coset Gamma g.
  static Element hermite_form(const Element& g);
};

struct BCLabel {
  Rational a = 1;  // positive
  Rational b = 0;  // canonical residue in [0, 1/q) where a = p/q

  bool operator==(const BCLabel& o) const { return a == o.a && b == o.b; }
  bool operator<(const BCLabel& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

/// Gamma = (1, Z) inside the ax+b group Q+* ⋉ Q with (a,b)(c,d) = (ac, ad+b).
/// The double coset of (a, b) is (a, b + Z + aZ); with a = p/q reduced,
/// Z + aZ = (1/q)Z, so the label keeps b modulo 1/q.
class BCHecke {
 public:
  using Label = BCLabel;
  struct Element {
    Rational a, b;
  };

  static constexpr const char* name() { return "bc"; }
  Label identity_label() const { return {}; }
  Label label_of(const Element& g) const;
  Element mul(const Element& x, const Element& y) const { return {x.a * y.a, x.a * y.b + x.b}; }
  std::vector<Element> right_coset_reps(const Label& l) const;
  Label inverse_label(const Label& l) const { return label_of({1 / l.a, -l.b / l.a}); }
  Integer right_count(const Label& l) const;
  Integer left_count(const Label& l) const;

  /// a = p/q with p, q <= bound, and residues b in {0} plus `extra_residues`
  /// fractions of 1/q (k/(m q) for k < m <= extra_residues).
  std::vector<Label> labels(unsigned bound, unsigned extra_residues = 0) const;

  std::string format_label(const Label& l) const;
  /// "a;b" with fractions.
  Label parse_label(std::string_view text) const;
};

// ---------------------------------------------------------------------------
// Elements and convolution.
// ---------------------------------------------------------------------------

/// A finitely supported N-valued function on double cosets.  Zero
/// coefficients are never stored.
template <class Backend>
struct HeckeElement {
  using Label = typename Backend::Label;
  std::map<Label, Integer> terms;

  static HeckeElement basis(const Label& l, Integer coeff = 1) {
    HeckeElement x;
    if (coeff != 0) x.terms.emplace(l, std::move(coeff));
    return x;
  }
  static HeckeElement unit(const Backend& backend) { return basis(backend.identity_label()); }

  bool operator==(const HeckeElement& o) const { return terms == o.terms; }
  bool empty() const { return terms.empty(); }

  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [l, c] : o.terms) terms[l] += c;
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  HeckeElement scaled(const Integer& k) const {
    HeckeElement x;
    if (k == 0) return x;
    for (const auto& [l, c] : terms) x.terms.emplace(l, c * k);
    return x;
  }
};

/// T_a * T_b: with alpha_i and beta_j the right-coset representatives of a
/// and b, the coefficient of T_z is #{(i, j) : alpha_i beta_j ∈ Gamma z Gamma}
/// divided by the number of right cosets in Gamma z Gamma.
template <class Backend>
HeckeElement<Backend> convolve_basis(const Backend& backend, const typename Backend::Label& a,
                                     const typename Backend::Label& b) {
  using Label = typename Backend::Label;
  std::map<Label, Integer> counts;
  const auto alphas = backend.right_coset_reps(a);
  const auto betas = backend.right_coset_reps(b);
  for (const auto& alpha : alphas)
    for (const auto& beta : betas) counts[backend.label_of(backend.mul(alpha, beta))] += 1;
  HeckeElement<Backend> out;
  for (auto& [z, n] : counts) {
    const Integer r = backend.right_count(z);
    if (n % r != 0)
      throw InvariantViolation("convolution count " + n.str() + " at " + backend.format_label(z) +
                               " is not divisible by the right-coset count " + r.str());
    out.terms.emplace(z, n / r);
  }
  return out;
}

template <class Backend>
HeckeElement<Backend> convolve(const Backend& backend, const HeckeElement<Backend>& x,
                               const HeckeElement<Backend>& y) {
  HeckeElement<Backend> out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) out += convolve_basis(backend, a, b).scaled(ca * cb);
  return out;
}

/// xi-bar(g) = xi(g^-1).
template <class Backend>
HeckeElement<Backend> involution(const Backend& backend, const HeckeElement<Backend>& x) {
  HeckeElement<Backend> out;
  for (const auto& [l, c] : x.terms) out.terms.emplace(backend.inverse_label(l), c);
  return out;
}

/// Right degree: sum of coefficient times number of right cosets.
template <class Backend>
Integer degree(const Backend& backend, const HeckeElement<Backend>& x) {
  Integer d = 0;
  for (const auto& [l, c] : x.terms) d += c * backend.right_count(l);
  return d;
}

template <class Backend>
Integer left_degree(const Backend& backend, const HeckeElement<Backend>& x) {
  Integer d = 0;
  for (const auto& [l, c] : x.terms) d += c * backend.left_count(l);
  return d;
}

/// lambda = left count / right count.
template <class Backend>
Rational modular_lambda(const Backend& backend, const typename Backend::Label& l) {
  return Rational(backend.left_count(l), backend.right_count(l));
}

/// A label z in the support of T_x * T_y with lambda(z) != lambda(x) lambda(y).
template <class Backend>
std::optional<typename Backend::Label> sigma_violation(const Backend& backend, const typename Backend::Label& x,
                                                       const typename Backend::Label& y) {
  const Rational expected = modular_lambda(backend, x) * modular_lambda(backend, y);
  for (const auto& [z, c] : convolve_basis(backend, x, y).terms)
    if (modular_lambda(backend, z) != expected) return z;
  return std::nullopt;
}

/// Throws InvariantViolation naming the witness labels.
template <class Backend>
void sigma_check(const Backend& backend, const typename Backend::Label& x, const typename Backend::Label& y) {
  if (auto z = sigma_violation(backend, x, y))
    throw InvariantViolation("lambda is not multiplicative: " + backend.format_label(x) + " * " +
                             backend.format_label(y) + " contains " + backend.format_label(*z));
}

/// "3*e + 2*T[K]"; the zero element prints as "0".
template <class Backend>
std::string format(const Backend& backend, const HeckeElement<Backend>& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : x.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.str() + "*";
    out += l == backend.identity_label() ? std::string("e") : "T[" + backend.format_label(l) + "]";
  }
  return out;
}

}  // namespace heckefuse
