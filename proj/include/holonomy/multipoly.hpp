#ifndef HOLONOMY_MULTIPOLY_HPP
#define HOLONOMY_MULTIPOLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/rational.hpp"

namespace holonomy {

// Ordered list of variable names. Polynomials sharing a context use dense
// exponent vectors over it; the problem never needs more than a handful of
// variables, so a fixed cap keeps monomials allocation-free.
class VarContext {
 public:
  static constexpr int kMaxVars = 12;

  explicit VarContext(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  int index_of(const std::string& name) const;
  bool operator==(const VarContext& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using Ctx = std::shared_ptr<const VarContext>;

Ctx make_ctx(std::vector<std::string> names);

// Exponent vector over a context. Comparison is plain lexicographic on the
// exponents, which doubles as the structural order for canonical storage.
struct Monomial {
  std::array<std::int16_t, VarContext::kMaxVars> e{};
  std::int16_t nvars = 0;

  static Monomial one(int nvars) {
    Monomial m;
    m.nvars = static_cast<std::int16_t>(nvars);
    return m;
  }
  static Monomial var(int nvars, int i, int exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = static_cast<std::int16_t>(exp);
    return m;
  }

  int operator[](int i) const { return e[i]; }
  int total_degree() const {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += e[i];
    return d;
  }
  bool is_one() const {
    for (int i = 0; i < nvars; ++i)
      if (e[i] != 0) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < nvars; ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < a.nvars; ++i) m.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
    return m;
  }
  // Exact quotient; caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < a.nvars; ++i) m.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < a.nvars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
  auto operator<=>(const Monomial&) const = default;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored in descending structural (lex-on-exponents) order with no
// zero coefficients, so equality is structural comparison.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

  MultiPoly() = default;
  explicit MultiPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly zero(Ctx ctx) { return MultiPoly(std::move(ctx)); }
  static MultiPoly constant(Ctx ctx, const Rational& c);
  static MultiPoly variable(Ctx ctx, const std::string& name);
  static MultiPoly monomial(Ctx ctx, const Monomial& m, const Rational& c);

  const Ctx& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  // Constant term (coefficient of the unit monomial).
  Rational constant_term() const;

  Rational coeff(const Monomial& m) const;
  int degree_in(int var) const;
  int total_degree() const;  // -1 for the zero polynomial
  bool uses_var(int var) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  // Adds c * m, merging and dropping zeros; keeps the canonical-form invariant.
  void add_term(const Monomial& m, const Rational& c);
  MultiPoly scaled(const Rational& c) const;
  // this += c * m * g; the workhorse of polynomial reduction.
  void add_scaled_monomial_multiple(const Rational& c, const Monomial& m, const MultiPoly& g);
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const;

  // Full evaluation; `values` indexed by variable.
  Rational eval(const std::vector<Rational>& values) const;
  // Substitute a polynomial for one variable.
  MultiPoly substitute(int var, const MultiPoly& replacement) const;
  // Substitute var := num/den and clear denominators: returns
  // (den^k * p|_{var=num/den}, k) with k = degree_in(var).
  std::pair<MultiPoly, int> substitute_rational(int var, const MultiPoly& num,
                                                const MultiPoly& den) const;

  // Positive rational c such that (1/c) * this has coprime integer
  // coefficients. Zero polynomial yields 0.
  Rational content() const;
  // this / content(): integer coefficients, content 1, signs preserved.
  MultiPoly primitive_part() const;

  // Rewrite over a context that contains every variable of this one.
  MultiPoly embedded(const Ctx& bigger) const;

  std::string str() const;
  // Parses the ASCII polynomial format: single-letter variables, integer or
  // p/q coefficients, operators + - * ^ and parentheses.
  static MultiPoly parse(const std::string& text, Ctx ctx);

 private:
  Ctx ctx_;
  TermMap terms_;

};

// Univariate Laurent expression var^offset * poly, used where matrix inverses
// and the m = z^-n substitution produce negative exponents. `var` indexes the
// context of `poly`.
struct LaurentPoly {
  MultiPoly poly;
  int var = 0;
  int offset = 0;
};

// Minimal shift making the expression polynomial: returns (p * var^shift,
// shift) with shift = max(0, -lowest exponent). Zero input gives (0, 0).
std::pair<MultiPoly, int> laurent_normalize(const LaurentPoly& p);

// p with var := base^k (k may be negative), as a Laurent expression in base.
// p must involve only `var` and `base`.
LaurentPoly substitute_power(const MultiPoly& p, int var, int base, int k);

// p(1/var) as a Laurent expression (offset -deg, reversed coefficients).
LaurentPoly reciprocal_substitute(const MultiPoly& p, int var);

}  // namespace holonomy

#endif
