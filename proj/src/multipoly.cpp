#include "holonomy/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "holonomy/errors.hpp"

namespace holonomy {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw DomainError("variable context larger than " + std::to_string(kMaxVars));
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate variable '" + names_[i] + "'");
}

int VarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Ctx make_ctx(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

MultiPoly MultiPoly::constant(Ctx ctx, const Rational& c) {
  MultiPoly p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(Monomial::one(p.ctx_->size()), c);
  return p;
}

MultiPoly MultiPoly::variable(Ctx ctx, const std::string& name) {
  int i = ctx->index_of(name);
  if (i < 0) throw DomainError("variable '" + name + "' not in context");
  MultiPoly p(std::move(ctx));
  p.terms_.emplace(Monomial::var(p.ctx_->size(), i), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(Ctx ctx, const Monomial& m, const Rational& c) {
  MultiPoly p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Rational MultiPoly::constant_term() const { return coeff(Monomial::one(ctx_ ? ctx_->size() : 0)); }

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool MultiPoly::uses_var(int var) const {
  for (const auto& [m, c] : terms_)
    if (m.e[var] != 0) return true;
  return false;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.ctx_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

void MultiPoly::add_scaled_monomial_multiple(const Rational& c, const Monomial& m,
                                             const MultiPoly& g) {
  for (const auto& [mg, cg] : g.terms_) add_term(m * mg, c * cg);
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(ctx_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& values) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < m.nvars; ++i)
      if (m.e[i] != 0) t *= values[i].pow(m.e[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& replacement) const {
  // Horner in var: group terms by exponent of var.
  int d = degree_in(var);
  std::vector<MultiPoly> by_exp(static_cast<std::size_t>(d + 1), MultiPoly(ctx_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = m.e[var];
    rest.e[var] = 0;
    by_exp[static_cast<std::size_t>(e)].add_term(rest, c);
  }
  MultiPoly acc = by_exp[static_cast<std::size_t>(d)];
  for (int e = d - 1; e >= 0; --e) acc = acc * replacement + by_exp[static_cast<std::size_t>(e)];
  return acc;
}

std::pair<MultiPoly, int> MultiPoly::substitute_rational(int var, const MultiPoly& num,
                                                         const MultiPoly& den) const {
  if (den.is_zero()) throw DomainError("substitution with zero denominator");
  if (!uses_var(var)) return {*this, 0};
  int d = degree_in(var);
  std::vector<MultiPoly> by_exp(static_cast<std::size_t>(d + 1), MultiPoly(ctx_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = m.e[var];
    rest.e[var] = 0;
    by_exp[static_cast<std::size_t>(e)].add_term(rest, c);
  }
  // sum_e coeff_e * num^e * den^(d-e)
  MultiPoly acc = by_exp[static_cast<std::size_t>(d)];
  for (int e = d - 1; e >= 0; --e) acc = acc * num + by_exp[static_cast<std::size_t>(e)] * den.pow(static_cast<unsigned>(d - e));
  return {acc, d};
}

Rational MultiPoly::content() const {
  Rational g(0);
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return *this;
  Rational c = content();
  MultiPoly r(ctx_);
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc / c);
  return r;
}

MultiPoly MultiPoly::embedded(const Ctx& bigger) const {
  // variables the polynomial actually uses must exist in the target context
  std::array<int, VarContext::kMaxVars> remap{};
  for (int i = 0; i < ctx_->size(); ++i) {
    remap[i] = bigger->index_of(ctx_->name(i));
    if (remap[i] < 0 && uses_var(i))
      throw DomainError("embedding drops used variable '" + ctx_->name(i) + "'");
  }
  MultiPoly r(bigger);
  for (const auto& [m, c] : terms_) {
    Monomial mm = Monomial::one(bigger->size());
    for (int i = 0; i < ctx_->size(); ++i)
      if (m.e[i] != 0) mm.e[remap[i]] = m.e[i];
    r.terms_.emplace(mm, c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit_coeff = a == Rational(1);
    bool has_vars = !m.is_one();
    if (!unit_coeff || !has_vars) {
      os << a.str();
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < m.nvars; ++i) {
      if (m.e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << ctx_->name(i);
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

// --- parser -----------------------------------------------------------------

class PolyParser {
 public:
  PolyParser(const std::string& text, Ctx ctx) : text_(text), ctx_(std::move(ctx)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& text_;
  Ctx ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial syntax error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (eat('^')) {
      long e = integer();
      if (e < 0) fail("negative exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num = text_.substr(start, pos_ - start);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == dstart) fail("expected denominator");
        std::string den = text_.substr(dstart, pos_ - dstart);
        return MultiPoly::constant(ctx_, Rational(mpz_class(num), mpz_class(den)));
      }
      return MultiPoly::constant(ctx_, Rational(mpz_class(num), mpz_class(1)));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      ++pos_;
      std::string name(1, c);
      if (ctx_->index_of(name) < 0) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(ctx_, name);
    }
    fail("unexpected character");
  }
};

MultiPoly MultiPoly::parse(const std::string& text, Ctx ctx) {
  return PolyParser(text, std::move(ctx)).parse();
}

// --- Laurent helpers ---------------------------------------------------------

std::pair<MultiPoly, int> laurent_normalize(const LaurentPoly& p) {
  if (p.poly.is_zero()) return {p.poly, 0};
  int min_exp = -1;
  for (const auto& [m, c] : p.poly.terms()) {
    int e = m.e[p.var] + p.offset;
    if (min_exp < 0 || e < min_exp) min_exp = e;
  }
  // min exponent of the value; shift just enough to clear negatives
  int shift = std::max(0, -min_exp);
  int delta = p.offset + shift;  // exponent adjustment on stored terms
  MultiPoly r(p.poly.ctx());
  for (const auto& [m, c] : p.poly.terms()) {
    Monomial mm = m;
    mm.e[p.var] = static_cast<std::int16_t>(m.e[p.var] + delta);
    r.add_term(mm, c);
  }
  return {r, shift};
}

LaurentPoly substitute_power(const MultiPoly& p, int var, int base, int k) {
  int min_exp = 0;
  for (const auto& [m, c] : p.terms())
    min_exp = std::min(min_exp, m.e[base] + k * m.e[var]);
  MultiPoly r(p.ctx());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm.e[var] = 0;
    mm.e[base] = static_cast<std::int16_t>(m.e[base] + k * m.e[var] - min_exp);
    r.add_term(mm, c);
  }
  return {r, base, min_exp};
}

LaurentPoly reciprocal_substitute(const MultiPoly& p, int var) {
  int d = p.degree_in(var);
  MultiPoly r(p.ctx());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm.e[var] = static_cast<std::int16_t>(d - m.e[var]);
    r.add_term(mm, c);
  }
  return {r, var, -d};
}

}  // namespace holonomy
