#include "holonomy/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "holonomy/errors.hpp"

namespace holonomy {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
  UniPoly p;
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

UniPoly UniPoly::monomial(const Rational& c, int e) {
  UniPoly p;
  if (!c.is_zero()) {
    p.c_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
    p.c_.back() = c;
  }
  return p;
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, int* var_out) {
  int var = -1;
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < m.nvars; ++i)
      if (m.e[i] != 0) {
        if (var >= 0 && var != i)
          throw DomainError("polynomial is not univariate");
        var = i;
      }
  if (var_out) *var_out = var;
  UniPoly r;
  if (p.is_zero()) return r;
  int d = var < 0 ? 0 : p.degree_in(var);
  r.c_.assign(static_cast<std::size_t>(d) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) r.c_[var < 0 ? 0 : static_cast<std::size_t>(m.e[var])] = c;
  r.trim();
  return r;
}

MultiPoly UniPoly::to_multipoly(Ctx ctx, const std::string& var) const {
  int vi = ctx->index_of(var);
  if (vi < 0) throw DomainError("variable '" + var + "' not in context");
  MultiPoly r(ctx);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      r.add_term(Monomial::var(ctx->size(), vi, static_cast<int>(i)), c_[i]);
  return r;
}

const Rational& UniPoly::coeff(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

int UniPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return UniPoly();
  UniPoly r = *this;
  for (auto& cc : r.c_) cc *= c;
  return r;
}

UniPoly UniPoly::shifted_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (valuation() < k) throw DomainError("shifted_down would truncate");
  UniPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

UniPoly UniPoly::shifted_up(int k) const {
  if (k == 0 || is_zero()) return *this;
  UniPoly r;
  r.c_.assign(static_cast<std::size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  if (degree() < 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  r.trim();
  return r;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatInterval UniPoly::eval_interval(const RatInterval& x) const {
  RatInterval acc{Rational(0)};
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + RatInterval(c_[i]);
  return acc;
}

int UniPoly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  for (const auto& c : c_)
    if (!c.is_integer()) return eval(x).sign();
  // sign of sum c_i p^i q^(n-i) = q^n * value, q > 0
  const mpz_class& p = x.num();
  const mpz_class& q = x.den();
  mpz_class acc = c_.back().num();
  mpz_class qp = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    qp *= q;
    acc *= p;
    if (!c_[i].is_zero()) acc += c_[i].num() * qp;
  }
  return sgn(acc);
}

double UniPoly::eval_double(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

void UniPoly::divmod(const UniPoly& d, UniPoly* q, UniPoly* r) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  UniPoly rr = *this;
  UniPoly qq;
  int dd = d.degree();
  if (rr.degree() >= dd) qq.c_.assign(static_cast<std::size_t>(rr.degree() - dd) + 1, Rational(0));
  const Rational& lc = d.leading();
  while (!rr.is_zero() && rr.degree() >= dd) {
    int k = rr.degree() - dd;
    Rational f = rr.leading() / lc;
    qq.c_[static_cast<std::size_t>(k)] = f;
    // rr -= f * x^k * d
    for (int i = 0; i <= dd; ++i)
      rr.c_[static_cast<std::size_t>(i + k)] -= f * d.c_[static_cast<std::size_t>(i)];
    rr.trim();
  }
  qq.trim();
  if (q) *q = std::move(qq);
  if (r) *r = std::move(rr);
}

UniPoly UniPoly::rem(const UniPoly& d) const {
  UniPoly r;
  divmod(d, nullptr, &r);
  return r;
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  UniPoly q, r;
  divmod(d, &q, &r);
  if (!r.is_zero()) throw DomainError("exact_div with nonzero remainder");
  return q;
}

Rational UniPoly::content() const {
  Rational g(0);
  for (const auto& c : c_) g = rational_gcd(g, c);
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return *this;
  Rational g = content();
  UniPoly r = *this;
  for (auto& c : r.c_) c /= g;
  return r;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a.primitive_part(), g = b.primitive_part();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    UniPoly r = f.rem(g).primitive_part();
    f = std::move(g);
    g = std::move(r);
  }
  // monic normalization
  return f.scaled(f.leading().reciprocal());
}

UniPoly UniPoly::squarefree_part() const {
  if (degree() <= 1) return *this;
  UniPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  return exact_div(g);
}

Rational UniPoly::root_bound() const {
  if (is_zero()) return Rational(1);
  Rational m(0);
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, (c_[i] / leading()).abs());
  return m + Rational(1);
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0 || !(a == Rational(1))) {
      os << a.str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace holonomy
