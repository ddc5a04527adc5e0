#include "holonomy/matrix2.hpp"

#include <algorithm>
#include <sstream>

#include "holonomy/errors.hpp"

namespace holonomy {

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const auto& l : letters) push(l.gen, l.exp);
}

GroupWord GroupWord::generator(int gen, int exp) {
  GroupWord w;
  w.push(gen, exp);
  return w;
}

void GroupWord::push(int gen, int exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

int GroupWord::length() const {
  int n = 0;
  for (const auto& l : letters_) n += std::abs(l.exp);
  return n;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push(it->gen, -it->exp);
  return w;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord w = a;
  for (const auto& l : b.letters_) w.push(l.gen, l.exp);
  return w;
}

GroupWord GroupWord::pow(int e) const {
  GroupWord w;
  GroupWord base = e >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(e); ++i) w = w * base;
  return w;
}

std::string GroupWord::str(const std::vector<std::string>& gen_names) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (const auto& l : letters_) {
    os << gen_names.at(static_cast<std::size_t>(l.gen));
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

SymMatrix2 SymMatrix2::identity(const Ctx& ctx) {
  MultiPoly one = MultiPoly::constant(ctx, Rational(1));
  MultiPoly zero = MultiPoly::zero(ctx);
  return {one, zero, zero, one, Monomial::one(ctx->size())};
}

SymMatrix2 SymMatrix2::from_entries(MultiPoly a, MultiPoly b, MultiPoly c, MultiPoly d) {
  Monomial one = Monomial::one(a.ctx()->size());
  return {std::move(a), std::move(b), std::move(c), std::move(d), one};
}

MultiPoly SymMatrix2::det_cleared() const { return e11 * e22 - e12 * e21; }

bool SymMatrix2::is_unimodular() const {
  return det_cleared() == MultiPoly::monomial(ctx(), denom * denom, Rational(1));
}

SymMatrix2 SymMatrix2::adjugate() const { return {e22, -e12, -e21, e11, denom}; }

SymMatrix2 operator*(const SymMatrix2& a, const SymMatrix2& b) {
  return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
          a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22,
          a.denom * b.denom};
}

SymMatrix2 operator-(const SymMatrix2& a, const SymMatrix2& b) {
  // common denominator lcm(a.denom, b.denom)
  Monomial l = Monomial::lcm(a.denom, b.denom);
  MultiPoly fa = MultiPoly::monomial(a.ctx(), l / a.denom, Rational(1));
  MultiPoly fb = MultiPoly::monomial(b.ctx(), l / b.denom, Rational(1));
  return {a.e11 * fa - b.e11 * fb, a.e12 * fa - b.e12 * fb,
          a.e21 * fa - b.e21 * fb, a.e22 * fa - b.e22 * fb, l};
}

bool SymMatrix2::operator==(const SymMatrix2& o) const {
  // equality of values: cross-multiply by the denominators
  MultiPoly fa = MultiPoly::monomial(ctx(), o.denom, Rational(1));
  MultiPoly fb = MultiPoly::monomial(ctx(), denom, Rational(1));
  return e11 * fa == o.e11 * fb && e12 * fa == o.e12 * fb && e21 * fa == o.e21 * fb &&
         e22 * fa == o.e22 * fb;
}

SymMatrix2 word_matrix(const GroupWord& w, const std::map<int, SymMatrix2>& images) {
  if (images.empty()) throw DomainError("word_matrix with no generator images");
  SymMatrix2 acc = SymMatrix2::identity(images.begin()->second.ctx());
  for (const auto& letter : w.letters()) {
    auto it = images.find(letter.gen);
    if (it == images.end()) throw DomainError("word uses a generator without an image");
    SymMatrix2 factor = letter.exp > 0 ? it->second : it->second.adjugate();
    for (int i = 0; i < std::abs(letter.exp); ++i) acc = acc * factor;
  }
  return acc;
}

std::vector<MultiPoly> entry_differences_cleared(const SymMatrix2& a, const SymMatrix2& b) {
  SymMatrix2 d = a - b;
  std::vector<MultiPoly> out = {d.e11, d.e12, d.e21, d.e22};
  for (auto& p : out) {
    if (p.is_zero()) continue;
    // strip the common monomial factor
    Monomial g = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms())
      for (int i = 0; i < g.nvars; ++i) g.e[i] = std::min(g.e[i], m.e[i]);
    if (!g.is_one()) {
      MultiPoly stripped(p.ctx());
      for (const auto& [m, c] : p.terms()) stripped.add_term(m / g, c);
      p = stripped;
    }
    p = p.primitive_part();
    // deterministic sign: leading structural term positive
    if (p.terms().begin()->second.sign() < 0) p = -p;
  }
  return out;
}

}  // namespace holonomy
