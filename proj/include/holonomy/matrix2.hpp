#ifndef HOLONOMY_MATRIX2_HPP
#define HOLONOMY_MATRIX2_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/multipoly.hpp"

namespace holonomy {

// Word in a free group: sequence of (generator id, nonzero exponent) with
// adjacent letters on distinct generators.
class GroupWord {
 public:
  struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
  };

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  static GroupWord one() { return GroupWord(); }
  static GroupWord generator(int gen, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const;  // total letter count with multiplicity

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  GroupWord pow(int e) const;
  bool operator==(const GroupWord&) const = default;

  std::string str(const std::vector<std::string>& gen_names) const;

 private:
  std::vector<Letter> letters_;
  void push(int gen, int exp);
};

// 2x2 matrix of polynomials divided by a monomial: value = E / denom.
// Products of the generator images below always have det = 1, realized as
// det(E) = denom^2.
struct SymMatrix2 {
  MultiPoly e11, e12, e21, e22;
  Monomial denom;

  static SymMatrix2 identity(const Ctx& ctx);
  // Entries are plain polynomials (den[om] = 1).
  static SymMatrix2 from_entries(MultiPoly a, MultiPoly b, MultiPoly c, MultiPoly d);

  const Ctx& ctx() const { return e11.ctx(); }
  // det(E) as a polynomial; unimodularity means this equals denom^2.
  MultiPoly det_cleared() const;
  bool is_unimodular() const;
  // Inverse for det = 1 matrices: adjugate with the same denominator.
  SymMatrix2 adjugate() const;
  friend SymMatrix2 operator*(const SymMatrix2& a, const SymMatrix2& b);
  friend SymMatrix2 operator-(const SymMatrix2& a, const SymMatrix2& b);
  MultiPoly trace_cleared() const { return e11 + e22; }

  bool operator==(const SymMatrix2& o) const;
};

// Image of a word under generator images (det = 1 each); inverses via the
// adjugate, so entries stay polynomial with a monomial denominator.
SymMatrix2 word_matrix(const GroupWord& w, const std::map<int, SymMatrix2>& images);

// The four entry differences of a - b as polynomials: entries are put over
// the common denominator lcm(a.denom, b.denom) and subtracted; each result
// then has its monomial content stripped (the stripped factors are the
// invertible coordinates z, x, so no solutions are lost where those are
// units). Zero differences are kept so callers see all four positions.
std::vector<MultiPoly> entry_differences_cleared(const SymMatrix2& a, const SymMatrix2& b);

}  // namespace holonomy

#endif
