#pragma once
// Noncommutative polynomials in the matrix generators T^i_j (optionally the
// differentials dT^i_j), with exchange rules derived from R by linear
// elimination and a terminating normal-ordering procedure.

#include <map>
#include <vector>

#include "qgl/matrix.hpp"

namespace qgl {

struct RuleDerivationFailure : std::runtime_error {
  explicit RuleDerivationFailure(const std::string& what) : std::runtime_error(what) {}
};
struct NonTermination : std::runtime_error {
  NonTermination() : std::runtime_error("rewriting exceeded its step budget") {}
};

struct Letter {
  int kind;  // 0 = T, 1 = dT
  int i, j;  // 0-based indices
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;  // compared lexicographically by Letter order

inline Letter t_letter(int i, int j) { return {0, i, j}; }
inline Letter dt_letter(int i, int j) { return {1, i, j}; }

// Finite Scalar-linear combination of words; zero coefficients are dropped.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly one() { return monomial(Word{}, Scalar(1)); }
  static NCPoly monomial(Word w, Scalar c);

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Scalar& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;  // word concatenation
  NCPoly scaled(const Scalar& s) const;
  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<Word, Scalar> terms_;
};

enum class RuleMode { t_only, t_and_dt };

class RewriteSystem {
 public:
  // Solve the exchange relations for every out-of-order adjacent letter pair.
  static RewriteSystem derive(int n, RuleMode mode);

  int n() const { return n_; }
  RuleMode mode() const { return mode_; }
  int rule_count() const { return static_cast<int>(rules_.size()); }
  bool has_rule(const Letter& a, const Letter& b) const;
  const NCPoly& rule(const Letter& a, const Letter& b) const;

  // Leftmost-innermost rewriting to the sorted normal form.
  NCPoly normal_order(const NCPoly& p, long budget = 2'000'000) const;
  // Same result must come out of rightmost-first rewriting (diamond checks).
  NCPoly normal_order_rightmost(const NCPoly& p, long budget = 2'000'000) const;

  // The defining relations as polynomials (each normal-orders to zero).
  const std::vector<NCPoly>& relations() const { return relations_; }

 private:
  int n_ = 0;
  RuleMode mode_ = RuleMode::t_only;
  std::map<std::pair<Letter, Letter>, NCPoly> rules_;
  std::vector<NCPoly> relations_;
};

// c = sum over permutations of (-q)^{inversions} T^0_{p(0)} ... T^{n-1}_{p(n-1)}.
NCPoly qdet(int n);

// normal_order(c x - x c) for every generator x; true when all vanish.
bool qdet_central(const RewriteSystem& rs);

// Coproduct checks in the tensor-square algebra: the comultiplication
// T^i_j -> sum_k T^i_k (x) T^k_j maps every defining relation to zero, and
// the q-determinant is group-like.  Counit: eps(T^i_j) = delta_ij kills the
// relations.
bool coproduct_respects_relations(const RewriteSystem& rs);
bool qdet_grouplike(const RewriteSystem& rs);
bool counit_respects_relations(const RewriteSystem& rs);

// Number of degree-2 normal monomials in the T letters: n^2(n^2+1)/2.
int degree2_normal_count(const RewriteSystem& rs);

// Exhaustive length-3 diamond check: both rewriting strategies agree.
bool overlap_diamond_ok(const RewriteSystem& rs);

}  // namespace qgl
