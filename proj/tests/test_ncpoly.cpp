#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/ncpoly.hpp"

using namespace qgl;

TEST_CASE("rule derivation counts") {
  RewriteSystem t2 = RewriteSystem::derive(2, RuleMode::t_only);
  CHECK(t2.rule_count() == 6);  // one rule per out-of-order generator pair
  RewriteSystem td2 = RewriteSystem::derive(2, RuleMode::t_and_dt);
  CHECK(td2.rule_count() == 6 + 16);  // plus every dT-before-T pair
  RewriteSystem t1 = RewriteSystem::derive(1, RuleMode::t_only);
  CHECK(t1.rule_count() == 0);
}

TEST_CASE("defining relations rewrite to zero") {
  for (RuleMode mode : {RuleMode::t_only, RuleMode::t_and_dt}) {
    RewriteSystem rs = RewriteSystem::derive(2, mode);
    for (const NCPoly& rel : rs.relations()) CHECK(rs.normal_order(rel).is_zero());
  }
}

TEST_CASE("known n = 2 exchange rules") {
  RewriteSystem rs = RewriteSystem::derive(2, RuleMode::t_only);
  // T[1,2] T[1,1] -> q^-1 T[1,1] T[1,2]   (same-row exchange)
  NCPoly p = NCPoly::monomial({t_letter(0, 1), t_letter(0, 0)}, Scalar(1));
  NCPoly expect = NCPoly::monomial({t_letter(0, 0), t_letter(0, 1)}, Scalar::q(-1));
  CHECK(rs.normal_order(p) == expect);
  // T[2,2] T[1,1] -> T[1,1] T[2,2] - lambda T[1,2] T[2,1]
  NCPoly d = NCPoly::monomial({t_letter(1, 1), t_letter(0, 0)}, Scalar(1));
  NCPoly e = NCPoly::monomial({t_letter(0, 0), t_letter(1, 1)}, Scalar(1)) +
             NCPoly::monomial({t_letter(0, 1), t_letter(1, 0)}, -Scalar::lambda());
  CHECK(rs.normal_order(d) == e);
}

TEST_CASE("normal ordering is idempotent and strategy-independent") {
  RewriteSystem rs = RewriteSystem::derive(2, RuleMode::t_and_dt);
  Word w = {dt_letter(1, 0), t_letter(1, 1), t_letter(0, 1), dt_letter(0, 0)};
  NCPoly p = NCPoly::monomial(w, Scalar(1));
  NCPoly nf = rs.normal_order(p);
  CHECK(rs.normal_order(nf) == nf);
  CHECK(rs.normal_order_rightmost(p) == nf);
  // a normal word has no adjacent pair for which an exchange rule exists
  for (const auto& [word, c] : nf.terms())
    for (size_t i = 0; i + 1 < word.size(); ++i)
      CHECK_FALSE(rs.has_rule(word[i], word[i + 1]));
}

TEST_CASE("overlap diamond at n = 2") {
  CHECK(overlap_diamond_ok(RewriteSystem::derive(2, RuleMode::t_and_dt)));
}

TEST_CASE("step budget enforcement") {
  RewriteSystem rs = RewriteSystem::derive(2, RuleMode::t_and_dt);
  Word w = {dt_letter(1, 1), dt_letter(1, 0), t_letter(1, 1), t_letter(0, 1), t_letter(0, 0)};
  CHECK_THROWS_AS(rs.normal_order(NCPoly::monomial(w, Scalar(1)), 2), NonTermination);
}

TEST_CASE("q-determinant") {
  NCPoly c2 = qdet(2);
  CHECK(c2.terms().size() == 2);
  // T[1,1]T[2,2] - q T[1,2]T[2,1]
  Word w1 = {t_letter(0, 0), t_letter(1, 1)};
  Word w2 = {t_letter(0, 1), t_letter(1, 0)};
  CHECK(c2.terms().at(w1) == Scalar(1));
  CHECK(c2.terms().at(w2) == -Scalar::q());
  CHECK(qdet(3).terms().size() == 6);
}

TEST_CASE("q-determinant is central at n = 2") {
  CHECK(qdet_central(RewriteSystem::derive(2, RuleMode::t_only)));
}

TEST_CASE("degree-2 normal monomial count") {
  CHECK(degree2_normal_count(RewriteSystem::derive(1, RuleMode::t_only)) == 1);
  CHECK(degree2_normal_count(RewriteSystem::derive(2, RuleMode::t_only)) == 10);
}

TEST_CASE("coalgebra structure respects the relations") {
  RewriteSystem rs = RewriteSystem::derive(2, RuleMode::t_only);
  CHECK(coproduct_respects_relations(rs));
  CHECK(qdet_grouplike(rs));
  CHECK(counit_respects_relations(rs));
}

TEST_CASE("polynomial arithmetic and printing") {
  NCPoly a = NCPoly::monomial({t_letter(0, 0)}, Scalar(1));
  NCPoly b = NCPoly::monomial({t_letter(0, 1)}, Scalar::q());
  NCPoly s = a + b;
  CHECK(s.terms().size() == 2);
  CHECK((s - a) == b);
  CHECK((a * b).terms().begin()->first.size() == 2);
  CHECK(a.str() == "T[1,1]");
  CHECK(NCPoly().is_zero());
  CHECK(NCPoly::one().str() == "1");
}
