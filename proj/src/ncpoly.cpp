#include "qgl/ncpoly.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "qgl/rmatrix.hpp"

namespace qgl {

NCPoly NCPoly::monomial(Word w, Scalar c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

NCPoly NCPoly::scaled(const Scalar& s) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream ws;
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) ws << " ";
      ws << (w[k].kind == 0 ? "T" : "dT") << "[" << w[k].i + 1 << "," << w[k].j + 1 << "]";
    }
    if (w.empty()) {
      os << c.str();
    } else if (c.is_one()) {
      os << ws.str();
    } else {
      os << "(" << c.str() << ") " << ws.str();
    }
  }
  return os.str();
}

// ---------- rule derivation ----------

RewriteSystem RewriteSystem::derive(int n, RuleMode mode) {
  RewriteSystem rs;
  rs.n_ = n;
  rs.mode_ = mode;
  Mat r = build_r(n);

  std::vector<NCPoly> rels;
  // Exchange part of R T1 T2 - T1 T2 R, componentwise.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          NCPoly rel;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              const Scalar& c1 = r.at(p2(n, i, j), p2(n, a, b));
              if (!c1.is_zero()) rel.add_term({t_letter(a, k), t_letter(b, l)}, c1);
              const Scalar& c2 = r.at(p2(n, a, b), p2(n, k, l));
              if (!c2.is_zero()) rel.add_term({t_letter(i, a), t_letter(j, b)}, -c2);
            }
          if (!rel.is_zero()) rels.push_back(std::move(rel));
        }
  // T1 dT2 = R dT1 T2 R, componentwise, in extended mode.
  if (mode == RuleMode::t_and_dt) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            NCPoly rel;
            rel.add_term({t_letter(i, k), dt_letter(j, l)}, Scalar(1));
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b) {
                const Scalar& c1 = r.at(p2(n, i, j), p2(n, a, b));
                if (c1.is_zero()) continue;
                for (int c = 0; c < n; ++c)
                  for (int d = 0; d < n; ++d) {
                    const Scalar& c2 = r.at(p2(n, c, d), p2(n, k, l));
                    if (!c2.is_zero())
                      rel.add_term({dt_letter(a, c), t_letter(b, d)}, -(c1 * c2));
                  }
              }
            if (!rel.is_zero()) rels.push_back(std::move(rel));
          }
  }
  rs.relations_ = rels;

  // Collect the length-2 words, out-of-order ones first.
  std::set<Word> misordered, ordered;
  for (const auto& rel : rels)
    for (const auto& [w, c] : rel.terms()) {
      (w[0] > w[1] ? misordered : ordered).insert(w);
    }
  std::vector<Word> cols(misordered.begin(), misordered.end());
  size_t n_mis = cols.size();
  cols.insert(cols.end(), ordered.begin(), ordered.end());
  std::map<Word, int> colidx;
  for (size_t i = 0; i < cols.size(); ++i) colidx[cols[i]] = static_cast<int>(i);

  std::vector<Vec> rows;
  for (const auto& rel : rels) {
    Vec row(cols.size());
    for (const auto& [w, c] : rel.terms()) row[colidx[w]] = c;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(rows, static_cast<int>(cols.size()));
  std::vector<int> pivot_row_of(cols.size(), -1);
  for (size_t rI = 0; rI < pivots.size(); ++rI) pivot_row_of[pivots[rI]] = static_cast<int>(rI);
  for (size_t m = 0; m < n_mis; ++m) {
    if (pivot_row_of[m] < 0)
      throw RuleDerivationFailure("no rule solvable for a misordered pair");
    const Vec& row = rows[pivot_row_of[m]];
    NCPoly rhs;
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c == m || row[c].is_zero()) continue;
      if (c < n_mis)
        throw RuleDerivationFailure("rule right-hand side is not normal-ordered");
      rhs.add_term(cols[c], -row[c]);
    }
    rs.rules_.emplace(std::make_pair(cols[m][0], cols[m][1]), std::move(rhs));
  }
  return rs;
}

bool RewriteSystem::has_rule(const Letter& a, const Letter& b) const {
  return rules_.count({a, b}) != 0;
}

const NCPoly& RewriteSystem::rule(const Letter& a, const Letter& b) const {
  return rules_.at({a, b});
}

namespace {

int find_redex(const RewriteSystem& rs, const Word& w, bool rightmost) {
  int found = -1;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (rs.has_rule(w[i], w[i + 1])) {
      found = static_cast<int>(i);
      if (!rightmost) return found;
    }
  }
  return found;
}

NCPoly normal_order_impl(const RewriteSystem& rs, const NCPoly& p, long budget,
                         bool rightmost) {
  NCPoly result;
  std::deque<std::pair<Word, Scalar>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.front());
    work.pop_front();
    int at = find_redex(rs, w, rightmost);
    if (at < 0) {
      result.add_term(w, c);
      continue;
    }
    if (--budget < 0) throw NonTermination();
    const NCPoly& rhs = rs.rule(w[at], w[at + 1]);
    for (const auto& [rw, rc] : rhs.terms()) {
      Word nw(w.begin(), w.begin() + at);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + at + 2, w.end());
      work.emplace_back(std::move(nw), c * rc);
    }
  }
  return result;
}

}  // namespace

NCPoly RewriteSystem::normal_order(const NCPoly& p, long budget) const {
  return normal_order_impl(*this, p, budget, false);
}

NCPoly RewriteSystem::normal_order_rightmost(const NCPoly& p, long budget) const {
  return normal_order_impl(*this, p, budget, true);
}

// ---------- q-determinant ----------

NCPoly qdet(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly c;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Word w;
    for (int row = 0; row < n; ++row) w.push_back(t_letter(row, perm[row]));
    c.add_term(w, (-Scalar::q()).pow(inv));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

bool qdet_central(const RewriteSystem& rs) {
  int n = rs.n();
  NCPoly c = qdet(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly x = NCPoly::monomial({t_letter(i, j)}, Scalar(1));
      if (!rs.normal_order(c * x - x * c).is_zero()) return false;
    }
  return true;
}

// ---------- coproduct / counit ----------

namespace {

using TensorPoly = std::map<std::pair<Word, Word>, Scalar>;

void tensor_add(TensorPoly& t, const Word& u, const Word& v, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(u, v);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

TensorPoly coproduct(const NCPoly& p, int n) {
  TensorPoly out;
  for (const auto& [w, c] : p.terms()) {
    TensorPoly acc;
    tensor_add(acc, {}, {}, Scalar(1));
    for (const Letter& l : w) {
      TensorPoly next;
      for (const auto& [uv, cc] : acc)
        for (int k = 0; k < n; ++k) {
          Word u = uv.first, v = uv.second;
          u.push_back(t_letter(l.i, k));
          v.push_back(t_letter(k, l.j));
          tensor_add(next, u, v, cc);
        }
      acc = std::move(next);
    }
    for (const auto& [uv, cc] : acc) tensor_add(out, uv.first, uv.second, cc * c);
  }
  return out;
}

TensorPoly tensor_normal(const RewriteSystem& rs, const TensorPoly& t) {
  TensorPoly out;
  for (const auto& [uv, c] : t) {
    NCPoly nu = rs.normal_order(NCPoly::monomial(uv.first, Scalar(1)));
    NCPoly nv = rs.normal_order(NCPoly::monomial(uv.second, Scalar(1)));
    for (const auto& [wu, cu] : nu.terms())
      for (const auto& [wv, cv] : nv.terms()) tensor_add(out, wu, wv, c * cu * cv);
  }
  return out;
}

}  // namespace

bool coproduct_respects_relations(const RewriteSystem& rs) {
  for (const NCPoly& rel : rs.relations()) {
    bool only_t = true;
    for (const auto& [w, c] : rel.terms())
      for (const Letter& l : w)
        if (l.kind != 0) only_t = false;
    if (!only_t) continue;
    if (!tensor_normal(rs, coproduct(rel, rs.n())).empty()) return false;
  }
  return true;
}

bool qdet_grouplike(const RewriteSystem& rs) {
  NCPoly c = qdet(rs.n());
  TensorPoly delta_c = tensor_normal(rs, coproduct(c, rs.n()));
  TensorPoly cxc;
  for (const auto& [w1, c1] : c.terms())
    for (const auto& [w2, c2] : c.terms()) tensor_add(cxc, w1, w2, c1 * c2);
  for (const auto& [uv, cc] : cxc) tensor_add(delta_c, uv.first, uv.second, -cc);
  return delta_c.empty();
}

bool counit_respects_relations(const RewriteSystem& rs) {
  for (const NCPoly& rel : rs.relations()) {
    Scalar eps;
    bool mixed = false;
    for (const auto& [w, c] : rel.terms()) {
      Scalar f(1);
      for (const Letter& l : w) {
        if (l.kind != 0) mixed = true;
        if (l.i != l.j) f = Scalar();
      }
      eps += c * f;
    }
    if (!mixed && !eps.is_zero()) return false;
  }
  return true;
}

int degree2_normal_count(const RewriteSystem& rs) {
  int n = rs.n();
  std::set<Word> seen;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          NCPoly p = rs.normal_order(
              NCPoly::monomial({t_letter(i, j), t_letter(k, l)}, Scalar(1)));
          for (const auto& [w, c] : p.terms()) seen.insert(w);
        }
  return static_cast<int>(seen.size());
}

bool overlap_diamond_ok(const RewriteSystem& rs) {
  int n = rs.n();
  std::vector<Letter> letters;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) letters.push_back(t_letter(i, j));
  if (rs.mode() == RuleMode::t_and_dt) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) letters.push_back(dt_letter(i, j));
  }
  for (const Letter& a : letters)
    for (const Letter& b : letters)
      for (const Letter& c : letters) {
        NCPoly p = NCPoly::monomial({a, b, c}, Scalar(1));
        if (!(rs.normal_order(p) == rs.normal_order_rightmost(p))) return false;
      }
  return true;
}

}  // namespace qgl
