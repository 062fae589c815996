#include "qgl/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qgl {

// ---------- Poly ----------

Poly::Poly(const Rat& constant) {
  if (constant != 0) c.push_back(constant);
}

Poly Poly::q() {
  Poly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rat& Poly::leading() const {
  static const Rat zero(0);
  return c.empty() ? zero : c.back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return Rat(0);
  return c[k];
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Rat& s) const {
  Poly r;
  if (s == 0) return r;
  r.c = c;
  for (auto& x : r.c) x *= s;
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + std::complex<double>(static_cast<double>(*it), 0.0);
  return acc;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  Poly rem = *this;
  Poly quo;
  if (rem.is_zero()) return quo;
  quo.c.assign(std::max<int>(0, rem.degree() - d.degree() + 1), Rat(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rat f = rem.leading() / d.leading();
    quo.c[shift] += f;
    for (size_t i = 0; i < d.c.size(); ++i) rem.c[i + shift] -= f * d.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  quo.trim();
  return quo;
}

Rat Poly::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& x : c) {
    if (x == 0) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(x));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
  }
  Rat r(num_gcd, den_lcm);
  if (leading() < 0) r = -r;
  return r;
}

namespace {

// Integer-coefficient view used by the gcd routine.
using ZPoly = std::vector<Int>;

ZPoly to_primitive_z(const Poly& p) {
  Rat ct = p.content();
  Poly prim = p.divide_exact(Poly(ct));
  ZPoly z(prim.c.size());
  for (size_t i = 0; i < prim.c.size(); ++i) z[i] = numerator(prim.c[i]);
  return z;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zprimitive(ZPoly& a) {
  if (a.empty()) return;
  Int g(0);
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  if (a.back() < 0) g = -g;
  for (auto& x : a) x /= g;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
ZPoly zprem(ZPoly a, const ZPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const Int& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    Int la = a.back();
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    ztrim(a);
  }
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) return Poly(Rat(1));
  if (a.is_zero()) std::swap(a, b);
  ZPoly x = to_primitive_z(a);
  if (b.is_zero()) {
    Poly r;
    r.c.assign(x.size(), Rat(0));
    for (size_t i = 0; i < x.size(); ++i) r.c[i] = Rat(x[i]);
    return r;
  }
  ZPoly y = to_primitive_z(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = zprem(x, y);
    zprimitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  zprimitive(x);
  Poly g;
  g.c.assign(x.size(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i) g.c[i] = Rat(x[i]);
  return g;
}

// ---------- Scalar ----------

Scalar::Scalar(const Rat& v) : num_(Poly(v)), den_(Poly(Rat(1))) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  Rat cn = num_.content();
  Rat cd = den_.content();
  Poly pn = num_.divide_exact(Poly(cn));
  Poly pd = den_.divide_exact(Poly(cd));
  Rat f = cn / cd;  // reduced by cpp_rational; carries the sign
  num_ = pn.scaled(Rat(numerator(f)));
  den_ = pd.scaled(Rat(denominator(f)));
}

Scalar Scalar::q(int power) {
  Poly qp = Poly::q();
  Poly acc(Rat(1));
  for (int i = 0; i < std::abs(power); ++i) acc = acc * qp;
  if (power >= 0) return Scalar(acc, Poly(Rat(1)));
  return Scalar(Poly(Rat(1)), acc);
}

Scalar Scalar::lambda() { return q(1) - q(-1); }
Scalar Scalar::nu() { return q(1) + q(-1); }

bool Scalar::is_one() const {
  return num_.degree() == 0 && den_.degree() == 0 && num_.c[0] == den_.c[0];
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Scalar();
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar pow(const Scalar& base, int e) { return base.pow(e); }

Rat Scalar::evaluate(const Rat& q0) const {
  Rat d = den_.eval(q0);
  if (d == 0) {
    std::ostringstream os;
    os << "pole of " << str() << " at q = " << q0;
    throw PoleAtPoint(os.str());
  }
  return num_.eval(q0) / d;
}

std::complex<double> Scalar::evaluate(std::complex<double> q0) const {
  std::complex<double> d = den_.eval(q0);
  if (std::abs(d) == 0.0) throw PoleAtPoint("pole of " + str() + " at numeric q0");
  return num_.eval(q0) / d;
}

Rat Scalar::limit_at_one() const { return evaluate(Rat(1)); }

bool Scalar::finite_at_one() const { return den_.eval(Rat(1)) != 0; }

// ---------- formatting ----------

namespace {

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rat ck = p.coeff(k);
    if (ck == 0) continue;
    bool neg = ck < 0;
    Int mag = numerator(ck);  // canonical polys have integer coefficients
    if (mag < 0) mag = -mag;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << (k == 1 ? "q" : "q^" + std::to_string(k));
    }
  }
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  bool den_is_one = den_.degree() == 0 && den_.c[0] == 1;
  if (den_is_one) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

// ---------- parsing ----------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        v = v + term();
      } else if (peek() == '-') {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        v = v * unary();
      } else if (peek() == '/') {
        size_t at = pos_;
        ++pos_;
        Scalar d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      int e = exponent();
      return base.pow(e);
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Scalar v = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (ch == 'q') {
      ++pos_;
      return Scalar::q(1);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Scalar(Rat(integer()));
    throw ParseError("expected number, 'q' or '('", pos_);
  }

  int exponent() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer exponent", pos_);
    size_t at = pos_;
    Int v = integer();
    if (v > 4096) throw ParseError("exponent too large", at);
    int e = static_cast<int>(v);
    return neg ? -e : e;
  }

  Int integer() {
    Int v(0);
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).run(); }

}  // namespace qgl
