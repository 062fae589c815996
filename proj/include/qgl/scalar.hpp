#pragma once
// Exact arithmetic in Q(q): rational functions with integer-coefficient
// numerator and denominator in canonical reduced form.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in Q(q)") {}
};
struct PoleAtPoint : std::runtime_error {
  explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p)
      : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

// Dense polynomial in q over the rationals; coeff[k] multiplies q^k.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(const Rat& constant);
  static Poly q();  // the monomial q

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Rat& leading() const;
  Rat coeff(int k) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const { return c == o.c; }

  Rat eval(const Rat& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  // Exact division; throws std::logic_error if the remainder is nonzero.
  Poly divide_exact(const Poly& d) const;
  // Rational content (sign matching the leading coefficient); zero poly -> 0.
  Rat content() const;
};

// gcd over Q[q], returned as a primitive integer polynomial with positive
// leading coefficient (subresultant-free primitive PRS over Z).
Poly poly_gcd(Poly a, Poly b);

// Canonical element of Q(q): num/den integer-coefficient polynomials,
// coprime primitive parts, coprime integer contents, den leading coeff > 0.
class Scalar {
 public:
  Scalar() : num_(), den_(Rat(1)) {}
  Scalar(long v) : Scalar(Rat(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Rat& v);
  Scalar(Poly num, Poly den);  // normalizes; throws DivisionByZero if den = 0

  static Scalar q(int power = 1);       // q^power, power may be negative
  static Scalar lambda();               // q - q^-1
  static Scalar nu();                   // q + q^-1
  static Scalar parse(const std::string& text);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;  // throws DivisionByZero on zero
  Scalar pow(int e) const;

  Rat evaluate(const Rat& q0) const;                        // throws PoleAtPoint
  std::complex<double> evaluate(std::complex<double> q0) const;
  Rat limit_at_one() const;                                 // throws PoleAtPoint
  bool finite_at_one() const;

  std::string str() const;  // canonical text; parse(str()) == *this

 private:
  void normalize();
  Poly num_, den_;
};

Scalar pow(const Scalar& base, int e);

}  // namespace qgl
