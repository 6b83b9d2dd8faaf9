#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense polynomial over the integers in the single indeterminate x.
/// Coefficients are stored ascending by degree with no trailing zeros,
/// so the zero polynomial is the empty coefficient list.
class Poly {
public:
  Poly() = default;
  Poly(long c) { if (c != 0) coeffs_.push_back(Int(c)); }
  explicit Poly(Int c) { if (c != 0) coeffs_.push_back(std::move(c)); }
  explicit Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<Int>{0, 1}); }
  static Poly x_pow(int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Int(0);
  }
  const Int& constant_value() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const Poly& o) const;  // degree-then-coefficient order, for canonical sorting

  Int evaluate(const Int& v) const;

  /// Exact division; throws std::domain_error if the remainder is nonzero.
  Poly divexact(const Poly& d) const;
  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;
  Poly primitive_part() const;

  std::string str() const;

private:
  void trim() { while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back(); }
  std::vector<Int> coeffs_;
};

Int gcd(Int a, Int b);
Poly gcd(const Poly& a, const Poly& b);

/// Rational function p/q with p, q in Z[x], normalized so that q is
/// primitive with positive leading coefficient and gcd(p, q) = 1.
/// Constants embed as degree-zero polynomials, so this one type also
/// serves for integer, polynomial and rational coefficients.
class RatFunc {
public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly num, Poly den);
  RatFunc(const Int& num, const Int& den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_integer() const { return den_.is_one() && num_.is_constant(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// Numerator as a polynomial; throws unless is_polynomial().
  const Poly& as_poly() const;
  Int as_int() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
  RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Evaluate at x = v; throws std::domain_error if the denominator vanishes.
  Rat evaluate(const Int& v) const;

  std::string str() const;

private:
  void normalize();
  Poly num_, den_;
};

Rat rat_of(const Int& n, const Int& d);

}  // namespace wbr
