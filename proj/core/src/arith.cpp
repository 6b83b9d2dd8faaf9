#include "wbr/arith.hpp"

#include <sstream>

namespace wbr {

Poly Poly::x_pow(int k) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return Poly(std::move(c));
}

const Int& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

const Int& Poly::constant_value() const {
  static const Int zero(0);
  if (coeffs_.empty()) return zero;
  if (coeffs_.size() > 1) throw std::domain_error("polynomial is not constant: " + str());
  return coeffs_[0];
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

bool Poly::operator<(const Poly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  return false;
}

Int Poly::evaluate(const Int& v) const {
  Int r(0);
  for (size_t i = coeffs_.size(); i-- > 0;) r = r * v + coeffs_[i];
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly();
  if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quo(coeffs_.size() - d.coeffs_.size() + 1, Int(0));
  const Int& lead = d.coeffs_.back();
  for (size_t k = quo.size(); k-- > 0;) {
    Int top = rem[k + d.coeffs_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    Int q = top / lead;
    quo[k] = q;
    for (size_t i = 0; i < d.coeffs_.size(); ++i) rem[k + i] -= q * d.coeffs_[i];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(quo));
}

Int Poly::content() const {
  Int g(0);
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  Int c = content();
  std::vector<Int> r = coeffs_;
  for (auto& v : r) v /= c;
  return Poly(std::move(r));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    Int c = coeffs_[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = abs(c);
    if (i == 0 || a != 1) os << a.str();
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Primitive Euclidean gcd via pseudo-remainders.  Degrees stay tiny in
// this code base, so the simple PRS is plenty.
Poly gcd(const Poly& a, const Poly& b) {
  Poly f = a.primitive_part(), g = b.primitive_part();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // pseudo-remainder of f by g
    int k = f.degree() - g.degree() + 1;
    Poly scaled = Poly(std::vector<Int>{[&] {
                    Int p(1);
                    for (int i = 0; i < k; ++i) p *= g.leading();
                    return p;
                  }()}) * f;
    // long division, keeping only the remainder
    std::vector<Int> rem = scaled.coeffs();
    const auto& d = g.coeffs();
    const Int& lead = d.back();
    while (rem.size() >= d.size()) {
      Int q = rem.back() / lead;
      size_t off = rem.size() - d.size();
      for (size_t i = 0; i < d.size(); ++i) rem[off + i] -= q * d[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (rem.size() >= d.size() && rem.back() % lead != 0)
        throw std::logic_error("pseudo-remainder not exact");
    }
    f = g;
    g = Poly(std::move(rem)).primitive_part();
  }
  if (!f.is_zero() && f.leading() < 0) f = -f;
  return f;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc::RatFunc(const Int& num, const Int& den) : num_(Poly(num)), den_(Poly(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  Int cn = num_.content(), cd = den_.content();
  Int cg = gcd(cn, cd);
  if (den_.leading() < 0) cg = -cg;
  if (cg != 1) {
    std::vector<Int> n = num_.coeffs(), d = den_.coeffs();
    for (auto& v : n) v /= cg;
    for (auto& v : d) v /= cg;
    num_ = Poly(std::move(n));
    den_ = Poly(std::move(d));
  }
}

const Poly& RatFunc::as_poly() const {
  if (!is_polynomial())
    throw std::domain_error("coefficient is not a polynomial: " + str());
  return num_;
}

Int RatFunc::as_int() const {
  if (!is_integer()) throw std::domain_error("coefficient is not an integer: " + str());
  return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFunc::evaluate(const Int& v) const {
  Int d = den_.evaluate(v);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return rat_of(num_.evaluate(v), d);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rat rat_of(const Int& n, const Int& d) {
  return Rat(n) / Rat(d);
}

}  // namespace wbr
