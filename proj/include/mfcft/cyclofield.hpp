#pragma once

// Exact arithmetic in Q(zeta) with zeta a primitive 2d-th root of unity.
// Elements are residues modulo the 2d-th cyclotomic polynomial with GMP rationals.

#include <gmpxx.h>

#include <complex>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mfcft {

using Rational = mpq_class;

// mpq_class(num, den) leaves the fraction unreduced
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational mod1(Rational r) {
  r.canonicalize();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  r -= q;
  return r;
}

namespace detail {

using QPoly = std::vector<Rational>;  // low degree first

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const Rational& lb = b.back();
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() / lb;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = a;
}

inline int mobius(int n) {
  int res = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    res = -res;
  }
  if (n > 1) res = -res;
  return res;
}

inline QPoly cyclotomic_poly(int n) {
  QPoly num{1}, den{1};
  for (int k = 1; k <= n; ++k) {
    if (n % k) continue;
    int mu = mobius(n / k);
    if (mu == 0) continue;
    QPoly f(k + 1, 0);
    f[0] = -1;
    f[k] = 1;
    if (mu == 1)
      num = qmul(num, f);
    else
      den = qmul(den, f);
  }
  QPoly q, r;
  qdivmod(num, den, q, r);
  return q;
}

}  // namespace detail

class CycloField {
 public:
  explicit CycloField(int d) : d_(d), n_(2 * d) {
    if (d < 1) throw OutOfRange("modulus must be positive");
    phi_poly_ = detail::cyclotomic_poly(n_);
    deg_ = static_cast<int>(phi_poly_.size()) - 1;
    // t^k mod Phi for k < 2*deg
    int top = std::max(2 * deg_, n_ + 1);
    pow_.resize(top);
    detail::QPoly cur{1};
    for (int k = 0; k < top; ++k) {
      detail::QPoly padded = cur;
      padded.resize(deg_, 0);
      pow_[k] = padded;
      cur.insert(cur.begin(), Rational(0));
      detail::QPoly q, r;
      detail::qdivmod(cur, phi_poly_, q, r);
      cur = r;
    }
  }
  int d() const { return d_; }
  int order() const { return n_; }
  int degree() const { return deg_; }
  const detail::QPoly& modulus() const { return phi_poly_; }
  // t^k reduced, padded to degree() entries, for 0 <= k < 2*degree() and k <= 2d
  const detail::QPoly& power(int k) const { return pow_.at(k); }

  static const CycloField& get(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<CycloField>(d);
    return *slot;
  }

 private:
  int d_, n_, deg_;
  detail::QPoly phi_poly_;
  std::vector<detail::QPoly> pow_;
};

// A field element. A null field pointer denotes a rational scalar that has not
// yet been placed in a particular cyclotomic field; it is promoted on contact.
class CycNum {
 public:
  CycNum() = default;
  CycNum(long v) : c_{Rational(v)} { norm_rational(); }
  CycNum(int v) : CycNum(static_cast<long>(v)) {}
  CycNum(const Rational& v) : c_{v} { norm_rational(); }
  CycNum(const CycloField& F, std::vector<Rational> c) : F_(&F), c_(std::move(c)) {
    c_.resize(F.degree(), 0);
  }

  static CycNum zero(int d) { return CycNum(CycloField::get(d), {}); }
  static CycNum one(int d) { return CycNum(CycloField::get(d), {Rational(1)}); }

  const CycloField* field() const { return F_; }
  int d() const { return F_ ? F_->d() : 0; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (auto& v : c_)
      if (v != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }
  bool is_one() const { return is_rational() && rational_part() == 1; }

  CycNum in(const CycloField& F) const {
    if (F_ == &F) return *this;
    if (F_) throw ModulusMismatch("elements of different cyclotomic fields");
    return CycNum(F, {rational_part()});
  }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    const CycloField* F = common(a, b);
    if (!F) return CycNum(a.rational_part() + b.rational_part());
    std::vector<Rational> r(F->degree(), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return CycNum(*F, std::move(r));
  }
  friend CycNum operator-(const CycNum& a) {
    CycNum r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    const CycloField* F = common(a, b);
    if (!F) return CycNum(a.rational_part() * b.rational_part());
    if (a.is_rational()) return b.in(*F).scaled(a.rational_part());
    if (b.is_rational()) return a.in(*F).scaled(b.rational_part());
    int n = F->degree();
    std::vector<Rational> prod(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> r(prod.begin(), prod.begin() + n);
    for (int k = n; k < 2 * n - 1; ++k) {
      if (prod[k] == 0) continue;
      const auto& red = F->power(k);
      for (int i = 0; i < n; ++i)
        if (red[i] != 0) r[i] += prod[k] * red[i];
    }
    return CycNum(*F, std::move(r));
  }
  CycNum inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!F_ || is_rational()) {
      CycNum r = *this;
      Rational inv = 1 / rational_part();
      for (auto& v : r.c_) v = 0;
      if (r.c_.empty()) r.c_.push_back(0);
      r.c_[0] = inv;
      return r;
    }
    // extended Euclid: s*a + t*Phi = 1
    detail::QPoly a = c_, b = F_->modulus();
    detail::trim(a);
    detail::QPoly s0{1}, s1{};
    while (!b.empty()) {
      detail::QPoly q, r;
      detail::qdivmod(a, b, q, r);
      detail::QPoly s2 = detail::qsub(s0, detail::qmul(q, s1));
      a = b;
      b = r;
      s0 = s1;
      s1 = s2;
    }
    // a is a nonzero constant gcd
    Rational g = a.at(0);
    for (auto& v : s0) v /= g;
    detail::QPoly q, r;
    detail::qdivmod(s0, F_->modulus(), q, r);
    return CycNum(*F_, r);
  }
  friend CycNum operator/(const CycNum& a, const CycNum& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inverse();
  }
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.F_ && b.F_ && a.F_ != b.F_) throw ModulusMismatch();
    size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t i = 0; i < n; ++i) {
      Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
      Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
      if (x != y) return false;
    }
    return true;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNum r = F_ ? one(F_->d()) : CycNum(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      Rational av = abs(v);
      if (i == 0)
        os << av.get_str();
      else {
        if (av != 1) os << av.get_str() << "*";
        os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
      }
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  static const CycloField* common(const CycNum& a, const CycNum& b) {
    if (a.F_ && b.F_ && a.F_ != b.F_) throw ModulusMismatch();
    return a.F_ ? a.F_ : b.F_;
  }
  CycNum scaled(const Rational& s) const {
    CycNum r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  void norm_rational() {}

  const CycloField* F_ = nullptr;
  std::vector<Rational> c_;
};

inline CycNum zeta_power(int d, long k) {
  const CycloField& F = CycloField::get(d);
  long n = 2L * d;
  long r = ((k % n) + n) % n;
  return CycNum(F, F.power(static_cast<int>(r)));
}

inline CycNum eta_power(int d, long k) {
  long r = ((k % d) + d) % d;
  return zeta_power(d, 2 * r);
}

inline CycNum quantum_int(long n, const CycNum& q) {
  CycNum den = q - q.inverse();
  if (den.is_zero()) throw DegenerateRoot("q - q^-1 vanishes");
  return (q.pow(n) - q.pow(-n)) / den;
}

inline void require_odd(int d) {
  if (d < 3 || d % 2 == 0) throw EvenModulus("d must be odd and at least 3, got " + std::to_string(d));
}

inline CycNum kappa(int d) {
  require_odd(d);
  return -(eta_power(d, (d - 1) / 2) + eta_power(d, (d + 1) / 2));
}

inline CycNum galois_twist(const CycNum& a, long l) {
  if (!a.field()) return a;
  int d = a.d();
  long n = 2L * d;
  if (std::gcd(((l % n) + n) % n, n) != 1) throw NotCoprime("exponent must be coprime to 2d");
  CycNum r = CycNum::zero(d);
  const auto& c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r += zeta_power(d, static_cast<long>(i) * l) * CycNum(c[i]);
  return r;
}

inline std::complex<double> to_float(const CycNum& a) {
  std::complex<double> r = 0;
  if (!a.field()) return a.rational_part().get_d();
  const double pi = std::acos(-1.0);
  const auto& c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r += c[i].get_d() * std::polar(1.0, pi * static_cast<double>(i) / a.d());
  return r;
}

// The root data used by the constructions: eta is replaced by eta^l for a
// root exponent l coprime to d. The matching Temperley-Lieb root is zeta^l'
// with l' the odd representative of l modulo d.
struct Setting {
  int d = 3;
  int l = 1;

  Setting() = default;
  Setting(int d_, int l_ = 1) : d(d_), l(l_) {
    if (std::gcd(((l % d) + d) % d, d) != 1) throw NotCoprime("root exponent must be coprime to d");
  }
  int odd_exponent() const {
    int r = ((l % d) + d) % d;
    return r % 2 ? r : r + d;
  }
  CycNum eta(long k) const { return eta_power(d, k * l); }
  CycNum q() const { return zeta_power(d, odd_exponent()); }
  CycNum kappa() const { return -(eta((d - 1) / 2) + eta((d + 1) / 2)); }
  CycNum qint(long n) const { return quantum_int(n, q()); }
  CycNum zero() const { return CycNum::zero(d); }
  CycNum one() const { return CycNum::one(d); }
};

}  // namespace mfcft
