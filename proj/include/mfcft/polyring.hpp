#pragma once

// Sparse multivariate polynomials over CycNum in a fixed, named variable universe.
// Terms are kept sorted in graded-lex order with no zero coefficients, so
// equality is syntactic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclofield.hpp"

namespace mfcft {

using Var = std::uint8_t;
constexpr int kMaxVars = 24;
constexpr Var X = 0, Y = 1, Z = 2;
constexpr int kMaxInternal = 10;
// internal tensor variables y1..y10 and scratch variables s0..s10
inline constexpr Var internal_var(int i) { return static_cast<Var>(2 + i); }
inline constexpr Var scratch_var(int i) { return static_cast<Var>(13 + i); }

inline std::string var_name(Var v) {
  if (v == X) return "x";
  if (v == Y) return "y";
  if (v == Z) return "z";
  if (v >= 3 && v <= 12) return "y" + std::to_string(v - 2);
  return "s" + std::to_string(v - 13);
}

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Mono var(Var v, int k = 1) {
    Mono m;
    m.e[v] = static_cast<std::uint8_t>(k);
    m.deg = static_cast<std::uint16_t>(k);
    return m;
  }
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0;
  }
  friend bool operator==(const Mono& a, const Mono& b) {
    return a.deg == b.deg && std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0;
  }
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw OutOfRange("exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }
  bool divides(const Mono& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  Mono quotient(const Mono& b) const {  // this / b
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - b.e[i]);
    r.deg = static_cast<std::uint16_t>(deg - b.deg);
    return r;
  }
  std::string str() const {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += var_name(static_cast<Var>(i));
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }
};

class MPoly;
using Subst = std::vector<std::pair<Var, MPoly>>;

class MPoly {
 public:
  using Term = std::pair<Mono, CycNum>;

  MPoly() = default;
  MPoly(const CycNum& c) {
    if (!c.is_zero()) t_.push_back({Mono{}, c});
  }
  MPoly(long c) : MPoly(CycNum(c)) {}
  MPoly(int c) : MPoly(CycNum(static_cast<long>(c))) {}

  static MPoly var(Var v, int k = 1) {
    MPoly p;
    p.t_.push_back({Mono::var(v, k), CycNum(1)});
    return p;
  }
  static MPoly term(const Mono& m, const CycNum& c) {
    MPoly p;
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
  }
  static MPoly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    MPoly p;
    for (auto& t : ts) {
      if (!p.t_.empty() && p.t_.back().first == t.first)
        p.t_.back().second += t.second;
      else
        p.t_.push_back(std::move(t));
    }
    p.drop_zeros();
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  int degree() const { return t_.empty() ? -1 : t_.back().first.deg; }
  const Term& leading() const { return t_.back(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }
  CycNum constant_term() const {
    if (!t_.empty() && t_[0].first.deg == 0) return t_[0].second;
    return CycNum();
  }
  int degree_in(Var v) const {
    int r = -1;
    for (auto& t : t_) r = std::max(r, static_cast<int>(t.first.e[v]));
    return r;
  }
  bool uses(Var v) const {
    for (auto& t : t_)
      if (t.first.e[v]) return true;
    return false;
  }
  bool is_homogeneous() const {
    for (auto& t : t_)
      if (t.first.deg != t_[0].first.deg) return false;
    return true;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.t_[0].second);
    if (b.is_constant()) return a.scaled(b.t_[0].second);
    std::vector<Term> ts;
    ts.reserve(a.size() * b.size());
    for (auto& s : a.t_)
      for (auto& t : b.t_) ts.push_back({s.first * t.first, s.second * t.second});
    return from_terms(std::move(ts));
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].first == b.t_[i].first) || a.t_[i].second != b.t_[i].second) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const CycNum& c) const {
    if (c.is_zero()) return {};
    MPoly r = *this;
    for (auto& t : r.t_) t.second = t.second * c;
    r.drop_zeros();
    return r;
  }
  MPoly shifted(const Mono& m) const {
    MPoly r = *this;
    for (auto& t : r.t_) t.first = t.first * m;
    return r;
  }
  MPoly pow(int k) const {
    MPoly r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = t_.size(); i-- > 0;) {
      const auto& [m, c] = t_[i];
      if (i + 1 != t_.size()) os << " + ";
      bool mono1 = m.deg == 0;
      if (c.is_one() && !mono1)
        os << m.str();
      else if (mono1)
        os << "(" << c.str() << ")";
      else
        os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
  }

 private:
  static MPoly merge(const MPoly& a, const MPoly& b, bool negate_b) {
    MPoly r;
    r.t_.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
        r.t_.push_back({b.t_[j].first, negate_b ? -b.t_[j].second : b.t_[j].second});
        ++j;
      } else {
        CycNum c = negate_b ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!c.is_zero()) r.t_.push_back({a.t_[i].first, c});
        ++i;
        ++j;
      }
    }
    return r;
  }
  void drop_zeros() {
    t_.erase(std::remove_if(t_.begin(), t_.end(), [](const Term& t) { return t.second.is_zero(); }), t_.end());
  }

  std::vector<Term> t_;
};

inline MPoly var(Var v) { return MPoly::var(v); }
inline MPoly operator*(const CycNum& c, const MPoly& p) { return p.scaled(c); }

// exact quotient f/g, or NotDivisible
inline MPoly exact_div(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (g.is_constant()) return f.scaled(g.constant_term().inverse());
  const auto& [lm, lc] = g.leading();
  CycNum inv = lc.inverse();
  std::vector<MPoly::Term> q;
  MPoly r = f;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!lm.divides(rm)) throw NotDivisible(f.str() + " by " + g.str());
    Mono m = rm.quotient(lm);
    CycNum c = rc * inv;
    q.push_back({m, c});
    r -= g.shifted(m).scaled(c);
  }
  return MPoly::from_terms(std::move(q));
}

inline bool divides(const MPoly& g, const MPoly& f) {
  try {
    exact_div(f, g);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

inline MPoly coeff_of(const MPoly& f, Var v, int k) {
  std::vector<MPoly::Term> ts;
  for (const auto& [m, c] : f.terms()) {
    if (m.e[v] != k) continue;
    Mono n = m;
    n.e[v] = 0;
    n.deg = static_cast<std::uint16_t>(n.deg - k);
    ts.push_back({n, c});
  }
  return MPoly::from_terms(std::move(ts));
}

// simultaneous substitution v -> image for each listed variable
inline MPoly substitute(const MPoly& f, const Subst& s) {
  if (s.empty() || f.is_zero()) return f;
  bool linear = true;  // every image is c*w, a constant, or zero
  for (auto& [v, img] : s)
    if (img.size() > 1 || (img.size() == 1 && img.leading().first.deg > 1)) linear = false;
  std::array<int, kMaxVars> slot;
  slot.fill(-1);
  for (size_t i = 0; i < s.size(); ++i) slot[s[i].first] = static_cast<int>(i);
  if (linear) {
    std::vector<MPoly::Term> ts;
    ts.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
      Mono n;
      CycNum coef = c;
      bool dead = false;
      for (int v = 0; v < kMaxVars && !dead; ++v) {
        int k = m.e[v];
        if (!k) continue;
        if (slot[v] < 0) {
          n.e[v] = static_cast<std::uint8_t>(n.e[v] + k);
          n.deg = static_cast<std::uint16_t>(n.deg + k);
          continue;
        }
        const MPoly& img = s[slot[v]].second;
        if (img.is_zero()) {
          dead = true;
          break;
        }
        const auto& [im, ic] = img.terms()[0];
        if (!ic.is_one()) coef = coef * ic.pow(k);
        for (int w = 0; w < kMaxVars; ++w)
          if (im.e[w]) {
            n.e[w] = static_cast<std::uint8_t>(n.e[w] + k * im.e[w]);
            n.deg = static_cast<std::uint16_t>(n.deg + k * im.e[w]);
          }
      }
      if (!dead) ts.push_back({n, coef});
    }
    return MPoly::from_terms(std::move(ts));
  }
  std::map<std::pair<int, int>, MPoly> powers;
  auto power = [&](int v, int k) -> const MPoly& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, s[slot[v]].second.pow(k)).first;
    return it->second;
  };
  MPoly out;
  for (const auto& [m, c] : f.terms()) {
    Mono rest;
    MPoly acc(c);
    for (int v = 0; v < kMaxVars; ++v) {
      int k = m.e[v];
      if (!k) continue;
      if (slot[v] < 0) {
        rest.e[v] = static_cast<std::uint8_t>(k);
        rest.deg = static_cast<std::uint16_t>(rest.deg + k);
      } else {
        acc = acc * power(v, k);
      }
    }
    out += acc.shifted(rest);
  }
  return out;
}

inline MPoly scale_var(const MPoly& f, Var v, const CycNum& c) {
  return substitute(f, {{v, MPoly::var(v).scaled(c)}});
}

inline MPoly rename(const MPoly& f, const std::vector<std::pair<Var, Var>>& map) {
  Subst s;
  for (auto [a, b] : map) s.push_back({a, MPoly::var(b)});
  return substitute(f, s);
}

inline MPoly eval_zero(const MPoly& f, std::initializer_list<Var> vs) {
  Subst s;
  for (Var v : vs) s.push_back({v, MPoly()});
  return substitute(f, s);
}

// prod_{j in S} (u - eta^j v)
inline MPoly perm_product(const Setting& st, const std::vector<int>& S, Var u = X, Var v = Y) {
  MPoly r(1);
  for (int j : S) r *= MPoly::var(u) - MPoly::var(v).scaled(st.eta(j));
  return r;
}
inline MPoly perm_product(int d, const std::vector<int>& S, Var u = X, Var v = Y) {
  return perm_product(Setting(d), S, u, v);
}

// all monomials of exact total degree k in the given variables
inline std::vector<Mono> monomials_of_degree(const std::vector<Var>& vars, int k) {
  std::vector<Mono> out;
  if (k < 0) return out;
  Mono cur;
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i + 1 == vars.size() || vars.empty()) {
      if (vars.empty()) {
        if (left == 0) out.push_back(cur);
        return;
      }
      cur.e[vars[i]] = static_cast<std::uint8_t>(left);
      cur.deg = static_cast<std::uint16_t>(k);
      out.push_back(cur);
      cur.e[vars[i]] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur.e[vars[i]] = static_cast<std::uint8_t>(a);
      rec(i + 1, left - a);
    }
    cur.e[vars[i]] = 0;
  };
  rec(0, k);
  return out;
}

}  // namespace mfcft
