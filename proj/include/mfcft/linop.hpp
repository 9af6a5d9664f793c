#pragma once

// Linear maps between polynomial modules. A map is a sum of terms
// p -> c * phi(p) with phi a ring substitution, plus optionally an opaque
// linear function. Multiplication, evaluation, renaming and twisting all fall
// in the structured part, which composes and compares exactly.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "polyring.hpp"

namespace mfcft {

inline Subst canonical(Subst s) {
  std::sort(s.begin(), s.end(), [](auto& a, auto& b) { return a.first < b.first; });
  Subst r;
  for (auto& [v, img] : s) {
    if (img == MPoly::var(v)) continue;
    r.push_back({v, img});
  }
  return r;
}

// substitution equal to applying a, then b
inline Subst then(const Subst& a, const Subst& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  Subst r;
  std::array<bool, kMaxVars> seen{};
  for (auto& [v, img] : a) {
    r.push_back({v, substitute(img, b)});
    seen[v] = true;
  }
  for (auto& [v, img] : b)
    if (!seen[v]) r.push_back({v, img});
  return canonical(std::move(r));
}

inline Subst renaming(const std::vector<std::pair<Var, Var>>& m) {
  Subst s;
  for (auto [a, b] : m) s.push_back({a, MPoly::var(b)});
  return canonical(std::move(s));
}

class LinOp {
 public:
  struct Term {
    MPoly coeff;
    Subst phi;
  };
  using Fn = std::function<MPoly(const MPoly&)>;

  LinOp() = default;
  static LinOp mult(const MPoly& c) {
    LinOp r;
    if (!c.is_zero()) r.terms_.push_back({c, {}});
    return r;
  }
  static LinOp subst(Subst phi, const MPoly& c = MPoly(1)) {
    LinOp r;
    if (!c.is_zero()) r.terms_.push_back({c, canonical(std::move(phi))});
    return r;
  }
  static LinOp general(Fn f) {
    LinOp r;
    r.gen_ = std::make_shared<Fn>(std::move(f));
    return r;
  }

  bool structured() const { return !gen_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero_structured() const { return !gen_ && terms_.empty(); }
  bool is_mult() const { return !gen_ && terms_.size() <= 1 && (terms_.empty() || terms_[0].phi.empty()); }
  MPoly mult_coeff() const { return terms_.empty() ? MPoly() : terms_[0].coeff; }

  MPoly apply(const MPoly& p) const {
    MPoly r;
    for (auto& t : terms_) r += t.coeff * substitute(p, t.phi);
    if (gen_) r += (*gen_)(p);
    return r;
  }

  friend LinOp operator+(const LinOp& a, const LinOp& b) {
    if (a.is_zero_structured()) return b;
    if (b.is_zero_structured()) return a;
    LinOp r;
    if (a.gen_ || b.gen_) {
      r.gen_ = std::make_shared<Fn>([a, b](const MPoly& p) { return a.apply(p) + b.apply(p); });
      return r;
    }
    r.terms_ = a.terms_;
    for (auto& t : b.terms_) r.add_term(t);
    return r;
  }
  friend LinOp operator-(const LinOp& a) { return a.scaled(CycNum(-1)); }
  friend LinOp operator-(const LinOp& a, const LinOp& b) { return a + (-b); }

  LinOp scaled(const CycNum& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    LinOp r;
    for (auto& t : terms_) r.terms_.push_back({t.coeff.scaled(c), t.phi});
    if (gen_) {
      auto g = gen_;
      r.gen_ = std::make_shared<Fn>([g, c](const MPoly& p) { return (*g)(p).scaled(c); });
    }
    return r;
  }

  // a after b
  friend LinOp compose(const LinOp& a, const LinOp& b) {
    if (a.is_zero_structured() || b.is_zero_structured()) return {};
    LinOp r;
    if (a.gen_ || b.gen_) {
      r.gen_ = std::make_shared<Fn>([a, b](const MPoly& p) { return a.apply(b.apply(p)); });
      return r;
    }
    for (auto& s : a.terms_)
      for (auto& t : b.terms_) r.add_term({s.coeff * substitute(t.coeff, s.phi), then(t.phi, s.phi)});
    return r;
  }

  // p -> out(op(in(p))); inputs never carry scratch variables
  LinOp conj(const Subst& in, const Subst& out) const {
    LinOp r;
    for (auto& t : terms_) {
      Subst phi = then(then(in, t.phi), out);
      std::erase_if(phi, [](const auto& e) { return e.first >= scratch_var(0); });
      r.add_term({substitute(t.coeff, out), std::move(phi)});
    }
    if (gen_) {
      auto g = gen_;
      LinOp extra = general([g, in, out](const MPoly& p) { return substitute((*g)(substitute(p, in)), out); });
      return r + extra;
    }
    return r;
  }

  // the same map on a module whose elements only involve the live variables
  LinOp restricted(const std::array<bool, kMaxVars>& live) const {
    LinOp r;
    r.gen_ = gen_;
    for (auto& t : terms_) {
      Subst phi;
      for (auto& [v, img] : t.phi)
        if (live[v]) phi.push_back({v, img});
      r.add_term({t.coeff, phi});
    }
    return r;
  }

  // exact comparison for structured maps; nullopt when an opaque part is present
  friend std::optional<bool> structured_equal(const LinOp& a, const LinOp& b) {
    if (a.gen_ || b.gen_) return std::nullopt;
    LinOp diff = a - b;
    return diff.terms_.empty();
  }

 private:
  void add_term(const Term& t) {
    if (t.coeff.is_zero()) return;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].phi.size() != t.phi.size()) continue;
      bool same = true;
      for (size_t k = 0; k < t.phi.size() && same; ++k)
        same = terms_[i].phi[k].first == t.phi[k].first && terms_[i].phi[k].second == t.phi[k].second;
      if (!same) continue;
      terms_[i].coeff += t.coeff;
      if (terms_[i].coeff.is_zero()) terms_.erase(terms_.begin() + static_cast<long>(i));
      return;
    }
    terms_.push_back(t);
  }

  std::vector<Term> terms_;
  std::shared_ptr<Fn> gen_;
};

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

}  // namespace mfcft
