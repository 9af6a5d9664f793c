#pragma once

// Named verification checks grouped into suites, and the report they produce.

#include <future>
#include <sstream>

#include "correspondence.hpp"

namespace mfcft {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
  }
}

struct Check {
  std::string name, ref;
  Status status = Status::skipped;
  std::string detail;
};

struct Options {
  std::optional<int> degree_bound;
};

struct Report {
  int d = 0, root_exponent = 1;
  std::vector<Check> checks;
  bool ok() const {
    for (auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
  std::vector<const Check*> failures() const {
    std::vector<const Check*> r;
    for (auto& c : checks)
      if (c.status == Status::fail) r.push_back(&c);
    return r;
  }
};

class SuiteRun {
 public:
  explicit SuiteRun(std::vector<Check>& out) : out_(out) {}
  void add(std::string name, std::string ref, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), std::move(ref), ok ? Status::pass : Status::fail, std::move(detail)});
  }
  void skip(std::string name, std::string ref, std::string why) {
    out_.push_back({std::move(name), std::move(ref), Status::skipped, std::move(why)});
  }
  // exceptions become failures carrying the message
  template <class F>
  void guarded(const std::string& name, const std::string& ref, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, ref, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::vector<Check>& out_;
};

inline std::vector<PermLabel> proper_subsets(int d) {
  std::vector<PermLabel> r;
  for (int mask = 1; mask < (1 << d) - 1; ++mask) {
    std::vector<int> s;
    for (int j = 0; j < d; ++j)
      if (mask >> j & 1) s.push_back(j);
    r.push_back(PermLabel::of(d, s));
  }
  return r;
}

inline std::vector<PermLabel> consecutive_labels(int d) {
  std::vector<PermLabel> r;
  for (int l = 0; l <= d - 2; ++l)
    for (int a = 0; a < d; ++a) r.push_back(PermLabel::consecutive(d, a, l));
  return r;
}

inline std::string fmt_cyc(const CycNum& c) {
  std::ostringstream o;
  auto f = to_float(c);
  o << c.str() << " ~ " << f.real();
  if (std::abs(f.imag()) > 1e-12) o << (f.imag() < 0 ? " - " : " + ") << std::abs(f.imag()) << "i";
  return o.str();
}

// ---------------------------------------------------------------- core

inline void suite_core(const Setting& st, const Options& opt, std::vector<Check>& out) {
  SuiteRun run(out);
  int d = st.d;
  run.guarded("core.factorisation", "permutation type bifactorisations", [&] {
    int bad = 0, n = 0;
    for (auto& S : proper_subsets(d)) {
      ++n;
      if (!verify_factorisation(*perm_mf(st, S))) ++bad;
    }
    Obj T = perm_mf(st, self_dual_label(d));
    bool tt = verify_factorisation(*tensor_mf(T, T));
    bool tw = verify_factorisation(*twist_mf(T, 1, -1)) && verify_factorisation(*twist_mf(tensor_mf(T, T), 2, 1));
    run.add("core.factorisation", "permutation type bifactorisations", bad == 0 && tt && tw,
            std::to_string(n) + " objects P_S, T(x)T " + (tt ? "ok" : "broken") + ", twisted objects " +
                (tw ? "ok" : "broken"));
  });
  run.guarded("core.unit_isos", "unit isomorphisms", [&] {
    bool cyc = true;
    for (auto& S : consecutive_labels(d)) {
      auto [l, r] = unit_isos(perm_mf(st, S));
      cyc &= is_cycle(l) && is_cycle(r);
    }
    Obj T = perm_mf(st, self_dual_label(d));
    auto [lT, rT] = unit_isos(T);
    bool iso = is_homotopy_iso(lT) && is_homotopy_iso(rT);
    Obj I = unit_mf(st);
    auto [lI, rI] = unit_isos(I);
    MFMorphism sec = solve_section(lI);
    bool agree = homotopy_solve(compose(rI, sec), identity(I)).found;
    run.add("core.unit_isos", "unit isomorphisms", cyc && iso && agree,
            std::string("cycles ") + (cyc ? "yes" : "no") + ", H-iso on T " + (iso ? "yes" : "no") +
                ", lambda_I ~ rho_I " + (agree ? "yes" : "no"));
  });
  run.guarded("core.dual_iso", "duals of permutation type objects", [&] {
    int bad = 0, n = 0;
    for (auto& S : proper_subsets(d)) {
      ++n;
      MFMorphism f = perm_dual_iso(st, S);
      if (!is_cycle(f) || !is_homotopy_iso(f)) ++bad;
    }
    Obj I = unit_mf(st);
    bool self = *dual_rank1(I)->d0.a.data() == I->d0(0, 0) && dual_rank1(I)->d1(0, 0) == -I->d1(0, 0) * MPoly(-1);
    run.add("core.dual_iso", "duals of permutation type objects", bad == 0 && self,
            std::to_string(n - bad) + "/" + std::to_string(n) + " dual isomorphisms certified");
  });
  run.guarded("core.residue", "residue functional", [&] {
    Obj I = unit_mf(st);
    bool unit = g_residue(*I, MPoly(1)) == MPoly(-1);
    Obj T = perm_mf(st, self_dual_label(d));
    MPoly d1yz = substitute(T->d1(0, 0), renaming({{X, Y}, {Y, Z}}));
    bool delta = true;
    MPoly xz = MPoly::var(X) - MPoly::var(Z);
    for (int m = 0; m < 2 * d; ++m) {
      MPoly g = g_residue(*T, d1yz * MPoly::var(Y).pow(m));
      delta &= g == (m == 0 ? xz : MPoly());
    }
    run.add("core.residue", "residue functional", unit && delta,
            std::string("G_I(1) = -1 ") + (unit ? "yes" : "no") + ", G(d1 y^m) = (x-z) delta_m0 " +
                (delta ? "yes" : "no"));
  });
  run.guarded("core.kappa", "duality maps u, n", [&] {
    Duality D = duality_un(st);
    bool cycles = is_cycle(D.ev) && is_cycle(D.coev) && is_cycle(D.u) && is_cycle(D.n);
    MFMorphism un = compose(D.u, D.n);
    bool k = equal(un, scaled(identity(D.I), st.kappa()));
    CycNum c = un.f[0](0, 0).apply(MPoly(1)).is_zero() ? CycNum() : un.f[0](0, 0).apply(MPoly(1)).leading().second;
    run.add("core.kappa", "duality maps u, n", cycles && k,
            "u o n = " + fmt_cyc(c) + ", kappa = " + fmt_cyc(st.kappa()) + (cycles ? "" : ", non-cycle found"));
  });
  run.guarded("core.zigzag", "zig-zag identities", [&] {
    TLFunctor F(st);
    auto [z1, z2] = zigzags(F);
    int bound = opt.degree_bound.value_or(-1);
    HomotopyResult h1 = homotopy_solve(z1, identity(F.T()), bound);
    HomotopyResult h2 = homotopy_solve(z2, identity(F.T()), bound);
    std::string kind = h1.definitive && h2.definitive ? "graded, definitive" : "bounded search";
    run.add("core.zigzag", "zig-zag identities", h1.found && h2.found,
            kind + "; homotopies found: " + (h1.found ? "yes" : "no") + ", " + (h2.found ? "yes" : "no") +
                "; unknowns " + std::to_string(h1.unknowns));
  });
  run.guarded("core.twists", "twisted actions", [&] {
    bool ok = true;
    for (auto& S : consecutive_labels(d))
      for (int a = 0; a < d; ++a) ok &= is_cycle(s_iso(st, S, a, -a)) && is_cycle(s_iso(st, S, a, 0));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) ok &= is_cycle(chi_mu(st, a, b));
    ok &= equal(chi_mu(st, 0, 0), unit_left(unit_mf(st), unit_mf(st)));
    run.add("core.twists", "twisted actions", ok, "s_{a,b} and mu_{a,b} are cycles, mu_{0,0} = lambda_I");
  });
}

// ---------------------------------------------------------------- graded

inline void suite_graded(const Setting& st, const Options&, std::vector<Check>& out) {
  SuiteRun run(out);
  int d = st.d;
  run.guarded("graded.charges", "graded permutation objects", [&] {
    bool ok = true;
    for (auto& S : proper_subsets(d)) ok &= graded_check(*hat_p(st, S));
    Obj I = graded_unit(st);
    ok &= graded_check(*I) && I->charge(0, 0) == 0 && I->charge(1, 0) == frac(2 - d, d);
    auto broken = std::make_shared<MatrixBifact>(*hat_p(st, self_dual_label(d)));
    (*broken->charges)[0][0] += frac(1, d);
    bool rejects = !graded_check(*broken);
    run.add("graded.charges", "graded permutation objects", ok && rejects,
            std::string("charge equation holds on all hat P_S; shifted charge rejected: ") + (rejects ? "yes" : "no"));
  });
  run.guarded("graded.g_pair", "graded decomposition maps", [&] {
    int n = 0, bad = 0;
    std::string first_bad;
    for (int mu = 1; mu <= d - 2; ++mu)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          ++n;
          GPair g = g_pair(st, a, b, mu);
          HomologyData H = quotient_homology(*g.AB);
          int want = mu < d - 2 ? 2 : 1;
          auto cm = morphism_cdegree(g.gm), cp = morphism_cdegree(g.gp);
          bool ok = graded_check(*g.AB) && is_cycle(g.gm) && is_cycle(g.gp) && cm && *cm == 0 && cp && *cp == 0 &&
                    H.dim_h0 == want && H.dim_h1 == want && is_homotopy_iso(hstack(g.gm, g.gp));
          if (!ok) {
            ++bad;
            if (first_bad.empty())
              first_bad = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " mu=" + std::to_string(mu);
          }
        }
    run.add("graded.g_pair", "graded decomposition maps", bad == 0,
            std::to_string(n - bad) + "/" + std::to_string(n) + " triples (a,b,mu) certified" +
                (first_bad.empty() ? "" : "; first failure " + first_bad));
  });
  run.guarded("graded.invertible_factor", "graded decomposition, invertible factor", [&] {
    int n = 0, bad = 0;
    for (int a = 0; a < d; ++a)
      for (int mu = 0; mu <= d - 2; ++mu) {
        ++n;
        if (!decompose_basic(st, a, 0, 1, mu).certified) ++bad;
        if (mu <= d - 3 && mu >= 1) {
          ++n;
          if (!decompose_basic(st, a, 1, 2, 0).certified) ++bad;
        }
      }
    run.add("graded.invertible_factor", "graded decomposition, invertible factor", bad == 0,
            std::to_string(n - bad) + "/" + std::to_string(n) + " witnesses found by the cycle solver");
  });
  run.guarded("graded.hom_rigidity", "graded morphism spaces", [&] {
    auto L = consecutive_labels(d);
    int bad = 0;
    for (auto& R : L)
      for (auto& S : L)
        if (graded_hom_dim(st, R, S) != (R == S ? 1 : 0)) ++bad;
    run.add("graded.hom_rigidity", "graded morphism spaces", bad == 0,
            std::to_string(L.size() * L.size()) + " pairs, " + std::to_string(bad) + " deviations from delta_RS");
  });
  run.guarded("graded.fusion_ring", "graded fusion ring", [&] {
    FusionRing R = mf_fusion_ring(d);
    bool ok = R.size() == d * (d - 1) && R.unit_ok() && R.commutative() && R.associative() && R.rigid();
    bool duals = true;
    for (auto& g : graded_labels(d)) {
      auto i = R.index(g.str());
      auto j = R.index(graded_dual(d, g).str());
      duals &= R.dual(i) && *R.dual(i) == j;
    }
    run.add("graded.fusion_ring", "graded fusion ring", ok && duals,
            std::to_string(R.size()) + " simples; unit, commutativity, associativity, duals -S");
  });
}

// ---------------------------------------------------------------- Temperley-Lieb

inline void suite_tl(const Setting& st, const Options& opt, std::vector<Check>& out) {
  SuiteRun run(out);
  int d = st.d;
  CycNum k = st.kappa();
  run.guarded("tl.relations", "Temperley-Lieb relations", [&] {
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i < n; ++i) {
        auto e = tl_e(n, i, k);
        ok &= tl_compose(e, e) == e.scaled(k);
        if (i + 1 < n) {
          auto f = tl_e(n, i + 1, k);
          ok &= tl_compose(e, tl_compose(f, e)) == e && tl_compose(f, tl_compose(e, f)) == f;
        }
        for (int j = i + 2; j < n; ++j) ok &= tl_compose(e, tl_e(n, j, k)) == tl_compose(tl_e(n, j, k), e);
      }
    bool cat = tl_dim(3) == 5 && tl_dim(4) == 14;
    run.add("tl.relations", "Temperley-Lieb relations", ok && cat, "n <= 5; basis sizes are Catalan numbers");
  });
  run.guarded("tl.jones_wenzl", "Jones-Wenzl projectors", [&] {
    bool ok = true;
    std::string det;
    for (int n = 1; n <= d - 1; ++n) {
      auto p = jw(st, n);
      bool idem = tl_compose(p, p) == p;
      bool kill = true;
      for (int i = 1; i < n; ++i) kill &= tl_compose(tl_cap(n, i, k), p).is_zero();
      bool tr = tl_trace(p) == st.qint(n + 1);
      ok &= idem && kill && tr;
      det += "p" + std::to_string(n) + (idem && kill && tr ? " ok " : " FAIL ");
    }
    run.add("tl.jones_wenzl", "Jones-Wenzl projectors", ok, det + "(idempotent, killed by caps, trace [n+1])");
  });
  run.guarded("tl.functor", "functor from Temperley-Lieb", [&] {
    TLFunctor F(st);
    bool cap = equal(F.evaluate(TLMorphism::diagram(cap_diagram(), k)), F.u());
    bool cup = equal(F.evaluate(TLMorphism::diagram(cup_diagram(), k)), F.n());
    MFMorphism Fe = F.evaluate(tl_e(2, 1, k));
    bool e2 = equal(compose(Fe, Fe), scaled(Fe, k)) && equal(F.evaluate(tl_compose(tl_e(2, 1, k), tl_e(2, 1, k))), scaled(Fe, k));
    run.add("tl.functor", "functor from Temperley-Lieb", cap && cup && e2,
            std::string("F(cap) = u ") + (cap ? "yes" : "no") + ", F(cup) = n " + (cup ? "yes" : "no") +
                ", F(e1)^2 = kappa F(e1) " + (e2 ? "yes" : "no"));
  });
  if (d == 3) {
    run.guarded("tl.jw_null_homotopy", "projector vanishing", [&] {
      TLFunctor F(st);
      JWVanishing v = jw_null_homotopy(F);
      run.add("tl.jw_null_homotopy", "projector vanishing", v.witness_iso && v.homotopy.found,
              std::string("I -> T(x)T certified: ") + (v.witness_iso ? "yes" : "no") + "; null-homotopy of F(p2) " +
                  (v.homotopy.found ? "found" : "not found") + (v.homotopy.definitive ? " (graded, definitive)" : ""));
    });
  } else {
    run.skip("tl.jw_null_homotopy", "projector vanishing", "direct null-homotopy only for two strands (d = 3)");
  }
  if (d >= 5) {
    run.guarded("tl.end_certificate", "projector vanishing", [&] {
      bool ok = true;
      std::string det;
      for (int a = 0; a < d; ++a) {
        EndCertificate c = jw_end_certificate(st, a);
        ok &= c.tl_dim == 2 && c.mf_dim == 1 && c.witness_iso;
        if (a == 0)
          det = "dim End_TL(1 (x) p" + std::to_string(d - 2) + ") = " + std::to_string(c.tl_dim) +
                ", dim End(T (x) P(a:" + std::to_string(d - 2) + ")) = " + std::to_string(c.mf_dim);
      }
      run.add("tl.end_certificate", "projector vanishing", ok, det + " for all a");
    });
  } else {
    run.skip("tl.end_certificate", "projector vanishing", "dimension count needs d >= 5");
  }
  (void)opt;
}

// ---------------------------------------------------------------- CFT side

inline void suite_cft(const Setting& st, const Options&, std::vector<Check>& out) {
  SuiteRun run(out);
  int d = st.d;
  run.guarded("cft.weights", "conformal weights", [&] {
    bool h = h_weight(d, d - 2, d, 2) == 0 && h_weight(d, 0, 0, 0) == 0;
    run.add("cft.weights", "conformal weights", h, "h(d-2, d, 2) = " + h_weight(d, d - 2, d, 2).get_str() + " mod 1");
  });
  run.guarded("cft.locality", "local modules", [&] {
    bool ok = true;
    int n = 0;
    for (int l = 0; l <= d - 2; ++l)
      for (int r = 0; r < 2 * d; ++r)
        for (int s = 0; s < 4; ++s) {
          ++n;
          auto [A, B] = induce(d, simple_e(d, l, r, s));
          bool same = Rational(h_weight(d, A) - h_weight(d, B)).get_den() == 1;
          ok &= same == is_local(l, r, s);
          auto [C, D] = induce(d, B);
          ok &= C == B && D == A;
        }
    run.add("cft.locality", "local modules", ok,
            std::to_string(n) + " labels; twist equality of induced pair matches l + r + s even");
  });
  run.guarded("cft.twist_additivity", "Mueger centraliser", [&] {
    bool gen = twist_additive(d, {0, 2, 0}, {1, d, 0});
    bool unit = twist_additive(d, {0, 0, 0}, {1, d, 0});
    bool neg = d < 5 || !twist_additive(d, {0, 1, 0}, {1, d, 0});
    run.add("cft.twist_additivity", "Mueger centraliser", gen && unit && neg,
            std::string("[0,2,0] with [1,d,0]: ") + (gen ? "additive" : "not additive"));
  });
  run.guarded("cft.dimensions", "quantum dimensions", [&] {
    bool k = quantum_dim(st, 1) == st.kappa();
    bool hom = true;
    for (int l = 0; l <= d - 2; ++l)
      for (int m = 0; m <= d - 2; ++m) {
        CycNum s;
        for (int c : su2_fuse(d, l, m)) s += quantum_dim(st, c);
        hom &= s == quantum_dim(st, l) * quantum_dim(st, m);
      }
    run.add("cft.dimensions", "quantum dimensions", k && hom,
            "dim[1] = " + fmt_cyc(quantum_dim(st, 1)) + "; dims are a character of su(2) fusion");
  });
  run.guarded("cft.root_convention", "quantum dimensions", [&] {
    CycNum with_eta = quantum_int(2, st.eta(1));
    bool ok = quantum_dim(st, 1) == st.kappa() && !(with_eta == st.kappa());
    run.add("cft.root_convention", "quantum dimensions", ok,
            "[2] at q = e^{i pi/d} gives " + fmt_cyc(quantum_dim(st, 1)) + "; at eta = e^{2 pi i/d} it gives " +
                fmt_cyc(with_eta) + ", so dimensions use q");
  });
  run.guarded("cft.fusion_ring", "NS fusion ring", [&] {
    FusionRing R = cft_fusion_ring(d);
    CftFactorisation f = cft_factorisation(d);
    bool ok = R.size() == d * (d - 1) && R.unit_ok() && R.commutative() && R.associative() && f.ok() &&
              f.t_part_size == d - 1;
    // fusion with [1,d] on the diagonal labels [l, dl]
    bool diag = true;
    for (int l = 0; l <= d - 2; ++l) {
      auto p = ns_fuse(d, {1, d % (2 * d)}, ns_label(d, l, d * l));
      std::vector<NSLabel> want;
      if (l >= 1) want.push_back(ns_label(d, l - 1, d * (l + 1)));
      if (l + 1 <= d - 2) want.push_back(ns_label(d, l + 1, d * (l + 1)));
      std::sort(want.begin(), want.end());
      diag &= p == want;
    }
    run.add("cft.fusion_ring", "NS fusion ring", ok && diag,
            std::to_string(R.size()) + " simples; factorises as " + std::to_string(f.t_part_size) + " x " +
                std::to_string(d) + " on [1,d] and [0,2]");
  });
  run.guarded("cft.qform", "quadratic forms", [&] {
    bool ok = qform(2 * d, 0) == 0 && qform(4, 1) == frac(1, 8);
    for (int r = 0; r < 2 * d; ++r) ok &= qform(2 * d, r + 2 * d) == qform(2 * d, r);
    run.add("cft.qform", "quadratic forms", ok, "q_m(r) = r^2/2m mod 1, periodic in r");
  });
}

// ---------------------------------------------------------------- equivariance

inline void suite_equivariance(const Setting& st, const Options&, std::vector<Check>& out) {
  SuiteRun run(out);
  int d = st.d;
  run.guarded("equivariance.cocycle", "equivariant structure on P_S", [&] {
    int bad = 0, n = 0;
    auto labels = d <= 5 ? proper_subsets(d) : consecutive_labels(d);
    for (auto& S : labels) {
      ++n;
      if (!check_cocycle(perm_structure(st, S), d)) ++bad;
    }
    bool unit = true;
    for (int a = 0; a < d; ++a) unit &= equal(tau(st, PermLabel::of(d, {0}), a), s_iso(st, PermLabel::of(d, {0}), a, -a));
    run.add("equivariance.cocycle", "equivariant structure on P_S", bad == 0 && unit,
            std::to_string(n - bad) + "/" + std::to_string(n) + " objects; tau on I is s_{a,-a}");
  });
  run.guarded("equivariance.duality", "equivariance of u and n", [&] {
    TLFunctor F(st);
    DualityEquivariance e = duality_equivariance(st, F.duality());
    bool coev = coev_equivariant(st, self_dual_label(d)) && coev_equivariant(st, PermLabel::of(d, {0}));
    run.add("equivariance.duality", "equivariance of u and n", e.u && e.n && coev,
            std::string("u ") + (e.u ? "yes" : "no") + ", n " + (e.n ? "yes" : "no") + ", coev " + (coev ? "yes" : "no"));
  });
  run.guarded("equivariance.hexagon", "coherence of mu", [&] {
    int bad = 0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          if (!mu_hexagon(st, a, b, c)) ++bad;
    run.add("equivariance.hexagon", "coherence of mu", bad == 0,
            std::to_string(d * d * d - bad) + "/" + std::to_string(d * d * d) + " triples hold as strict equalities");
  });
  run.guarded("equivariance.chi", "invertible objects chi(a)", [&] {
    bool ok = true;
    for (int a = 0; a < d; ++a) ok &= chi_certified(st, a);
    run.add("equivariance.chi", "invertible objects chi(a)", ok, "chi(a) = P_{-a} certified on homology for all a");
  });
}

// ---------------------------------------------------------------- equivalence

inline void suite_equivalence(const Setting& st, const Options&, std::vector<Check>& out) {
  SuiteRun run(out);
  int d = st.d;
  run.guarded("equivalence.fusion_rings", "tensor equivalence", [&] {
    EquivalenceReport r = verify_equivalence(st);
    std::string det = std::to_string(r.products) + " products compared, " + std::to_string(r.mismatches) +
                      " mismatches; bijection " + (r.bijective ? "yes" : "no") + ", unit " + (r.unit ? "yes" : "no") +
                      ", duals " + (r.duality ? "yes" : "no") + ", PF dimensions " + (r.pf_dims ? "yes" : "no") +
                      ", twisted dimension character " + (r.dim_character ? "yes" : "no");
    for (auto& s : r.mismatch_samples) det += "; mismatch " + s;
    run.add("equivalence.fusion_rings", "tensor equivalence", r.ok(), det);
  });
  run.guarded("equivalence.index_convention", "fusion index convention", [&] {
    FusionRing R = mf_fusion_ring(d);
    FusionRing plus = index_formula_ring(d, 1), minus = index_formula_ring(d, -1);
    GradedLabel T = normal_label(d, (d - 1) / 2, 1);
    GClass tt = index_formula_product(d, T, T, -1);
    bool unit_missing = tt.find({0, 0}) == tt.end();
    GClass tt_plus = index_formula_product(d, T, T, 1);
    bool unit_present = tt_plus.count({0, 0}) == 1;
    // the summands of T (x) T come from a homology-certified g-pair
    Decomposition dec = decompose_basic(st, (d - 1) / 2, 1, (d - 1) / 2, 1);
    bool ok = R.N == plus.N && R.N != minus.N && unit_missing && unit_present && dec.certified;
    run.add("equivalence.index_convention", "fusion index convention", ok,
            std::string("index a+b+(lambda+mu-nu)/2 agrees with the homology-certified ring: ") +
                (R.N == plus.N ? "yes" : "no") + "; index a+b-(lambda+mu-nu)/2 puts I in T(x)T: " +
                (unit_missing ? "no, although T is self-dual" : "yes"));
  });
}

// ---------------------------------------------------------------- driver

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"core", "graded", "tl", "cft", "equivariance", "equivalence"};
  return n;
}

inline std::vector<Check> run_suite(const std::string& name, const Setting& st, const Options& opt) {
  std::vector<Check> out;
  if (name == "core") suite_core(st, opt, out);
  else if (name == "graded") suite_graded(st, opt, out);
  else if (name == "tl") suite_tl(st, opt, out);
  else if (name == "cft") suite_cft(st, opt, out);
  else if (name == "equivariance") suite_equivariance(st, opt, out);
  else if (name == "equivalence") suite_equivalence(st, opt, out);
  else throw OutOfRange("unknown suite " + name);
  return out;
}

inline Report verify(const Setting& st, const std::vector<std::string>& suites, const Options& opt = {}) {
  Report rep;
  rep.d = st.d;
  rep.root_exponent = st.l;
  std::vector<std::future<std::vector<Check>>> jobs;
  for (auto& s : suites) jobs.push_back(std::async(std::launch::async, [s, st, opt] { return run_suite(s, st, opt); }));
  for (auto& j : jobs)
    for (auto& c : j.get()) rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace mfcft
