// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <cstdio>
#include <future>
#include <map>

#include "mfcft/suites.hpp"

using namespace mfcft;

namespace {

struct Line {
  bool ok;
  std::string what, detail;
};

const Check* find(const Report& r, const std::string& name) {
  for (auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// every named check passes in every listed report
Line require(const std::map<int, Report>& reps, std::initializer_list<int> ds, std::initializer_list<const char*> names,
             std::string what) {
  bool ok = true;
  std::string bad;
  for (int d : ds)
    for (auto* n : names) {
      const Check* c = find(reps.at(d), n);
      if (!c || c->status != Status::pass) {
        ok = false;
        bad += " " + std::string(n) + "@d=" + std::to_string(d);
      }
    }
  return {ok, std::move(what), ok ? "" : "failing:" + bad};
}

}  // namespace

int main() {
  std::map<int, std::future<Report>> jobs;
  for (int d : {3, 5, 7}) jobs[d] = std::async(std::launch::async, [d] { return verify(Setting(d), suite_names()); });
  auto galois_job = std::async(std::launch::async, [] { return verify(Setting(5, 2), suite_names()); });
  std::map<int, Report> reps;
  for (auto& [d, j] : jobs) reps[d] = j.get();
  Report galois = galois_job.get();

  std::vector<Line> lines;

  {
    Line l = require(reps, {3, 5, 7}, {"core.kappa"}, "u o n = kappa(d) 1_I exactly, d = 3, 5, 7");
    bool k3 = kappa(3) == CycNum::one(3);
    l.ok &= k3;
    l.detail += k3 ? " kappa(3) = 1" : " kappa(3) != 1";
    lines.push_back(l);
  }
  {
    Line l = require(reps, {3, 5}, {"core.zigzag"}, "zig-zag identities up to graded homotopy, d = 3, 5");
    for (int d : {3, 5}) {
      const Check* c = find(reps.at(d), "core.zigzag");
      bool def = c && c->detail.find("definitive") != std::string::npos;
      l.ok &= def;
      if (!def) l.detail += " non-definitive search at d=" + std::to_string(d);
    }
    lines.push_back(l);
  }
  lines.push_back(require(reps, {3, 5, 7}, {"graded.g_pair"},
                          "g-pair cycles of degree 0 inducing homology isomorphisms, all (a,b,mu), d = 3, 5, 7"));
  {
    Line l = require(reps, {3, 5, 7}, {"equivalence.fusion_rings"}, "fusion rings agree under the label map");
    std::map<int, int> want{{3, 36}, {5, 400}, {7, 1764}};
    for (auto [d, n] : want) {
      EquivalenceReport e = verify_equivalence(Setting(d));
      bool ok = e.products == n && e.mismatches == 0;
      l.ok &= ok;
      l.detail += " d=" + std::to_string(d) + ": " + std::to_string(e.products) + " products, " +
                  std::to_string(e.mismatches) + " mismatches;";
    }
    lines.push_back(l);
  }
  lines.push_back(
      require(reps, {3, 5, 7}, {"graded.hom_rigidity"}, "graded Hom rigidity over consecutive sets, d = 3, 5, 7"));
  {
    Line l = require(reps, {3, 5, 7}, {"tl.relations", "tl.jones_wenzl", "tl.functor"},
                     "Temperley-Lieb relations, Jones-Wenzl projectors and their vanishing");
    Line a = require(reps, {3}, {"tl.jw_null_homotopy"}, "");
    Line b = require(reps, {5, 7}, {"tl.end_certificate"}, "");
    l.ok = l.ok && a.ok && b.ok;
    l.detail += a.detail + b.detail;
    lines.push_back(l);
  }
  lines.push_back(require(reps, {3, 5, 7}, {"cft.weights", "cft.locality", "cft.twist_additivity", "cft.dimensions"},
                          "CFT weights, locality, twist additivity, dim[1] = kappa"));
  lines.push_back(require(reps, {3, 5, 7},
                          {"equivariance.cocycle", "equivariance.duality", "equivariance.hexagon", "equivariance.chi"},
                          "tau cocycle, equivariant u and n, strict hexagon, chi(a) certified"));
  {
    Setting st(5, 2);
    CycNum k2 = galois_twist(kappa(5), st.odd_exponent());
    bool kap = k2 == st.kappa() && quantum_dim(st, 1) == st.kappa();
    EquivalenceReport e = verify_equivalence(st);
    bool same = e.ok() && e.products == 400 && e.mismatches == 0;
    bool ok = galois.ok() && kap && same;
    std::string det = std::to_string(galois.failures().size()) + " failing checks; " + std::to_string(e.products) +
                      " products agree; kappa_2 = " + fmt_cyc(st.kappa()) + (kap ? " (Galois image of kappa)" : " (not the Galois image)");
    lines.push_back({ok, "full pipeline at d = 5 with root exponent 2", det});
  }
  {
    Line l = require(reps, {3, 5, 7}, {"equivalence.index_convention"},
                     "fusion index convention: homology-certified index kept, the other fails rigidity");
    l.detail += " " + find(reps.at(5), "equivalence.index_convention")->detail;
    lines.push_back(l);
  }

  bool all = true;
  for (size_t i = 0; i < lines.size(); ++i) {
    auto& l = lines[i];
    all &= l.ok;
    auto det = l.detail.substr(std::min(l.detail.find_first_not_of(' '), l.detail.size()));
    std::printf("%s  %2zu  %s%s%s\n", l.ok ? "PASS" : "FAIL", i + 1, l.what.c_str(), det.empty() ? "" : " | ", det.c_str());
  }
  return all ? 0 : 1;
}
