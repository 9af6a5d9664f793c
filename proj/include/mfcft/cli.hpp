#pragma once

// Command implementations behind the mfcft executable: fusion tables,
// product decomposition, verification suites and the ring comparison.
// Each command returns its rendered output and an exit code.

#include <json.hpp>

#include "suites.hpp"

namespace mfcft::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

enum class Format { json, markdown };

struct Config {
  int d = 3;
  int root_exponent = 1;
  std::optional<int> degree_bound;
  Format format = Format::json;

  Setting setting() const {
    require_odd(d);
    return Setting(d, root_exponent);
  }
};

struct Result {
  std::string output;
  int exit_code = kOk;
};

inline json to_json(const GradedLabel& g) { return {{"a", g.a}, {"lambda", g.lambda}}; }
inline json to_json(const NSLabel& L) { return {{"l", L.l}, {"r", L.r}}; }

inline json to_json(const Check& c) {
  return {{"name", c.name}, {"paper_ref", c.ref}, {"status", status_name(c.status)}, {"detail", c.detail}};
}

inline json report_json(const Report& r, json tables = json::object()) {
  json checks = json::array();
  for (auto& c : r.checks) checks.push_back(to_json(c));
  return {{"d", r.d}, {"root_exponent", r.root_exponent}, {"checks", checks}, {"tables", tables}};
}

inline std::string md_checks(const Report& r) {
  std::ostringstream o;
  o << "| check | status | detail |\n|---|---|---|\n";
  for (auto& c : r.checks) o << "| " << c.name << " | " << status_name(c.status) << " | " << c.detail << " |\n";
  return o.str();
}

inline std::string md_header(const Config& c, const std::string& title) {
  return "## " + title + " (d = " + std::to_string(c.d) + ", root exponent " + std::to_string(c.root_exponent) +
         ")\n\n";
}

// ---------------------------------------------------------------- fusion-table

enum class Side { cft, mf };

struct TableEntry {
  json left, right, summands;
  std::string left_s, right_s, summands_s;
};

inline std::vector<TableEntry> fusion_entries(int d, Side side) {
  std::vector<TableEntry> out;
  auto render = [](const auto& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : " + ") + x.str();
    return s.empty() ? std::string("0") : s;
  };
  if (side == Side::cft) {
    auto L = ns_simples(d);
    for (auto& A : L)
      for (auto& B : L) {
        auto p = ns_fuse(d, A, B);
        json sj = json::array();
        for (auto& c : p) sj.push_back(to_json(c));
        out.push_back({to_json(A), to_json(B), sj, A.str(), B.str(), render(p)});
      }
  } else {
    GradedProducts P(d);
    auto L = graded_labels(d);
    std::sort(L.begin(), L.end());
    for (auto& A : L)
      for (auto& B : L) {
        std::vector<GradedLabel> p;
        json sj = json::array();
        for (auto& [C, n] : P.product(A, B)) {
          for (int k = 0; k < n; ++k) p.push_back(C);
          sj.push_back({{"label", to_json(C)}, {"multiplicity", n}});
        }
        out.push_back({to_json(A), to_json(B), sj, "P(" + A.str() + ")", "P(" + B.str() + ")", render(p)});
      }
  }
  return out;
}

inline Result cmd_fusion_table(const Config& c, Side side) {
  Setting st = c.setting();
  auto entries = fusion_entries(st.d, side);
  const char* sname = side == Side::cft ? "cft" : "mf";
  int n = side == Side::cft ? static_cast<int>(ns_simples(st.d).size()) : static_cast<int>(graded_labels(st.d).size());
  Report rep;
  rep.d = st.d;
  rep.root_exponent = st.l;
  if (c.format == Format::json) {
    json prods = json::array();
    for (auto& e : entries) prods.push_back({{"left", e.left}, {"right", e.right}, {"summands", e.summands}});
    json t = {{"fusion", {{"side", sname}, {"size", n}, {"products", prods}}}};
    return {report_json(rep, t).dump(2) + "\n", kOk};
  }
  std::ostringstream o;
  o << md_header(c, std::string("Fusion table, ") + sname + " side") << "| left | right | product |\n|---|---|---|\n";
  for (auto& e : entries) o << "| " << e.left_s << " | " << e.right_s << " | " << e.summands_s << " |\n";
  return {o.str(), kOk};
}

// ---------------------------------------------------------------- decompose

inline GradedLabel parse_label(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw OutOfRange("label must have the form a:lambda, got " + s);
  try {
    size_t p1 = 0, p2 = 0;
    int a = std::stoi(s.substr(0, colon), &p1);
    int l = std::stoi(s.substr(colon + 1), &p2);
    if (p1 != colon || p2 != s.size() - colon - 1) throw std::invalid_argument(s);
    return {a, l};
  } catch (const std::logic_error&) {
    throw OutOfRange("label must have the form a:lambda, got " + s);
  }
}

inline Result cmd_decompose(const Config& c, const GradedLabel& X, const GradedLabel& Y) {
  Setting st = c.setting();
  int d = st.d;
  for (auto& g : {X, Y})
    if (g.lambda < 0 || g.lambda > d - 2) throw OutOfRange("lambda must lie in 0..d-2, got " + std::to_string(g.lambda));
  auto summands = decompose_product(d, X.a, X.lambda, Y.a, Y.lambda);
  std::sort(summands.begin(), summands.end());
  Report rep;
  rep.d = d;
  rep.root_exponent = st.l;
  std::string method = "recursion from the lambda <= 1 cases";
  if (std::min(X.lambda, Y.lambda) <= 1) {
    bool swap = X.lambda > 1 || (Y.lambda == 0 && X.lambda != 0);
    const GradedLabel& L = swap ? Y : X;
    const GradedLabel& R = swap ? X : Y;
    Decomposition D = decompose_basic(st, L.a, L.lambda, R.a, R.lambda);
    method = D.method;
    auto ds = D.summands;
    std::sort(ds.begin(), ds.end());
    bool agree = ds == summands;
    rep.checks.push_back({"decompose.certificate", "graded decomposition maps",
                          D.certified && agree ? Status::pass : Status::fail,
                          std::string("method ") + D.method + "; homology iso " + (D.certified ? "yes" : "no") +
                              "; agrees with fusion ring " + (agree ? "yes" : "no")});
  } else {
    rep.checks.push_back({"decompose.certificate", "graded decomposition maps", Status::skipped,
                          "both factors have lambda >= 2; summands follow from the certified lambda <= 1 cases"});
  }
  if (c.format == Format::json) {
    json s = json::array();
    for (auto& g : summands) s.push_back(to_json(g));
    json t = {{"decomposition",
               {{"left", to_json(normal_label(d, X.a, X.lambda))},
                {"right", to_json(normal_label(d, Y.a, Y.lambda))},
                {"summands", s},
                {"method", method}}}};
    return {report_json(rep, t).dump(2) + "\n", rep.ok() ? kOk : kVerificationFailure};
  }
  std::ostringstream o;
  o << md_header(c, "Decomposition") << "P(" << normal_label(d, X.a, X.lambda).str() << ") (x) P("
    << normal_label(d, Y.a, Y.lambda).str() << ") = ";
  for (size_t i = 0; i < summands.size(); ++i) o << (i ? " + " : "") << "P(" << summands[i].str() << ")";
  if (summands.empty()) o << "0";
  o << "\n\n" << md_checks(rep);
  return {o.str(), rep.ok() ? kOk : kVerificationFailure};
}

// ---------------------------------------------------------------- verify, compare

inline std::vector<std::string> parse_suites(const std::string& csv) {
  std::vector<std::string> out;
  if (csv.empty() || csv == "all") return suite_names();
  std::stringstream ss(csv);
  for (std::string s; std::getline(ss, s, ',');) {
    auto& all = suite_names();
    if (std::find(all.begin(), all.end(), s) == all.end()) throw OutOfRange("unknown suite " + s);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

inline Result render_report(const Config& c, const Report& rep, const std::string& title, json tables = json::object()) {
  int code = rep.ok() ? kOk : kVerificationFailure;
  if (c.format == Format::json) return {report_json(rep, tables).dump(2) + "\n", code};
  std::ostringstream o;
  o << md_header(c, title) << md_checks(rep);
  auto f = rep.failures();
  o << "\n" << (f.empty() ? "all checks passed" : std::to_string(f.size()) + " failing check(s)") << "\n";
  return {o.str(), code};
}

inline Result cmd_verify(const Config& c, const std::vector<std::string>& suites) {
  Setting st = c.setting();
  Options opt;
  opt.degree_bound = c.degree_bound;
  return render_report(c, verify(st, suites, opt), "Verification");
}

inline Result cmd_compare(const Config& c) {
  Setting st = c.setting();
  Report rep = verify(st, {"equivalence"});
  EquivalenceReport e = verify_equivalence(st);
  json dict = json::array();
  for (auto& L : ns_simples(st.d)) dict.push_back({{"cft", to_json(L)}, {"mf", to_json(label_map(st.d, L))}});
  json t = {{"comparison",
             {{"products", e.products},
              {"mismatches", e.mismatches},
              {"kappa", to_float(st.kappa()).real()},
              {"label_map", dict}}}};
  return render_report(c, rep, "Fusion ring comparison", t);
}

}  // namespace mfcft::cli
