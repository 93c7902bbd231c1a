#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hermspec/charpoly.hpp"
#include "hermspec/classify.hpp"
#include "hermspec/cycles.hpp"
#include "hermspec/eigenvalues.hpp"
#include "hermspec/enumerate.hpp"
#include "hermspec/families.hpp"
#include "hermspec/mixed_graph.hpp"
#include "hermspec/sturm.hpp"
#include "hermspec/verify_exhaustive.hpp"

namespace hermspec {

struct CheckRecord {
  std::string check;
  std::string instance;
  std::string expected;
  std::string observed;
  bool pass = true;
};

struct Report {
  EnumerationScope scope;
  std::vector<CheckRecord> checks;
  double elapsed_seconds = 0;

  int total() const { return static_cast<int>(checks.size()); }
  int failed() const {
    int k = 0;
    for (const auto& c : checks) k += c.pass ? 0 : 1;
    return k;
  }
  int passed() const { return total() - failed(); }
  bool all_passed() const { return failed() == 0; }
};

namespace detail {

/// Charpoly by the checked int64 recurrence, falling back to rational
/// arithmetic on overflow (possible only well past the sizes used here).
inline IntPolynomial charpoly_int_fast(const MixedGraph& D) {
  try {
    return charpoly_leverrier_checked(D);
  } catch (const Error&) {
    return charpoly_leverrier(D);
  }
}

inline RadiusComparison compare_radius_fast(const MixedGraph& D) {
  return compare_radius(charpoly_int_fast(D), BigRat(2));
}

inline MixedGraph graph_minus(const MixedGraph& D, std::vector<int> gone) {
  std::sort(gone.begin(), gone.end());
  std::vector<int> keep;
  for (int v = 0; v < D.num_vertices(); ++v)
    if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
  return induced_subgraph(D, keep);
}

inline bool cycle_has_edge(const Cycle& c, int u, int v) {
  const auto& w = c.verts;
  for (size_t i = 0; i < w.size(); ++i) {
    int a = w[i], b = w[(i + 1) % w.size()];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

inline bool cycle_has_vertex(const Cycle& c, int v) {
  return std::find(c.verts.begin(), c.verts.end(), v) != c.verts.end();
}

inline std::string short_mg(const MixedGraph& D) {
  std::ostringstream os;
  os << "n=" << D.num_vertices() << " [";
  bool first = true;
  for (const auto& e : D.edges()) {
    if (!first) os << ",";
    first = false;
    switch (e.kind) {
      case EdgeKind::Undirected: os << e.u << "-" << e.v; break;
      case EdgeKind::Forward: os << e.u << ">" << e.v; break;
      default: os << e.v << ">" << e.u; break;
    }
  }
  os << "]";
  return os.str();
}

/// Both deletion identities, all edges and vertices, exact arithmetic.
/// The left side comes from the linear-algebra route, every right-hand
/// piece from the Sachs expansion, so the check also crosses the two
/// charpoly routes. Returns failure descriptions (empty = pass).
inline std::vector<std::string> deletion_identity_failures(const MixedGraph& D) {
  std::vector<std::string> bad;
  const IntPolynomial lhs = charpoly_int_fast(D);
  const std::vector<Cycle> cycles = enumerate_cycles(D);

  auto cycle_term = [&](const Cycle& c) -> std::optional<IntPolynomial> {
    CycleSign s = classify_cycle(D, c);
    if (!is_real(s)) return std::nullopt;
    IntPolynomial q = charpoly_sachs(graph_minus(D, c.verts));
    BigInt f = (s == CycleSign::Positive) ? BigInt(2) : BigInt(-2);
    return f * q;
  };

  for (const auto& e : D.edges()) {
    IntPolynomial rhs = charpoly_sachs(delete_edge(D, e.u, e.v));
    rhs = rhs - charpoly_sachs(graph_minus(D, {e.u, e.v}));
    for (const auto& c : cycles) {
      if (!cycle_has_edge(c, e.u, e.v)) continue;
      if (auto t = cycle_term(c)) rhs = rhs - *t;
    }
    if (!(rhs == lhs))
      bad.push_back("edge " + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ": identity mismatch");
  }
  for (int v = 0; v < D.num_vertices(); ++v) {
    IntPolynomial rhs = charpoly_sachs(graph_minus(D, {v})).shifted(1);
    for (int u : D.neighbors(v)) rhs = rhs - charpoly_sachs(graph_minus(D, {u, v}));
    for (const auto& c : cycles) {
      if (!cycle_has_vertex(c, v)) continue;
      if (auto t = cycle_term(c)) rhs = rhs - *t;
    }
    if (!(rhs == lhs)) bad.push_back("vertex " + std::to_string(v) + ": identity mismatch");
  }
  return bad;
}

struct MonotonicityStatus {
  bool hypothesis = false;      // every real cycle positive and of even length
  std::uint64_t deletions = 0;  // vertex + edge deletions tested
  std::vector<std::string> violations;
};

/// Strict radius decrease under every single vertex/edge deletion, decided
/// by float gap > 1e-8 or else by the exact bisection comparison. Edgeless
/// graphs are excluded from the hypothesis: their radius is already 0.
inline MonotonicityStatus monotonicity_status(const MixedGraph& D) {
  MonotonicityStatus st;
  st.hypothesis = D.num_edges() > 0;
  for (const auto& c : enumerate_cycles(D)) {
    CycleSign s = classify_cycle(D, c);
    if (!is_real(s)) continue;
    if (s != CycleSign::Positive || (c.length() & 1)) st.hypothesis = false;
  }

  const double rho = spectral_radius(D);
  std::optional<IntPolynomial> pd;
  auto test = [&](const MixedGraph& X, const std::string& what) {
    ++st.deletions;
    const double rx = spectral_radius(X);
    if (rho - rx > 1e-8) return;
    if (!pd) pd = charpoly_int_fast(D);
    auto c = compare_spectral_radii(charpoly_int_fast(X), *pd);
    if (c && *c < 0) return;
    std::ostringstream os;
    os << what << ": rho(deleted)=" << rx << " vs rho(D)=" << rho
       << (c ? (*c == 0 ? " (exactly equal)" : " (exactly greater)") : " (unresolved)");
    st.violations.push_back(os.str());
  };

  for (int v = 0; v < D.num_vertices(); ++v)
    test(delete_vertex(D, v).graph, "vertex " + std::to_string(v));
  for (const auto& e : D.edges())
    test(delete_edge(D, e.u, e.v), "edge " + std::to_string(e.u) + "," + std::to_string(e.v));
  return st;
}

/// Connected mixed graph: a random spanning tree, a few extra edges, and
/// uniform edge kinds.
template <class Rng>
MixedGraph random_mixed_graph(Rng& rng, int n) {
  std::vector<Edge> edges;
  auto kind = [&]() -> EdgeKind {
    switch (rng() % 3) {
      case 0: return EdgeKind::Undirected;
      case 1: return EdgeKind::Forward;
      default: return EdgeKind::Backward;
    }
  };
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rng() % static_cast<unsigned>(v)), v, kind()});
  MixedGraph T(n, edges);
  int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra && n >= 2; ++i) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u == v) continue;
    MixedGraph cur(n, edges);
    if (cur.edge_between(u, v)) continue;
    edges.push_back({u, v, kind()});
  }
  return MixedGraph(n, edges);
}

}  // namespace detail

/// One record: both deletion identities on D, exactly.
inline CheckRecord check_deletion_identities(const MixedGraph& D, const std::string& instance) {
  CheckRecord r;
  r.check = "deletion_identities";
  r.instance = instance.empty() ? detail::short_mg(D) : instance;
  r.expected = "edge and vertex identities hold exactly";
  auto bad = detail::deletion_identity_failures(D);
  if (bad.empty()) {
    r.observed = "all " + std::to_string(D.num_edges()) + " edge and " +
                 std::to_string(D.num_vertices()) + " vertex identities hold";
    r.pass = true;
  } else {
    r.observed = bad.front() + (bad.size() > 1
                                    ? " (+" + std::to_string(bad.size() - 1) + " more)"
                                    : "");
    r.pass = false;
  }
  return r;
}

/// One record: strict radius decrease under deletions. Asserted only when
/// every real cycle of D is positive and even; otherwise the outcome is
/// recorded as an observation (deletion can then raise the radius).
inline CheckRecord check_monotonicity(const MixedGraph& D, const std::string& instance) {
  CheckRecord r;
  r.instance = instance.empty() ? detail::short_mg(D) : instance;
  auto st = detail::monotonicity_status(D);
  std::string summary;
  if (st.violations.empty()) {
    summary = "strict decrease at all " + std::to_string(st.deletions) + " deletions";
  } else {
    summary = st.violations.front();
    if (st.violations.size() > 1)
      summary += " (+" + std::to_string(st.violations.size() - 1) + " more)";
  }
  if (st.hypothesis) {
    r.check = "monotonicity";
    r.expected = "rho strictly decreases at every vertex and edge deletion";
    r.observed = summary;
    r.pass = st.violations.empty();
  } else {
    r.check = "monotonicity.observation";
    r.expected = "no assertion (edgeless, or some real cycle is negative or odd)";
    r.observed = summary;
    r.pass = true;
  }
  return r;
}

/// Pendant-attachment growth and the unicyclic radius-2 consequence over an
/// enumerated scope (one representative orientation per cycle sign vector).
inline std::vector<CheckRecord> check_pendant_and_unicyclic(const EnumerationScope& scope) {
  std::uint64_t pend_n = 0, uni_n = 0;
  std::vector<std::string> pend_bad, uni_bad;

  for (int n = 1; n <= scope.max_n; ++n) {
    EnumerationScope sc = scope;
    sc.max_n = n;
    sc.connected_only = true;
    for (const MixedGraph& G : enumerate_underlying(sc)) {
      for (const auto& oc : orientation_representatives(G)) {
        const MixedGraph& D = oc.representative;

        if (D.num_edges() >= 1) {
          EigenSystem es = eigen_system(D);
          const int last = D.num_vertices() - 1;
          const int at = (std::fabs(es.values[0]) >=
                          std::fabs(es.values[static_cast<size_t>(last)]))
                             ? 0
                             : last;
          const double rho = std::fabs(es.values[static_cast<size_t>(at)]);
          for (int u = 0; u < D.num_vertices(); ++u) {
            if (std::abs(es.vectors(u, at)) <= 1e-6) continue;
            ++pend_n;
            std::vector<Edge> edges = D.edges();
            edges.push_back({u, D.num_vertices(), EdgeKind::Undirected});
            MixedGraph M(D.num_vertices() + 1, edges);
            const double rm = spectral_radius(M);
            bool ok = rm - rho > 1e-8;
            if (!ok) {
              auto c = compare_spectral_radii(detail::charpoly_int_fast(D),
                                              detail::charpoly_int_fast(M));
              ok = c && *c < 0;
            }
            if (!ok && pend_bad.size() < 5)
              pend_bad.push_back(detail::short_mg(D) + " pendant at " + std::to_string(u));
          }
        }

        if (D.num_edges() == D.num_vertices() && is_connected(D)) {
          const std::vector<Cycle> cycles = enumerate_cycles(D);
          if (cycles.size() == 1) {
            std::vector<int> cv = cycles[0].verts;
            std::sort(cv.begin(), cv.end());
            MixedGraph C = induced_subgraph(D, cv);
            if (detail::compare_radius_fast(C).cls == RadiusClass::Exactly &&
                D.num_vertices() > cycles[0].length()) {
              ++uni_n;
              if (detail::compare_radius_fast(D).cls != RadiusClass::Above &&
                  uni_bad.size() < 5)
                uni_bad.push_back(detail::short_mg(D));
            }
          }
        }
      }
    }
  }

  std::vector<CheckRecord> out;
  {
    CheckRecord r;
    r.check = "pendant_growth";
    r.instance = "scope n<=" + std::to_string(scope.max_n) + ", sign-vector representatives";
    r.expected = "attaching a pendant at a vertex with |x_u| > 1e-6 raises rho";
    r.observed = std::to_string(pend_n) + " attachments checked" +
                 (pend_bad.empty() ? "" : "; first failure: " + pend_bad.front());
    r.pass = pend_bad.empty();
    out.push_back(std::move(r));
  }
  {
    CheckRecord r;
    r.check = "unicyclic_above";
    r.instance = "scope n<=" + std::to_string(scope.max_n) + ", sign-vector representatives";
    r.expected = "unicyclic D strictly containing a radius-2 cycle has radius above 2";
    r.observed = std::to_string(uni_n) + " unicyclic instances checked" +
                 (uni_bad.empty() ? "" : "; first failure: " + uni_bad.front());
    r.pass = uni_bad.empty();
    out.push_back(std::move(r));
  }
  return out;
}

/// The two classifier biconditionals against exact radius comparisons over
/// the full scope, plus a family-tag census. Radius comparisons are cached
/// per cycle sign vector (validated separately by the determinism check).
inline Report run_cross_check(const EnumerationScope& scope) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.scope = scope;

  std::uint64_t graphs = 0, pairs = 0, oos = 0;
  std::uint64_t le2_mismatch = 0, eq2_mismatch = 0, oos_mismatch = 0;
  std::map<std::string, std::uint64_t> census_le2, census_eq2;
  std::vector<CheckRecord> details;

  for (int n = 1; n <= scope.max_n; ++n) {
    EnumerationScope sc = scope;
    sc.max_n = n;
    for (const MixedGraph& G : enumerate_underlying(sc)) {
      ++graphs;
      const bool admissible = is_connected(G) && is_c4_free(G);
      const std::vector<Cycle> cycles = enumerate_cycles(G);
      std::map<std::vector<std::uint8_t>, RadiusComparison> cache;

      auto visit = [&](const MixedGraph& D, const std::vector<std::uint8_t>& key) {
        ++pairs;
        Verdict v2 = classify_le2(D, /*with_crosscheck=*/false);
        Verdict ve = classify_eq2(D, /*with_crosscheck=*/false);
        if (!admissible) {
          if (v2.outcome == VerdictOutcome::OutOfScope &&
              ve.outcome == VerdictOutcome::OutOfScope) {
            ++oos;
          } else {
            ++oos_mismatch;
            if (details.size() < 20)
              details.push_back({"cross_check.detail", detail::short_mg(D),
                                 "OutOfScope (disconnected or contains C4)",
                                 std::string(verdict_outcome_name(v2.outcome)) + " / " +
                                     verdict_outcome_name(ve.outcome),
                                 false});
          }
          return;
        }
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, detail::compare_radius_fast(D)).first;
        const RadiusComparison& cmp = it->second;

        const bool le_ok = v2.in_list() == (cmp.cls != RadiusClass::Above);
        const bool eq_ok = ve.in_list() == (cmp.cls == RadiusClass::Exactly);
        if (v2.in_list()) ++census_le2[family_tag_name(*v2.tag)];
        if (ve.in_list()) ++census_eq2[family_tag_name(*ve.tag)];
        if (!le_ok) ++le2_mismatch;
        if (!eq_ok) ++eq2_mismatch;
        if ((!le_ok || !eq_ok) && details.size() < 20) {
          std::string got = "radius " + std::string(radius_class_name(cmp.cls)) +
                            ", le2=" + verdict_outcome_name(v2.outcome) +
                            ", eq2=" + verdict_outcome_name(ve.outcome);
          details.push_back({"cross_check.detail", detail::short_mg(D),
                             "verdicts consistent with exact radius", got, false});
        }
      };

      if (scope.orientation_mode == OrientationMode::All) {
        for_each_orientation(G, [&](const std::vector<Edge>& edges) {
          MixedGraph D(G.num_vertices(), edges);
          std::vector<std::uint8_t> key;
          key.reserve(cycles.size());
          for (const auto& c : cycles)
            key.push_back(static_cast<std::uint8_t>(sign_class_of(classify_cycle(D, c))));
          visit(D, key);
        });
      } else {
        for (const auto& oc : orientation_representatives(G)) {
          std::vector<std::uint8_t> key;
          key.reserve(oc.signs.size());
          for (auto s : oc.signs) key.push_back(static_cast<std::uint8_t>(s));
          visit(oc.representative, key);
        }
      }
    }
  }

  const std::string mode =
      scope.orientation_mode == OrientationMode::All ? "all orientations" : "sign-vector representatives";
  const std::string where = "graphs with 1<=n<=" + std::to_string(scope.max_n) + ", " + mode;
  auto census_string = [](const std::map<std::string, std::uint64_t>& m) {
    if (m.empty()) return std::string("none");
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    return s;
  };

  rep.checks.push_back({"cross_check.le2_biconditional", where,
                        "InList exactly when the radius is at most 2",
                        std::to_string(pairs) + " pairs, " + std::to_string(le2_mismatch) +
                            " mismatches",
                        le2_mismatch == 0});
  rep.checks.push_back({"cross_check.eq2_biconditional", where,
                        "InList exactly when the radius is exactly 2",
                        std::to_string(pairs) + " pairs, " + std::to_string(eq2_mismatch) +
                            " mismatches",
                        eq2_mismatch == 0});
  if (!scope.c4free_only || !scope.connected_only)
    rep.checks.push_back({"cross_check.out_of_scope", where,
                          "disconnected or C4-containing inputs are OutOfScope",
                          std::to_string(oos) + " such inputs, " + std::to_string(oos_mismatch) +
                              " misclassified",
                          oos_mismatch == 0});
  rep.checks.push_back({"cross_check.family_census_le2", where, "informational",
                        census_string(census_le2), true});
  rep.checks.push_back({"cross_check.family_census_eq2", where, "informational",
                        census_string(census_eq2), true});
  for (auto& d : details) rep.checks.push_back(std::move(d));

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Full verification battery: cross-check, the exhaustive small-graph sweep,
/// random-graph identity spot checks, monotonicity, pendant/unicyclic
/// consequences, and sign-vector determinism on the boundary templates.
inline Report run_all(const EnumerationScope& scope) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep = run_cross_check(scope);

  {
    SweepOptions so;
    so.max_n = std::min(scope.max_n, 6);
    SweepStats st = exhaustive_small_graph_sweep(so);
    const std::string inst =
        "all connected graphs n<=" + std::to_string(so.max_n) + ", all orientations (" +
        std::to_string(st.orientations) + " total)";
    rep.checks.push_back({"exhaustive.charpoly_agreement", inst,
                          "Sachs equals Faddeev-LeVerrier exactly",
                          std::to_string(st.charpoly_agreements) + " agreements, " +
                              std::to_string(st.agreement_failures) + " failures",
                          st.agreement_failures == 0});
    rep.checks.push_back({"exhaustive.deletion_identities", inst,
                          "edge and vertex identities hold exactly",
                          std::to_string(st.edge_identities + st.vertex_identities) +
                              " identities, " + std::to_string(st.identity_failures) +
                              " failures",
                          st.identity_failures == 0});
    rep.checks.push_back({"exhaustive.spectral_properties", inst,
                          "trace coefficients, odd-coefficient symmetry, positive equivalence",
                          std::to_string(st.trace_checks + st.symmetry_checks +
                                         st.positive_equivalences) +
                              " checks, " + std::to_string(st.property_failures) + " failures",
                          st.property_failures == 0});
    rep.checks.push_back({"exhaustive.float_spot_checks", inst,
                          "eigenvalue sums and charpoly residuals within tolerance",
                          std::to_string(st.float_checks) + " checks, " +
                              std::to_string(st.float_failures) + " failures",
                          st.float_failures == 0});
    for (const auto& note : st.failure_notes)
      rep.checks.push_back({"exhaustive.detail", note, "", "", false});
  }

  {
    std::mt19937 rng(20240811);
    std::uint64_t bad = 0;
    std::string first;
    const int samples = 100;
    for (int i = 0; i < samples; ++i) {
      int n = 2 + static_cast<int>(rng() % 8);
      MixedGraph D = detail::random_mixed_graph(rng, n);
      auto fails = detail::deletion_identity_failures(D);
      if (!fails.empty()) {
        ++bad;
        if (first.empty()) first = detail::short_mg(D) + ": " + fails.front();
      }
    }
    rep.checks.push_back({"random.deletion_identities",
                          std::to_string(samples) + " random connected mixed graphs, n<=9",
                          "edge and vertex identities hold exactly",
                          bad == 0 ? "all hold" : std::to_string(bad) + " failing graphs; " + first,
                          bad == 0});
  }

  {
    std::uint64_t asserted = 0, observed = 0, bad = 0;
    std::string first;
    const int cap = std::min(scope.max_n, 5);
    for (int n = 1; n <= cap; ++n) {
      EnumerationScope sc = scope;
      sc.max_n = n;
      sc.connected_only = true;
      for (const MixedGraph& G : enumerate_underlying(sc)) {
        for (const auto& oc : orientation_representatives(G)) {
          auto st = detail::monotonicity_status(oc.representative);
          if (!st.hypothesis) {
            ++observed;
            continue;
          }
          ++asserted;
          if (!st.violations.empty()) {
            ++bad;
            if (first.empty())
              first = detail::short_mg(oc.representative) + ": " + st.violations.front();
          }
        }
      }
    }
    rep.checks.push_back({"monotonicity",
                          "connected graphs n<=" + std::to_string(cap) +
                              ", sign-vector representatives",
                          "strict decrease whenever all real cycles are positive and even",
                          std::to_string(asserted) + " asserted, " + std::to_string(observed) +
                              " observation-only, " + std::to_string(bad) + " violations" +
                              (first.empty() ? "" : "; " + first),
                          bad == 0});
  }

  {
    EnumerationScope sc = scope;
    sc.max_n = std::min(scope.max_n, 6);
    for (auto& r : check_pendant_and_unicyclic(sc)) rep.checks.push_back(std::move(r));
  }

  {
    std::vector<std::pair<std::string, MixedGraph>> templates;
    for (const FamilySpec& spec : std::vector<FamilySpec>{
             CycleWithPathsSpec{3, {2, 0, 0}}, CycleWithPathsSpec{6, {1, 0, 1, 0, 0, 0}},
             CycleWithPathsSpec{6, {2, 0, 0, 0, 0, 0}}, CycleWithPathsSpec{6, {1, 0, 1, 0, 1, 0}},
             CycleWithPathsSpec{6, {2, 0, 0, 2, 0, 0}}, CycleWithPathsSpec{8, {1, 0, 0, 0, 0, 0, 0, 0}},
             CycleWithPathsSpec{8, {1, 0, 0, 0, 1, 0, 0, 0}}, ThetaSpec{3, 5, 5}})
      templates.push_back({family_to_string(spec), generate(spec)});
    for (int k = 3; k <= 7; ++k)
      for (const auto& t : smith_graphs(k)) templates.push_back({t.name, t.graph});

    std::uint64_t orientations = 0, classes = 0, bad = 0;
    std::string first;
    for (const auto& [name, G] : templates) {
      DeterminismStats st = check_sign_vector_determinism(G);
      orientations += st.orientations;
      classes += st.classes;
      bad += st.failures;
      if (st.failures && first.empty()) first = name;
    }
    rep.checks.push_back({"determinism.sign_vector", "boundary family and small Smith templates",
                          "equal sign vectors give identical exact charpolys",
                          std::to_string(orientations) + " orientations in " +
                              std::to_string(classes) + " classes, " + std::to_string(bad) +
                              " disagreements" + (first.empty() ? "" : "; first at " + first),
                          bad == 0});
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hermspec
