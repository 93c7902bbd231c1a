#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermspec/cycles.hpp"
#include "hermspec/families.hpp"
#include "hermspec/isomorphism.hpp"
#include "hermspec/mixed_graph.hpp"
#include "hermspec/sturm.hpp"

namespace hermspec {

/// Families of the structural classification. The *_hat tags name a family
/// together with its induced mixed subgraphs; the plain tags name exact
/// members (used by the radius-equal-2 classifier).
enum class FamilyTag {
  SmithUnderlying,
  C3_2_star_hat,
  C6_10101_minus_hat,
  C6_2002_minus_hat,
  C8_10001_minus_hat,
  Theta355_twoNegC6,
  Cn_plus,
  Cn_minus_odd,
  C3_2_star,
  C6_101_minus,
  C6_10101_minus,
  C6_2_minus,
  C6_2001_minus,
  C6_2002_minus,
  C8_1_minus,
  C8_10001_minus,
};

inline const char* family_tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::SmithUnderlying: return "SmithUnderlying";
    case FamilyTag::C3_2_star_hat: return "C3_2_star_hat";
    case FamilyTag::C6_10101_minus_hat: return "C6_10101_minus_hat";
    case FamilyTag::C6_2002_minus_hat: return "C6_2002_minus_hat";
    case FamilyTag::C8_10001_minus_hat: return "C8_10001_minus_hat";
    case FamilyTag::Theta355_twoNegC6: return "Theta355_twoNegC6";
    case FamilyTag::Cn_plus: return "Cn_plus";
    case FamilyTag::Cn_minus_odd: return "Cn_minus_odd";
    case FamilyTag::C3_2_star: return "C3_2_star";
    case FamilyTag::C6_101_minus: return "C6_101_minus";
    case FamilyTag::C6_10101_minus: return "C6_10101_minus";
    case FamilyTag::C6_2_minus: return "C6_2_minus";
    case FamilyTag::C6_2001_minus: return "C6_2001_minus";
    case FamilyTag::C6_2002_minus: return "C6_2002_minus";
    case FamilyTag::C8_1_minus: return "C8_1_minus";
    case FamilyTag::C8_10001_minus: return "C8_10001_minus";
  }
  return "?";
}

enum class VerdictOutcome { InList, NotInList, OutOfScope };

inline const char* verdict_outcome_name(VerdictOutcome o) {
  switch (o) {
    case VerdictOutcome::InList: return "in_list";
    case VerdictOutcome::NotInList: return "not_in_list";
    default: return "out_of_scope";
  }
}

struct Verdict {
  VerdictOutcome outcome = VerdictOutcome::NotInList;
  std::optional<FamilyTag> tag;                 // set iff InList
  std::optional<std::vector<int>> embedding;    // input vertex -> template vertex, iff InList
  std::string reason;                           // set for NotInList / OutOfScope
  std::optional<RadiusComparison> crosscheck;

  bool in_list() const { return outcome == VerdictOutcome::InList; }
};

struct SmithMembership {
  bool member = false;
  std::string template_name;
  std::vector<int> embedding;  // input vertex -> template vertex
};

/// Whether the undirected connected graph G is (isomorphic to) a subgraph of
/// a largest-eigenvalue-2 template. Connected subgraphs of these templates
/// are exactly their induced subgraphs on connected vertex sets, except that
/// removing one cycle edge turns C_n into P_n, which embeds induced into
/// C_{n+1}; searching templates on |V(G)| up to |V(G)|+2 vertices therefore
/// covers every case (the +2 is needed for K1 into C3).
inline SmithMembership smith_membership(const MixedGraph& G) {
  const int n = G.num_vertices();
  for (int k = std::max(3, n); k <= n + 2; ++k)
    for (const auto& tmpl : smith_graphs(k))
      if (auto emb = embed_induced(G, tmpl.graph))
        return {true, tmpl.name, std::move(*emb)};
  return {};
}

namespace detail {

inline bool all_cycles_in(const MixedGraph& D, const std::vector<Cycle>& cycles, SignClass cls) {
  for (const auto& c : cycles)
    if (sign_class_of(classify_cycle(D, c)) != cls) return false;
  return true;
}

inline Verdict in_list(FamilyTag tag, std::vector<int> embedding) {
  Verdict v;
  v.outcome = VerdictOutcome::InList;
  v.tag = tag;
  v.embedding = std::move(embedding);
  return v;
}

inline Verdict rejected(VerdictOutcome o, std::string reason) {
  Verdict v;
  v.outcome = o;
  v.reason = std::move(reason);
  return v;
}

inline void attach_crosscheck(Verdict& v, const MixedGraph& D, bool enabled) {
  if (enabled) v.crosscheck = compare_radius(D, BigRat(2));
}

}  // namespace detail

/// Decides membership in the classification of connected C4-free mixed
/// graphs with spectral radius at most 2. Clauses are tried in a fixed
/// order, so verdicts are deterministic: (i) underlying graph inside a
/// largest-eigenvalue-2 template (any orientation qualifies there);
/// (ii) the four bounded families, as induced-subgraph membership of the
/// underlying graph plus the family's cycle-sign condition on D itself
/// (all cycles imaginary for the tailed triangle, all negative for the
/// tailed hexagons/octagon); (iii) induced subgraph of the two-hexagon
/// theta graph with every present hexagon negative. Inputs that are
/// disconnected or contain a 4-cycle are out of scope.
inline Verdict classify_le2(const MixedGraph& D, bool with_crosscheck = true) {
  Verdict v;
  if (!is_connected(D))
    v = detail::rejected(VerdictOutcome::OutOfScope, "disconnected");
  else if (!is_c4_free(D))
    v = detail::rejected(VerdictOutcome::OutOfScope, "underlying graph contains a 4-cycle");
  else if (D.num_vertices() == 0)
    v = detail::in_list(FamilyTag::SmithUnderlying, {});
  else {
    MixedGraph U = underlying(D);
    if (auto sm = smith_membership(U); sm.member) {
      v = detail::in_list(FamilyTag::SmithUnderlying, std::move(sm.embedding));
    } else {
      std::vector<Cycle> cycles = enumerate_cycles(D);
      struct HatFamily {
        FamilyTag tag;
        FamilySpec spec;
        SignClass cls;
      };
      static const std::vector<HatFamily> hats = {
          {FamilyTag::C3_2_star_hat, CycleWithPathsSpec{3, {2, 0, 0}}, SignClass::Imaginary},
          {FamilyTag::C6_10101_minus_hat, CycleWithPathsSpec{6, {1, 0, 1, 0, 1, 0}},
           SignClass::Negative},
          {FamilyTag::C6_2002_minus_hat, CycleWithPathsSpec{6, {2, 0, 0, 2, 0, 0}},
           SignClass::Negative},
          {FamilyTag::C8_10001_minus_hat, CycleWithPathsSpec{8, {1, 0, 0, 0, 1, 0, 0, 0}},
           SignClass::Negative},
      };
      bool done = false;
      for (const auto& hat : hats) {
        if (auto emb = embed_induced(U, generate(hat.spec));
            emb && detail::all_cycles_in(D, cycles, hat.cls)) {
          v = detail::in_list(hat.tag, std::move(*emb));
          done = true;
          break;
        }
      }
      if (!done) {
        if (auto emb = embed_induced(U, generate(ThetaSpec{3, 5, 5}))) {
          bool hexagons_negative = true;
          for (const auto& c : cycles)
            if (c.length() == 6 &&
                classify_cycle(D, c) != CycleSign::Negative)
              hexagons_negative = false;
          if (hexagons_negative) {
            v = detail::in_list(FamilyTag::Theta355_twoNegC6, std::move(*emb));
            done = true;
          }
        }
      }
      if (!done)
        v = detail::rejected(VerdictOutcome::NotInList,
                             "no admissible family matches the underlying graph "
                             "with the required cycle signs");
    }
  }
  detail::attach_crosscheck(v, D, with_crosscheck);
  return v;
}

/// Decides membership in the classification of C4-free mixed graphs with
/// spectral radius exactly 2: (i) underlying graph exactly one of the
/// exceptional trees, any orientation; (ii) positive cycles of any length
/// and negative odd cycles; (iii) the eight exact one-cycle templates with
/// their sign; (iv) the two-hexagon theta graph with both hexagons
/// negative. Same out-of-scope policy as classify_le2.
inline Verdict classify_eq2(const MixedGraph& D, bool with_crosscheck = true) {
  Verdict v;
  bool decided = false;
  if (!is_connected(D)) {
    v = detail::rejected(VerdictOutcome::OutOfScope, "disconnected");
    decided = true;
  } else if (!is_c4_free(D)) {
    v = detail::rejected(VerdictOutcome::OutOfScope, "underlying graph contains a 4-cycle");
    decided = true;
  }
  if (!decided) {
    const int n = D.num_vertices();
    MixedGraph U = underlying(D);

    // (i) exceptional trees
    std::vector<std::pair<std::string, FamilySpec>> trees;
    if (n >= 5) trees.push_back({"Y", YSpec{2, n - 5, 2}});
    if (n == 7) trees.push_back({"S222", StarLikeSpec{{2, 2, 2}}});
    if (n == 8) trees.push_back({"S133", StarLikeSpec{{1, 3, 3}}});
    if (n == 9) trees.push_back({"S125", StarLikeSpec{{1, 2, 5}}});
    for (const auto& [name, spec] : trees) {
      MixedGraph T = generate(spec);
      if (T.num_vertices() != n) continue;
      if (auto emb = embed_induced(U, T)) {
        v = detail::in_list(FamilyTag::SmithUnderlying, std::move(*emb));
        decided = true;
        break;
      }
    }

    // (ii) pure cycles with sign conditions
    if (!decided && n >= 3) {
      if (auto emb = embed_induced(U, generate(CycleSpec{n}))) {
        std::vector<Cycle> cycles = enumerate_cycles(D);
        if (cycles.size() == 1) {
          CycleSign s = classify_cycle(D, cycles[0]);
          if (s == CycleSign::Positive) {
            v = detail::in_list(FamilyTag::Cn_plus, std::move(*emb));
            decided = true;
          } else if (s == CycleSign::Negative && (n & 1)) {
            v = detail::in_list(FamilyTag::Cn_minus_odd, std::move(*emb));
            decided = true;
          }
        }
      }
    }

    // (iii) exact one-cycle templates
    if (!decided) {
      struct ExactFamily {
        FamilyTag tag;
        FamilySpec spec;
        SignClass cls;
      };
      static const std::vector<ExactFamily> exact = {
          {FamilyTag::C3_2_star, CycleWithPathsSpec{3, {2, 0, 0}}, SignClass::Imaginary},
          {FamilyTag::C6_101_minus, CycleWithPathsSpec{6, {1, 0, 1, 0, 0, 0}},
           SignClass::Negative},
          {FamilyTag::C6_10101_minus, CycleWithPathsSpec{6, {1, 0, 1, 0, 1, 0}},
           SignClass::Negative},
          {FamilyTag::C6_2_minus, CycleWithPathsSpec{6, {2, 0, 0, 0, 0, 0}},
           SignClass::Negative},
          {FamilyTag::C6_2001_minus, CycleWithPathsSpec{6, {2, 0, 0, 1, 0, 0}},
           SignClass::Negative},
          {FamilyTag::C6_2002_minus, CycleWithPathsSpec{6, {2, 0, 0, 2, 0, 0}},
           SignClass::Negative},
          {FamilyTag::C8_1_minus, CycleWithPathsSpec{8, {1, 0, 0, 0, 0, 0, 0, 0}},
           SignClass::Negative},
          {FamilyTag::C8_10001_minus, CycleWithPathsSpec{8, {1, 0, 0, 0, 1, 0, 0, 0}},
           SignClass::Negative},
      };
      for (const auto& fam : exact) {
        MixedGraph T = generate(fam.spec);
        if (T.num_vertices() != n) continue;
        if (auto emb = embed_induced(U, T)) {
          std::vector<Cycle> cycles = enumerate_cycles(D);
          if (cycles.size() == 1 && sign_class_of(classify_cycle(D, cycles[0])) == fam.cls) {
            v = detail::in_list(fam.tag, std::move(*emb));
            decided = true;
            break;
          }
        }
      }
    }

    // (iv) theta with both hexagons negative
    if (!decided && n == 9) {
      if (auto emb = embed_induced(U, generate(ThetaSpec{3, 5, 5}))) {
        bool ok = true;
        for (const auto& c : enumerate_cycles(D))
          if (c.length() == 6 && classify_cycle(D, c) != CycleSign::Negative) ok = false;
        if (ok) {
          v = detail::in_list(FamilyTag::Theta355_twoNegC6, std::move(*emb));
          decided = true;
        }
      }
    }

    if (!decided)
      v = detail::rejected(VerdictOutcome::NotInList,
                           "no family of the radius-2 classification matches exactly");
  }
  detail::attach_crosscheck(v, D, with_crosscheck);
  return v;
}

/// Per-component classification for disconnected inputs: each component is
/// classified on its own (vertices relabeled within the component).
inline std::vector<Verdict> classify_components_le2(const MixedGraph& D,
                                                    bool with_crosscheck = true) {
  std::vector<Verdict> out;
  for (const auto& comp : components(D))
    out.push_back(classify_le2(induced_subgraph(D, comp), with_crosscheck));
  return out;
}

inline std::vector<Verdict> classify_components_eq2(const MixedGraph& D,
                                                    bool with_crosscheck = true) {
  std::vector<Verdict> out;
  for (const auto& comp : components(D))
    out.push_back(classify_eq2(induced_subgraph(D, comp), with_crosscheck));
  return out;
}

}  // namespace hermspec
