#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hermspec/classify.hpp"
#include "hermspec/families.hpp"
#include "test_util.hpp"

using namespace hermspec;

namespace {

MixedGraph hat_member(const char* family, SignClass cls) {
  return orient_all_cycles(generate(parse_family(family)), cls);
}

MixedGraph random_c4free_connected(std::mt19937& rng, int n) {
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 28) edges.push_back({u, v, static_cast<EdgeKind>(rng() % 3)});
    MixedGraph D(n, edges);
    if (is_connected(D) && is_c4_free(D)) return D;
  }
}

// Re-verifies an InList certificate: the embedding must be an induced
// isomorphism onto its image in the named template graph.
void check_embedding(const MixedGraph& D, const std::vector<int>& emb, const MixedGraph& tmpl) {
  REQUIRE(emb.size() == static_cast<size_t>(D.num_vertices()));
  std::set<int> image(emb.begin(), emb.end());
  REQUIRE(image.size() == emb.size());
  for (int t : image) {
    REQUIRE(t >= 0);
    REQUIRE(t < tmpl.num_vertices());
  }
  for (int u = 0; u < D.num_vertices(); ++u)
    for (int v = u + 1; v < D.num_vertices(); ++v)
      REQUIRE(D.adjacent(u, v) ==
              tmpl.adjacent(emb[static_cast<size_t>(u)], emb[static_cast<size_t>(v)]));
}

}  // namespace

TEST_CASE("bounded-radius verdicts for subgraphs of the eigenvalue-2 templates") {
  Verdict v = classify_le2(generate(PathSpec{10}));
  REQUIRE(v.in_list());
  REQUIRE(v.tag == FamilyTag::SmithUnderlying);
  REQUIRE(v.crosscheck.has_value());
  REQUIRE(v.crosscheck->cls == RadiusClass::Below);

  v = classify_le2(MixedGraph(0, {}));
  REQUIRE(v.in_list());
  REQUIRE(v.embedding == std::vector<int>{});

  v = classify_le2(MixedGraph(1, {}));
  REQUIRE(v.in_list());

  v = classify_le2(generate(CycleSpec{6}), /*with_crosscheck=*/false);
  REQUIRE(v.tag == FamilyTag::SmithUnderlying);
  REQUIRE_FALSE(v.crosscheck.has_value());

  // Any orientation of a template subgraph qualifies.
  v = classify_le2(testutil::load_fixture("triangle_imaginary.mg"));
  REQUIRE(v.in_list());
  REQUIRE(v.tag == FamilyTag::SmithUnderlying);

  SmithMembership sm = smith_membership(generate(PathSpec{10}));
  REQUIRE(sm.member);
  REQUIRE(sm.template_name == "C11");
  check_embedding(generate(PathSpec{10}), sm.embedding, generate(CycleSpec{11}));
  REQUIRE_FALSE(smith_membership(generate(StarSpec{5})).member);
}

TEST_CASE("bounded-radius verdicts for the oriented families") {
  struct Case {
    const char* family;
    SignClass cls;
    FamilyTag le2_tag;
  };
  const std::vector<Case> cases = {
      {"C3(2)", SignClass::Imaginary, FamilyTag::C3_2_star_hat},
      {"C6(1,0,1,0,1)", SignClass::Negative, FamilyTag::C6_10101_minus_hat},
      {"C6(2,0,0,2)", SignClass::Negative, FamilyTag::C6_2002_minus_hat},
      {"C8(1,0,0,0,1)", SignClass::Negative, FamilyTag::C8_10001_minus_hat},
  };
  for (const auto& c : cases) {
    MixedGraph D = hat_member(c.family, c.cls);
    Verdict v = classify_le2(D);
    REQUIRE(v.in_list());
    REQUIRE(v.tag == c.le2_tag);
    REQUIRE(v.crosscheck->cls == RadiusClass::Exactly);
    check_embedding(underlying(D), *v.embedding, generate(parse_family(c.family)));

    // The same graphs sit in the exact radius-2 list.
    Verdict w = classify_eq2(D);
    REQUIRE(w.in_list());
    REQUIRE(w.crosscheck->cls == RadiusClass::Exactly);
  }

  // Wrong sign class on the same shapes falls out of the list.
  REQUIRE_FALSE(classify_le2(hat_member("C3(2)", SignClass::Positive)).in_list());
  REQUIRE(classify_le2(hat_member("C3(2)", SignClass::Positive)).crosscheck->cls ==
          RadiusClass::Above);
  REQUIRE_FALSE(classify_le2(hat_member("C6(1,0,1,0,1)", SignClass::Positive)).in_list());
}

TEST_CASE("two-hexagon theta graph with negative hexagons") {
  MixedGraph G = generate(ThetaSpec{3, 5, 5});
  std::vector<Cycle> cycles = enumerate_cycles(G);
  std::map<Cycle, SignClass> target;
  for (const auto& c : cycles)
    target[c] = c.length() == 6 ? SignClass::Negative : SignClass::Positive;
  MixedGraph D = orient_with_signs(G, target);

  Verdict v = classify_le2(D);
  REQUIRE(v.in_list());
  REQUIRE(v.tag == FamilyTag::Theta355_twoNegC6);
  REQUIRE(v.crosscheck->cls == RadiusClass::Exactly);
  check_embedding(underlying(D), *v.embedding, G);

  Verdict w = classify_eq2(D);
  REQUIRE(w.in_list());
  REQUIRE(w.tag == FamilyTag::Theta355_twoNegC6);

  // All cycles positive instead: radius exceeds 2 and no family matches.
  MixedGraph P = orient_all_cycles(G, SignClass::Positive);
  REQUIRE_FALSE(classify_le2(P).in_list());
  REQUIRE(classify_le2(P).crosscheck->cls == RadiusClass::Above);
}

TEST_CASE("verdicts outside the list and outside the scope") {
  Verdict v = classify_le2(hat_member("C3(1,1)", SignClass::Imaginary));
  REQUIRE(v.outcome == VerdictOutcome::NotInList);
  REQUIRE_FALSE(v.reason.empty());
  REQUIRE(v.crosscheck->cls == RadiusClass::Above);

  REQUIRE(classify_le2(hat_member("C5(1)", SignClass::Imaginary)).outcome ==
          VerdictOutcome::NotInList);

  v = classify_le2(testutil::load_fixture("fig1_d1.mg"));
  REQUIRE(v.outcome == VerdictOutcome::OutOfScope);
  REQUIRE(v.reason.find("4-cycle") != std::string::npos);
  REQUIRE(classify_eq2(testutil::load_fixture("fig1_d1.mg")).outcome ==
          VerdictOutcome::OutOfScope);
  REQUIRE(classify_eq2(generate(CycleSpec{4})).outcome == VerdictOutcome::OutOfScope);

  MixedGraph two_k2(4, {{0, 1, EdgeKind::Undirected}, {2, 3, EdgeKind::Undirected}});
  v = classify_le2(two_k2);
  REQUIRE(v.outcome == VerdictOutcome::OutOfScope);
  REQUIRE(v.reason == "disconnected");
  std::vector<Verdict> per_comp = classify_components_le2(two_k2);
  REQUIRE(per_comp.size() == 2);
  for (const auto& c : per_comp) {
    REQUIRE(c.in_list());
    REQUIRE(c.tag == FamilyTag::SmithUnderlying);
  }
  REQUIRE(classify_components_eq2(two_k2).size() == 2);

  REQUIRE(std::string(verdict_outcome_name(VerdictOutcome::InList)) == "in_list");
  REQUIRE(std::string(verdict_outcome_name(VerdictOutcome::NotInList)) == "not_in_list");
  REQUIRE(std::string(verdict_outcome_name(VerdictOutcome::OutOfScope)) == "out_of_scope");
  REQUIRE(std::string(family_tag_name(FamilyTag::C6_2002_minus_hat)) == "C6_2002_minus_hat");
  REQUIRE(std::string(family_tag_name(FamilyTag::Cn_plus)) == "Cn_plus");
}

TEST_CASE("exact radius-2 verdicts") {
  Verdict v = classify_eq2(generate(CycleSpec{6}));
  REQUIRE(v.in_list());
  REQUIRE(v.tag == FamilyTag::Cn_plus);
  REQUIRE(v.crosscheck->cls == RadiusClass::Exactly);

  v = classify_eq2(orient_all_cycles(generate(CycleSpec{5}), SignClass::Negative));
  REQUIRE(v.in_list());
  REQUIRE(v.tag == FamilyTag::Cn_minus_odd);

  // Negative even cycles and imaginary cycles have radius strictly below 2.
  v = classify_eq2(orient_all_cycles(generate(CycleSpec{6}), SignClass::Negative));
  REQUIRE(v.outcome == VerdictOutcome::NotInList);
  REQUIRE(v.crosscheck->cls == RadiusClass::Below);
  REQUIRE(classify_eq2(orient_all_cycles(generate(CycleSpec{6}), SignClass::Imaginary)).outcome ==
          VerdictOutcome::NotInList);

  v = classify_eq2(generate(PathSpec{10}));
  REQUIRE(v.outcome == VerdictOutcome::NotInList);
  REQUIRE(v.crosscheck->cls == RadiusClass::Below);

  v = classify_eq2(generate(YSpec{2, 3, 2}));
  REQUIRE(v.in_list());
  REQUIRE(v.tag == FamilyTag::SmithUnderlying);
  REQUIRE(v.crosscheck->cls == RadiusClass::Exactly);
  REQUIRE(classify_eq2(generate(StarLikeSpec{{2, 2, 2}})).in_list());
  REQUIRE(classify_eq2(generate(StarLikeSpec{{1, 3, 3}})).in_list());
  REQUIRE(classify_eq2(generate(StarLikeSpec{{1, 2, 5}})).in_list());
  REQUIRE(classify_eq2(generate(StarSpec{4})).in_list());
  REQUIRE_FALSE(classify_eq2(generate(StarSpec{5})).in_list());
  REQUIRE(classify_eq2(MixedGraph(0, {})).outcome == VerdictOutcome::NotInList);

  for (const char* family : {"C6(1,0,1)", "C6(2)", "C6(2,0,0,1)", "C8(1)"}) {
    Verdict w = classify_eq2(hat_member(family, SignClass::Negative));
    REQUIRE(w.in_list());
    REQUIRE(w.crosscheck->cls == RadiusClass::Exactly);
    check_embedding(underlying(hat_member(family, SignClass::Negative)), *w.embedding,
                    generate(parse_family(family)));
  }
  REQUIRE(classify_eq2(hat_member("C6(1,0,1)", SignClass::Negative)).tag ==
          FamilyTag::C6_101_minus);
  REQUIRE(classify_eq2(hat_member("C8(1)", SignClass::Negative)).tag == FamilyTag::C8_1_minus);

  // Proper subgraphs of the exact templates drop below radius 2.
  Verdict sub = classify_eq2(hat_member("C6(1)", SignClass::Negative));
  REQUIRE(sub.outcome == VerdictOutcome::NotInList);
  REQUIRE(sub.crosscheck->cls == RadiusClass::Below);
}

TEST_CASE("deleting a vertex from a listed graph stays consistent with the radius") {
  std::vector<MixedGraph> members;
  members.push_back(hat_member("C3(2)", SignClass::Imaginary));
  members.push_back(hat_member("C6(1,0,1,0,1)", SignClass::Negative));
  members.push_back(hat_member("C6(2,0,0,2)", SignClass::Negative));
  members.push_back(hat_member("C8(1,0,0,0,1)", SignClass::Negative));
  for (const auto& D : members) {
    for (int x = 0; x < D.num_vertices(); ++x) {
      MixedGraph S = delete_vertex(D, x).graph;
      if (!is_connected(S)) continue;
      Verdict v = classify_le2(S);
      REQUIRE(v.in_list());
      REQUIRE(v.crosscheck->cls != RadiusClass::Above);
    }
  }
}

TEST_CASE("random classification verdicts are consistent with the exact radius") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    MixedGraph D = random_c4free_connected(rng, 8 + static_cast<int>(rng() % 2));
    Verdict v = classify_le2(D);
    REQUIRE(v.crosscheck.has_value());
    if (v.in_list()) REQUIRE(v.crosscheck->cls != RadiusClass::Above);
    Verdict w = classify_eq2(D);
    if (w.in_list()) REQUIRE(w.crosscheck->cls == RadiusClass::Exactly);
  }
}
