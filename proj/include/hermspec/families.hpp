#pragma once

#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "hermspec/cycles.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

// Parameterized undirected graph families. Vertex numbering is part of each
// family's contract and is pinned by tests.

struct PathSpec {
  int n;  // vertices, n >= 1
};
struct CycleSpec {
  int n;  // n >= 3
};
struct StarSpec {
  int leaves;  // K_{1,m}, m >= 1
};
struct StarLikeSpec {
  std::vector<int> legs;  // S(n_1..n_k): center plus k paths of n_i vertices
};
struct YSpec {
  // Path on r+s+t-1 vertices with pendant edges at the r-th and (r+s)-th
  // vertex (1-based along the path).
  int r, s, t;
};
struct DumbbellSpec {
  int r, s, t;  // disjoint C_r, C_s joined by a path on t vertices, t >= 2
};
struct ThetaSpec {
  int r, s, t;  // three internally disjoint paths on r, s, t vertices with
                // shared endpoints; each >= 2, at most one equal to 2
};
struct CycleWithPathsSpec {
  int n;                   // cycle length, n >= 3
  std::vector<int> tails;  // tails[i] >= 0 extra path vertices hung off cycle vertex i
};

using FamilySpec = std::variant<PathSpec, CycleSpec, StarSpec, StarLikeSpec, YSpec,
                                DumbbellSpec, ThetaSpec, CycleWithPathsSpec>;

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error("family: " + msg);
}

}  // namespace detail

/// Builds the undirected graph of a family spec. Numbering conventions:
/// paths and cycles use 0..n-1 in order; stars use center 0; star-like legs
/// are numbered leg by leg outward from the center; Y uses path vertices
/// 0..r+s+t-2 then the two pendants; dumbbells number C_r, then C_s, then
/// the connecting path interior; thetas use hubs 0 and 1 then path
/// interiors in order; cycle-with-paths numbers the cycle first and then
/// each tail outward in vertex order.
inline MixedGraph generate(const FamilySpec& spec) {
  using detail::require;
  std::vector<Edge> edges;
  auto und = [&](int a, int b) { edges.push_back({a, b, EdgeKind::Undirected}); };

  if (const auto* p = std::get_if<PathSpec>(&spec)) {
    require(p->n >= 1, "path needs n >= 1");
    for (int i = 0; i + 1 < p->n; ++i) und(i, i + 1);
    return MixedGraph(p->n, std::move(edges));
  }
  if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    require(c->n >= 3, "cycle needs n >= 3");
    for (int i = 0; i < c->n; ++i) und(i, (i + 1) % c->n);
    return MixedGraph(c->n, std::move(edges));
  }
  if (const auto* s = std::get_if<StarSpec>(&spec)) {
    require(s->leaves >= 1, "star needs at least one leaf");
    for (int i = 1; i <= s->leaves; ++i) und(0, i);
    return MixedGraph(s->leaves + 1, std::move(edges));
  }
  if (const auto* s = std::get_if<StarLikeSpec>(&spec)) {
    require(!s->legs.empty(), "star-like tree needs at least one leg");
    for (int L : s->legs) require(L >= 1, "star-like legs must be >= 1");
    int next = 1;
    for (int L : s->legs) {
      int prev = 0;
      for (int j = 0; j < L; ++j) {
        und(prev, next);
        prev = next++;
      }
    }
    return MixedGraph(next, std::move(edges));
  }
  if (const auto* y = std::get_if<YSpec>(&spec)) {
    require(y->r >= 1 && y->t >= 1 && y->s >= 0, "Y needs r, t >= 1 and s >= 0");
    int L = y->r + y->s + y->t - 1;
    require(L >= 1, "Y path is empty");
    for (int i = 0; i + 1 < L; ++i) und(i, i + 1);
    und(y->r - 1, L);
    und(y->r + y->s - 1, L + 1);
    return MixedGraph(L + 2, std::move(edges));
  }
  if (const auto* d = std::get_if<DumbbellSpec>(&spec)) {
    require(d->r >= 3 && d->s >= 3, "dumbbell cycles need length >= 3");
    require(d->t >= 2, "dumbbell path needs t >= 2");
    for (int i = 0; i < d->r; ++i) und(i, (i + 1) % d->r);
    for (int i = 0; i < d->s; ++i) und(d->r + i, d->r + (i + 1) % d->s);
    int prev = 0;
    int next = d->r + d->s;
    for (int j = 0; j < d->t - 2; ++j) {
      und(prev, next);
      prev = next++;
    }
    und(prev, d->r);
    return MixedGraph(d->r + d->s + d->t - 2, std::move(edges));
  }
  if (const auto* th = std::get_if<ThetaSpec>(&spec)) {
    int lens[3] = {th->r, th->s, th->t};
    int twos = 0;
    for (int l : lens) {
      require(l >= 2, "theta paths need >= 2 vertices");
      if (l == 2) ++twos;
    }
    require(twos <= 1, "theta allows at most one 2-vertex path");
    int next = 2;
    for (int l : lens) {
      if (l == 2) {
        und(0, 1);
        continue;
      }
      int prev = 0;
      for (int j = 0; j < l - 2; ++j) {
        und(prev, next);
        prev = next++;
      }
      und(prev, 1);
    }
    return MixedGraph(next, std::move(edges));
  }
  const auto& cp = std::get<CycleWithPathsSpec>(spec);
  require(cp.n >= 3, "cycle needs n >= 3");
  require(static_cast<int>(cp.tails.size()) == cp.n, "need one tail length per cycle vertex");
  for (int k : cp.tails) require(k >= 0, "tail lengths must be >= 0");
  for (int i = 0; i < cp.n; ++i) und(i, (i + 1) % cp.n);
  int next = cp.n;
  for (int i = 0; i < cp.n; ++i) {
    int prev = i;
    for (int j = 0; j < cp.tails[static_cast<size_t>(i)]; ++j) {
      und(prev, next);
      prev = next++;
    }
  }
  return MixedGraph(next, std::move(edges));
}

inline std::string family_to_string(const FamilySpec& spec) {
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  if (const auto* p = std::get_if<PathSpec>(&spec)) return "P" + std::to_string(p->n);
  if (const auto* c = std::get_if<CycleSpec>(&spec)) return "C" + std::to_string(c->n);
  if (const auto* s = std::get_if<StarSpec>(&spec)) return "K1," + std::to_string(s->leaves);
  if (const auto* s = std::get_if<StarLikeSpec>(&spec)) return "S(" + list(s->legs) + ")";
  if (const auto* y = std::get_if<YSpec>(&spec))
    return "Y(" + list({y->r, y->s, y->t}) + ")";
  if (const auto* d = std::get_if<DumbbellSpec>(&spec))
    return "D(" + list({d->r, d->s, d->t}) + ")";
  if (const auto* t = std::get_if<ThetaSpec>(&spec))
    return "theta(" + list({t->r, t->s, t->t}) + ")";
  const auto& cp = std::get<CycleWithPathsSpec>(spec);
  std::vector<int> tails = cp.tails;
  while (tails.size() > 1 && tails.back() == 0) tails.pop_back();
  return "C" + std::to_string(cp.n) + "(" + list(tails) + ")";
}

/// Parses the textual family grammar: "P7", "C5", "C6(1,0,1,0,1)" (short
/// tail lists pad with zeros), "K1,4", "S(1,3,3)", "Y(2,4,2)", "D(3,4,2)",
/// "theta(3,5,5)". Whitespace is not allowed.
inline FamilySpec parse_family(const std::string& text) {
  auto fail = [&]() -> Error { return Error("family: cannot parse '" + text + "'"); };
  auto parse_int = [&](const std::string& s) -> int {
    if (s.empty()) throw fail();
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw fail();
    }
    if (pos != s.size() || v < 0) throw fail();
    return v;
  };
  auto parse_list = [&](const std::string& s) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= s.size()) {
      size_t comma = s.find(',', start);
      std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
      out.push_back(parse_int(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  };

  size_t open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')') throw fail();
    std::string head = text.substr(0, open);
    std::vector<int> args = parse_list(text.substr(open + 1, text.size() - open - 2));
    if (head == "S") return StarLikeSpec{args};
    if (head == "Y" || head == "D" || head == "theta" || head == "\xce\xb8") {
      if (args.size() != 3) throw fail();
      if (head == "Y") return YSpec{args[0], args[1], args[2]};
      if (head == "D") return DumbbellSpec{args[0], args[1], args[2]};
      return ThetaSpec{args[0], args[1], args[2]};
    }
    if (head.size() >= 2 && head[0] == 'C') {
      int n = parse_int(head.substr(1));
      if (static_cast<int>(args.size()) > n) throw fail();
      args.resize(static_cast<size_t>(n), 0);
      return CycleWithPathsSpec{n, std::move(args)};
    }
    throw fail();
  }
  if (text.rfind("K1,", 0) == 0) return StarSpec{parse_int(text.substr(3))};
  if (text.size() >= 2 && text[0] == 'P') return PathSpec{parse_int(text.substr(1))};
  if (text.size() >= 2 && text[0] == 'C') return CycleSpec{parse_int(text.substr(1))};
  throw fail();
}

/// Three-way sign class for a mixed cycle; the two imaginary values are not
/// distinguished (conjugation flips them without changing the spectrum).
enum class SignClass { Positive, Negative, Imaginary };

inline const char* sign_class_name(SignClass c) {
  switch (c) {
    case SignClass::Positive: return "positive";
    case SignClass::Negative: return "negative";
    default: return "imaginary";
  }
}

inline SignClass sign_class_of(CycleSign s) {
  switch (s) {
    case CycleSign::Positive: return SignClass::Positive;
    case CycleSign::Negative: return SignClass::Negative;
    default: return SignClass::Imaginary;
  }
}

class UnrealizableError : public Error {
 public:
  UnrealizableError(Cycle c, SignClass want)
      : Error("no orientation realizes " + std::string(sign_class_name(want)) +
              " on a cycle of length " + std::to_string(c.length())),
        cycle(std::move(c)),
        wanted(want) {}
  Cycle cycle;
  SignClass wanted;
};

/// Orients the undirected graph G so that every cycle attains its assigned
/// sign class. The target must assign a class to exactly the cycles of G.
/// Returns the lexicographically least solution in the edge-digit order
/// Undirected < Forward < Backward over the canonical edge list; throws
/// UnrealizableError naming the first cycle (in canonical cycle order) whose
/// prefix of constraints cannot be met.
inline MixedGraph orient_with_signs(const MixedGraph& G,
                                    const std::map<Cycle, SignClass>& target) {
  if (!G.is_undirected()) throw Error("orient_with_signs: input must be undirected");
  const int m = G.num_edges();
  if (m > 24) throw Error("orient_with_signs: too many edges");
  std::vector<Cycle> cycles = enumerate_cycles(G);
  if (cycles.size() != target.size())
    throw Error("orient_with_signs: target must cover exactly the cycles of G");
  std::vector<SignClass> want(cycles.size());
  for (size_t i = 0; i < cycles.size(); ++i) {
    auto it = target.find(cycles[i]);
    if (it == target.end())
      throw Error("orient_with_signs: target misses a cycle of length " +
                  std::to_string(cycles[i].length()));
    want[i] = it->second;
  }

  // Cycle i traverses edge j with direction +1 (along stored u<v) or -1.
  const auto& edges = G.edges();
  auto edge_index = [&](int a, int b) {
    int u = std::min(a, b), v = std::max(a, b);
    for (int j = 0; j < m; ++j)
      if (edges[static_cast<size_t>(j)].u == u && edges[static_cast<size_t>(j)].v == v) return j;
    throw Error("orient_with_signs: internal edge lookup failure");
  };
  std::vector<std::vector<std::pair<int, int>>> on_edge(static_cast<size_t>(m));
  std::vector<int> cycle_left(cycles.size());
  for (size_t i = 0; i < cycles.size(); ++i) {
    const auto& vs = cycles[i].verts;
    cycle_left[i] = cycles[i].length();
    for (size_t k = 0; k < vs.size(); ++k) {
      int a = vs[k], b = vs[(k + 1) % vs.size()];
      int j = edge_index(a, b);
      int dir = (a == edges[static_cast<size_t>(j)].u) ? 1 : -1;
      on_edge[static_cast<size_t>(j)].push_back({static_cast<int>(i), dir});
    }
  }

  std::vector<int> expo(cycles.size(), 0);
  std::vector<int> left = cycle_left;
  std::vector<EdgeKind> kinds(static_cast<size_t>(m), EdgeKind::Undirected);
  auto matches = [&](size_t i) {
    int e = ((expo[i] % 4) + 4) % 4;
    switch (want[i]) {
      case SignClass::Positive: return e == 0;
      case SignClass::Negative: return e == 2;
      default: return (e & 1) == 1;
    }
  };
  // active[i]: constraint i participates in this search (used for the
  // prefix-satisfiability probe below).
  std::vector<char> active(cycles.size(), 1);

  auto search = [&](auto&& self, int j) -> bool {
    if (j == m) return true;
    static constexpr int contrib[3] = {0, 1, -1};
    for (int d = 0; d < 3; ++d) {
      bool ok = true;
      for (auto [ci, dir] : on_edge[static_cast<size_t>(j)]) {
        expo[static_cast<size_t>(ci)] += contrib[d] * dir;
        if (--left[static_cast<size_t>(ci)] == 0 && active[static_cast<size_t>(ci)] &&
            !matches(static_cast<size_t>(ci)))
          ok = false;
      }
      if (ok && self(self, j + 1)) {
        kinds[static_cast<size_t>(j)] =
            d == 0 ? EdgeKind::Undirected : (d == 1 ? EdgeKind::Forward : EdgeKind::Backward);
        return true;
      }
      for (auto [ci, dir] : on_edge[static_cast<size_t>(j)]) {
        expo[static_cast<size_t>(ci)] -= contrib[d] * dir;
        ++left[static_cast<size_t>(ci)];
      }
    }
    return false;
  };

  if (!search(search, 0)) {
    // Find the shortest prefix of the cycle list that is already
    // unsatisfiable; its last cycle is the reported contradiction.
    std::fill(active.begin(), active.end(), 0);
    for (size_t k = 0; k < cycles.size(); ++k) {
      active[k] = 1;
      expo.assign(cycles.size(), 0);
      left = cycle_left;
      if (!search(search, 0)) throw UnrealizableError(cycles[k], want[k]);
    }
    throw Error("orient_with_signs: internal inconsistency");
  }

  std::vector<Edge> out = edges;
  for (int j = 0; j < m; ++j) out[static_cast<size_t>(j)].kind = kinds[static_cast<size_t>(j)];
  return MixedGraph(G.num_vertices(), std::move(out));
}

/// Convenience: assigns the same class to every cycle.
inline MixedGraph orient_all_cycles(const MixedGraph& G, SignClass cls) {
  std::map<Cycle, SignClass> target;
  for (const auto& c : enumerate_cycles(G)) target[c] = cls;
  return orient_with_signs(G, target);
}

/// Visits every orientation of the undirected graph G (3^m of them) as a
/// mixed graph. Guarded to m <= 14.
template <class F>
void for_each_orientation(const MixedGraph& G, F&& visit) {
  if (!G.is_undirected()) throw Error("for_each_orientation: input must be undirected");
  const int m = G.num_edges();
  if (m > 14) throw Error("for_each_orientation: more than 14 edges");
  std::vector<Edge> edges = G.edges();
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m) {
      visit(const_cast<const std::vector<Edge>&>(edges));
      return;
    }
    for (EdgeKind k : {EdgeKind::Undirected, EdgeKind::Forward, EdgeKind::Backward}) {
      edges[static_cast<size_t>(j)].kind = k;
      self(self, j + 1);
    }
    edges[static_cast<size_t>(j)].kind = EdgeKind::Undirected;
  };
  rec(rec, 0);
}

/// Members of the family with every cycle in the given sign class, visited
/// as mixed graphs in lexicographic orientation order.
template <class F>
void for_each_family_member(const FamilySpec& spec, SignClass cls, F&& visit) {
  MixedGraph G = generate(spec);
  std::vector<Cycle> cycles = enumerate_cycles(G);
  const int n = G.num_vertices();
  for_each_orientation(G, [&](const std::vector<Edge>& edges) {
    MixedGraph D(n, edges);
    for (const auto& c : cycles)
      if (sign_class_of(classify_cycle(D, c)) != cls) return;
    visit(const_cast<const MixedGraph&>(D));
  });
}

/// The connected graphs with largest eigenvalue exactly 2 (all cycles, plus
/// the four exceptional trees and the two-pendant paths), restricted to n
/// vertices. Empty for n < 3.
struct SmithTemplate {
  std::string name;
  MixedGraph graph;
};

inline std::vector<SmithTemplate> smith_graphs(int n) {
  std::vector<SmithTemplate> out;
  if (n < 3) return out;
  out.push_back({"C" + std::to_string(n), generate(CycleSpec{n})});
  if (n == 5) out.push_back({"K1,4", generate(StarSpec{4})});
  if (n >= 6)
    out.push_back({"Y(2," + std::to_string(n - 5) + ",2)", generate(YSpec{2, n - 5, 2})});
  if (n == 7) out.push_back({"S(2,2,2)", generate(StarLikeSpec{{2, 2, 2}})});
  if (n == 8) out.push_back({"S(1,3,3)", generate(StarLikeSpec{{1, 3, 3}})});
  if (n == 9) out.push_back({"S(1,2,5)", generate(StarLikeSpec{{1, 2, 5}})});
  return out;
}

}  // namespace hermspec
