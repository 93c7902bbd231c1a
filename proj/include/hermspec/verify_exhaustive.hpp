#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <chrono>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hermspec/cycles.hpp"
#include "hermspec/elementary.hpp"
#include "hermspec/enumerate.hpp"
#include "hermspec/mixed_graph.hpp"

namespace hermspec {

/// Exhaustive verification sweep over all connected underlying graphs with
/// up to max_n vertices and all 3^|E| orientations of each. Per orientation
/// it checks, in exact int64 arithmetic:
///   - Sachs expansion == Faddeev-LeVerrier charpoly,
///   - the edge deletion identity at every edge,
///   - the vertex deletion identity at every vertex,
///   - trace coefficients (c1 = 0, c2 = -|E|),
///   - spectral symmetry (odd coefficients vanish without a real odd cycle),
///   - positive orientations have the underlying graph's charpoly,
/// plus floating-point spot checks (eigenvalue sums and charpoly residuals)
/// every float_stride-th orientation.
struct SweepOptions {
  int min_n = 1;
  int max_n = 6;
  int float_stride = 64;  // 0 disables the float spot checks
  int max_failures = 25;  // failure descriptions kept in the stats
  int num_threads = 0;    // 0 = hardware concurrency
};

struct SweepStats {
  std::uint64_t graphs = 0;
  std::uint64_t orientations = 0;
  std::uint64_t charpoly_agreements = 0;
  std::uint64_t edge_identities = 0;
  std::uint64_t vertex_identities = 0;
  std::uint64_t trace_checks = 0;
  std::uint64_t symmetry_checks = 0;
  std::uint64_t positive_equivalences = 0;
  std::uint64_t float_checks = 0;
  std::uint64_t identity_failures = 0;
  std::uint64_t agreement_failures = 0;
  std::uint64_t property_failures = 0;
  std::uint64_t float_failures = 0;
  std::vector<std::string> failure_notes;
  double elapsed_seconds = 0;

  std::uint64_t failures() const {
    return identity_failures + agreement_failures + property_failures + float_failures;
  }

  void merge(const SweepStats& o, size_t note_cap) {
    graphs += o.graphs;
    orientations += o.orientations;
    charpoly_agreements += o.charpoly_agreements;
    edge_identities += o.edge_identities;
    vertex_identities += o.vertex_identities;
    trace_checks += o.trace_checks;
    symmetry_checks += o.symmetry_checks;
    positive_equivalences += o.positive_equivalences;
    float_checks += o.float_checks;
    identity_failures += o.identity_failures;
    agreement_failures += o.agreement_failures;
    property_failures += o.property_failures;
    float_failures += o.float_failures;
    for (const auto& s : o.failure_notes)
      if (failure_notes.size() < note_cap) failure_notes.push_back(s);
  }
};

namespace sweep_detail {

// Ascending coefficients, index = power of lambda. Eight entries cover
// n <= 6 (and the lambda shift of the vertex identity) with room to spare.
using Coeffs = std::array<std::int64_t, 8>;

inline const std::int64_t* pow3_table() {
  static const std::int64_t t[] = {1,      3,       9,       27,      81,      243,
                                   729,    2187,    6561,    19683,   59049,   177147,
                                   531441, 1594323, 4782969, 14348907};
  return t;
}

/// Faddeev-LeVerrier over Gaussian integers, unchecked int64. Valid while
/// intermediate minors stay well under 2^63, which holds comfortably for
/// n <= 12 with entries of modulus <= 1. Returns false if a trace fails the
/// exact divisibility the recurrence guarantees (a sign of memory bugs, not
/// of mathematics). asc[p] is the coefficient of lambda^p; entries above k
/// are zeroed except asc[k] = 1.
template <int MAXN>
inline bool faddeev_int(int k, const std::int64_t (&re)[MAXN][MAXN],
                        const std::int64_t (&im)[MAXN][MAXN], std::int64_t* asc) {
  for (int p = 0; p <= k; ++p) asc[p] = 0;
  asc[k] = 1;
  if (k == 0) return true;
  std::int64_t Mre[MAXN][MAXN] = {}, Mim[MAXN][MAXN] = {};
  std::int64_t Tre[MAXN][MAXN], Tim[MAXN][MAXN];
  for (int i = 0; i < k; ++i) Mre[i][i] = 1;
  for (int j = 1; j <= k; ++j) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        std::int64_t sr = 0, si = 0;
        for (int t = 0; t < k; ++t) {
          sr += re[r][t] * Mre[t][c] - im[r][t] * Mim[t][c];
          si += re[r][t] * Mim[t][c] + im[r][t] * Mre[t][c];
        }
        Tre[r][c] = sr;
        Tim[r][c] = si;
      }
    std::int64_t tr = 0, ti = 0;
    for (int r = 0; r < k; ++r) {
      tr += Tre[r][r];
      ti += Tim[r][r];
    }
    if (ti != 0 || tr % j != 0) return false;
    std::int64_t c = -(tr / j);
    asc[k - j] = c;
    if (j < k) {
      for (int r = 0; r < k; ++r)
        for (int cc = 0; cc < k; ++cc) {
          Mre[r][cc] = Tre[r][cc];
          Mim[r][cc] = Tim[r][cc];
        }
      for (int r = 0; r < k; ++r) Mre[r][r] += c;
    }
  }
  return true;
}

struct CycleData {
  std::vector<std::pair<int, int>> steps;  // (edge id, 0 = traversed low->high)
  int gone_mask;                           // vertices of D - C
  int length;
};

struct ElemData {
  int order = 0;
  std::int64_t base = 0;  // (-1)^{components} * 2^{cycles}; negative-cycle sign applied later
  std::vector<int> cyc;
  std::uint32_t edge_mask = 0;
};

template <int N>
struct Plan {
  MixedGraph G;
  std::string label;
  int m = 0;
  std::int64_t total = 1;  // 3^m
  std::array<std::pair<int, int>, 16> ends{};
  std::vector<CycleData> cycles;
  std::vector<ElemData> elems;
  std::vector<std::vector<int>> elems_of_edge;
  std::vector<std::vector<std::pair<int, int>>> cycles_of_edge;  // (cycle id, dir)
  std::vector<std::vector<int>> cycles_of_vertex;
  std::vector<std::vector<int>> nbrs;
  std::vector<std::vector<Coeffs>> table;  // [vertex mask][orientation code of its edges]
  std::vector<std::vector<std::pair<int, std::int64_t>>> mask_mult;  // edge -> (mask, 3^pos)
  Coeffs underlying{};
};

template <int N>
Plan<N> build_plan(const MixedGraph& G) {
  static_assert(N >= 1 && N <= 6);
  const std::int64_t* pow3 = pow3_table();
  Plan<N> p;
  p.G = G;
  p.m = G.num_edges();
  if (G.num_vertices() != N || p.m > 15) throw Error("sweep plan: graph out of range");
  p.total = pow3[p.m];

  const auto& E = G.edges();
  std::map<std::pair<int, int>, int> eid;
  for (int j = 0; j < p.m; ++j) {
    p.ends[static_cast<size_t>(j)] = {E[static_cast<size_t>(j)].u, E[static_cast<size_t>(j)].v};
    eid[{E[static_cast<size_t>(j)].u, E[static_cast<size_t>(j)].v}] = j;
  }
  {
    std::ostringstream os;
    os << "n=" << N << " edges=";
    for (int j = 0; j < p.m; ++j)
      os << (j ? "," : "") << p.ends[static_cast<size_t>(j)].first << "-"
         << p.ends[static_cast<size_t>(j)].second;
    p.label = os.str();
  }

  p.nbrs.resize(N);
  for (const auto& e : E) {
    p.nbrs[static_cast<size_t>(e.u)].push_back(e.v);
    p.nbrs[static_cast<size_t>(e.v)].push_back(e.u);
  }

  const int full = (1 << N) - 1;
  std::vector<Cycle> cyc = enumerate_cycles(G);
  std::map<std::vector<int>, int> cyc_id;
  p.cycles_of_edge.resize(static_cast<size_t>(p.m));
  p.cycles_of_vertex.resize(N);
  for (size_t i = 0; i < cyc.size(); ++i) {
    const auto& verts = cyc[i].verts;
    cyc_id[verts] = static_cast<int>(i);
    CycleData cd;
    cd.length = cyc[i].length();
    int vmask = 0;
    for (size_t s = 0; s < verts.size(); ++s) {
      int a = verts[s], b = verts[(s + 1) % verts.size()];
      int j = eid.at({std::min(a, b), std::max(a, b)});
      cd.steps.push_back({j, a < b ? 0 : 1});
      p.cycles_of_edge[static_cast<size_t>(j)].push_back({static_cast<int>(i), a < b ? 0 : 1});
      vmask |= 1 << a;
      p.cycles_of_vertex[static_cast<size_t>(a)].push_back(static_cast<int>(i));
    }
    cd.gone_mask = full ^ vmask;
    p.cycles.push_back(std::move(cd));
  }

  p.elems_of_edge.resize(static_cast<size_t>(p.m));
  for_each_elementary(G, /*real_cycles_only=*/false, [&](const ElementarySubgraph& h) {
    ElemData el;
    el.order = h.order();
    el.base = (h.num_components() & 1) ? -1 : 1;
    el.base <<= h.num_cycles();
    for (const auto& [u, v] : h.edges) el.edge_mask |= std::uint32_t(1) << eid.at({u, v});
    for (const auto& c : h.cycles) {
      el.cyc.push_back(cyc_id.at(c.verts));
      for (size_t s = 0; s < c.verts.size(); ++s) {
        int a = c.verts[s], b = c.verts[(s + 1) % c.verts.size()];
        el.edge_mask |= std::uint32_t(1) << eid.at({std::min(a, b), std::max(a, b)});
      }
    }
    int id = static_cast<int>(p.elems.size());
    for (int j = 0; j < p.m; ++j)
      if ((el.edge_mask >> j) & 1) p.elems_of_edge[static_cast<size_t>(j)].push_back(id);
    p.elems.push_back(std::move(el));
  });

  // Orientation-indexed charpoly tables for every proper vertex subset.
  p.table.resize(std::size_t(1) << N);
  p.mask_mult.resize(static_cast<size_t>(p.m));
  for (int mask = 0; mask < full; ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < N; ++v)
      if ((mask >> v) & 1) vs.push_back(v);
    const int k = static_cast<int>(vs.size());
    int local[6];
    for (int i = 0; i < k; ++i) local[vs[static_cast<size_t>(i)]] = i;
    std::vector<int> le;
    for (int j = 0; j < p.m; ++j) {
      auto [u, v] = p.ends[static_cast<size_t>(j)];
      if (((mask >> u) & 1) && ((mask >> v) & 1)) {
        p.mask_mult[static_cast<size_t>(j)].push_back({mask, pow3[le.size()]});
        le.push_back(j);
      }
    }
    const int mk = static_cast<int>(le.size());
    auto& tbl = p.table[static_cast<size_t>(mask)];
    tbl.resize(static_cast<size_t>(pow3[mk]));
    std::vector<int> dg(static_cast<size_t>(mk), 0);
    for (std::int64_t code = 0; code < pow3[mk]; ++code) {
      std::int64_t re[6][6] = {}, im[6][6] = {};
      for (int t = 0; t < mk; ++t) {
        auto [u, v] = p.ends[static_cast<size_t>(le[static_cast<size_t>(t)])];
        int a = local[u], b = local[v];
        switch (dg[static_cast<size_t>(t)]) {
          case 0: re[a][b] = re[b][a] = 1; break;
          case 1: im[a][b] = 1; im[b][a] = -1; break;
          default: im[a][b] = -1; im[b][a] = 1; break;
        }
      }
      Coeffs& out = tbl[static_cast<size_t>(code)];
      out.fill(0);
      if (!faddeev_int<6>(k, re, im, out.data()))
        throw Error("sweep table: non-integral trace in charpoly recurrence");
      for (int t = 0; t < mk; ++t) {
        if (dg[static_cast<size_t>(t)] < 2) {
          ++dg[static_cast<size_t>(t)];
          break;
        }
        dg[static_cast<size_t>(t)] = 0;
      }
    }
  }

  {
    std::int64_t re[6][6] = {}, im[6][6] = {};
    for (int j = 0; j < p.m; ++j) {
      auto [u, v] = p.ends[static_cast<size_t>(j)];
      re[u][v] = re[v][u] = 1;
    }
    p.underlying.fill(0);
    if (!faddeev_int<6>(N, re, im, p.underlying.data()))
      throw Error("sweep plan: non-integral trace in charpoly recurrence");
  }
  return p;
}

template <int N>
struct Cursor {
  const Plan<N>* plan = nullptr;
  std::array<std::uint8_t, 16> digits{};
  std::int64_t re[6][6] = {}, im[6][6] = {};
  std::vector<std::int64_t> precode;
  std::vector<int> expo;               // cycle exponent mod 4
  std::vector<std::int32_t> contrib;   // per-elementary Sachs term, this orientation
  std::vector<std::uint8_t> cls;       // 0 positive, 1 negative, 2 imaginary

  void set_matrix(int e, int nd) {
    auto [u, v] = plan->ends[static_cast<size_t>(e)];
    switch (nd) {
      case 0: re[u][v] = re[v][u] = 1; im[u][v] = im[v][u] = 0; break;
      case 1: re[u][v] = re[v][u] = 0; im[u][v] = 1; im[v][u] = -1; break;
      default: re[u][v] = re[v][u] = 0; im[u][v] = -1; im[v][u] = 1; break;
    }
  }

  // Exponent contributed by one edge to a cycle passing through it, by
  // digit (undirected/forward/backward) and traversal direction.
  static int step_exp(int digit, int dir) {
    static const int g[3][2] = {{0, 0}, {1, 3}, {3, 1}};
    return g[digit][dir];
  }

  void apply(int e, int nd) {
    const int od = digits[static_cast<size_t>(e)];
    if (od == nd) return;
    digits[static_cast<size_t>(e)] = static_cast<std::uint8_t>(nd);
    for (const auto& [mask, mult] : plan->mask_mult[static_cast<size_t>(e)])
      precode[static_cast<size_t>(mask)] += (nd - od) * mult;
    for (const auto& [c, dir] : plan->cycles_of_edge[static_cast<size_t>(e)])
      expo[static_cast<size_t>(c)] =
          (expo[static_cast<size_t>(c)] + step_exp(nd, dir) - step_exp(od, dir) + 4) & 3;
    set_matrix(e, nd);
  }

  void init(const Plan<N>& pl, std::int64_t code) {
    plan = &pl;
    digits.fill(0);
    for (int j = 0; j < pl.m; ++j) {
      digits[static_cast<size_t>(j)] = static_cast<std::uint8_t>(code % 3);
      code /= 3;
    }
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) re[r][c] = im[r][c] = 0;
    for (int j = 0; j < pl.m; ++j) set_matrix(j, digits[static_cast<size_t>(j)]);
    precode.assign(pl.table.size(), 0);
    for (int j = 0; j < pl.m; ++j)
      for (const auto& [mask, mult] : pl.mask_mult[static_cast<size_t>(j)])
        precode[static_cast<size_t>(mask)] += digits[static_cast<size_t>(j)] * mult;
    expo.assign(pl.cycles.size(), 0);
    for (size_t c = 0; c < pl.cycles.size(); ++c)
      for (const auto& [e, dir] : pl.cycles[c].steps)
        expo[c] = (expo[c] + step_exp(digits[static_cast<size_t>(e)], dir)) & 3;
    contrib.assign(pl.elems.size(), 0);
    cls.assign(pl.cycles.size(), 0);
  }

  bool advance() {
    int e = 0;
    while (e < plan->m && digits[static_cast<size_t>(e)] == 2) {
      apply(e, 0);
      ++e;
    }
    if (e == plan->m) return false;
    apply(e, digits[static_cast<size_t>(e)] + 1);
    return true;
  }

  const Coeffs& tbl(int mask) const {
    return plan->table[static_cast<size_t>(mask)]
                      [static_cast<size_t>(precode[static_cast<size_t>(mask)])];
  }
};

template <int N>
void run_range(const Plan<N>& plan, const SweepOptions& opt, std::int64_t from, std::int64_t to,
               SweepStats& st) {
  const int full = (1 << N) - 1;
  const int m = plan.m;
  Cursor<N> cur;
  cur.init(plan, from);

  Coeffs sachs, lev, rhs;
  auto fail = [&](std::uint64_t& counter, std::int64_t code, const std::string& what) {
    ++counter;
    if (st.failure_notes.size() < static_cast<size_t>(opt.max_failures))
      st.failure_notes.push_back(plan.label + " code=" + std::to_string(code) + ": " + what);
  };

  for (std::int64_t idx = from; idx < to; ++idx) {
    // cycle classes for this orientation
    bool any_real_odd = false, all_pos = true;
    for (size_t c = 0; c < plan.cycles.size(); ++c) {
      const int e = cur.expo[c];
      const std::uint8_t k = (e == 0) ? 0 : (e == 2) ? 1 : 2;
      cur.cls[c] = k;
      if (k != 0) all_pos = false;
      if (k < 2 && (plan.cycles[c].length & 1)) any_real_odd = true;
    }

    // Sachs expansion
    sachs.fill(0);
    sachs[N] = 1;
    for (size_t id = 0; id < plan.elems.size(); ++id) {
      const ElemData& el = plan.elems[id];
      std::int64_t sgn = el.base;
      for (int c : el.cyc) {
        const std::uint8_t k = cur.cls[static_cast<size_t>(c)];
        if (k == 2) {
          sgn = 0;
          break;
        }
        if (k == 1) sgn = -sgn;
      }
      cur.contrib[id] = static_cast<std::int32_t>(sgn);
      if (sgn) sachs[static_cast<size_t>(N - el.order)] += sgn;
    }

    // Faddeev-LeVerrier on the Hermitian matrix
    lev.fill(0);
    if (!faddeev_int<6>(N, cur.re, cur.im, lev.data())) {
      fail(st.agreement_failures, idx, "non-integral trace in charpoly recurrence");
      if (idx + 1 < to) cur.advance();
      continue;
    }
    if (lev != sachs)
      fail(st.agreement_failures, idx, "Sachs and Faddeev-LeVerrier charpolys differ");
    else
      ++st.charpoly_agreements;

    // trace coefficients
    {
      bool ok = lev[static_cast<size_t>(N - 1)] == 0;
      if (N >= 2) ok = ok && lev[static_cast<size_t>(N - 2)] == -static_cast<std::int64_t>(m);
      if (ok)
        ++st.trace_checks;
      else
        fail(st.property_failures, idx, "trace coefficient check failed");
    }

    // spectral symmetry
    if (!any_real_odd) {
      bool ok = true;
      for (int pw = N - 1; pw >= 0; pw -= 2) ok = ok && lev[static_cast<size_t>(pw)] == 0;
      if (ok)
        ++st.symmetry_checks;
      else
        fail(st.property_failures, idx, "odd coefficient nonzero without a real odd cycle");
    }

    // all cycles positive (vacuous for forests): spectrum of the underlying graph
    if (all_pos) {
      if (lev == plan.underlying)
        ++st.positive_equivalences;
      else
        fail(st.property_failures, idx, "positive orientation charpoly differs from underlying graph");
    }

    // edge deletion identities
    for (int e = 0; e < m; ++e) {
      rhs = sachs;
      for (int id : plan.elems_of_edge[static_cast<size_t>(e)])
        if (cur.contrib[static_cast<size_t>(id)])
          rhs[static_cast<size_t>(N - plan.elems[static_cast<size_t>(id)].order)] -=
              cur.contrib[static_cast<size_t>(id)];
      // rhs now holds Phi(D - e); subtract Phi(D - u - v) and the cycle terms
      auto [u, v] = plan.ends[static_cast<size_t>(e)];
      const Coeffs& quv = cur.tbl(full ^ (1 << u) ^ (1 << v));
      for (int p = 0; p < 8; ++p) rhs[static_cast<size_t>(p)] -= quv[static_cast<size_t>(p)];
      for (const auto& [c, dir] : plan.cycles_of_edge[static_cast<size_t>(e)]) {
        const std::uint8_t k = cur.cls[static_cast<size_t>(c)];
        if (k == 2) continue;
        const Coeffs& t = cur.tbl(plan.cycles[static_cast<size_t>(c)].gone_mask);
        const std::int64_t f = (k == 0) ? 2 : -2;
        for (int p = 0; p < 8; ++p) rhs[static_cast<size_t>(p)] -= f * t[static_cast<size_t>(p)];
      }
      if (rhs != lev)
        fail(st.identity_failures, idx,
             "edge identity failed at edge " + std::to_string(u) + "-" + std::to_string(v));
      else
        ++st.edge_identities;
    }

    // vertex deletion identities
    for (int v = 0; v < N; ++v) {
      const Coeffs& pv = cur.tbl(full ^ (1 << v));
      rhs[0] = 0;
      for (int p = 0; p < 7; ++p) rhs[static_cast<size_t>(p + 1)] = pv[static_cast<size_t>(p)];
      for (int u : plan.nbrs[static_cast<size_t>(v)]) {
        const Coeffs& q = cur.tbl(full ^ (1 << u) ^ (1 << v));
        for (int p = 0; p < 8; ++p) rhs[static_cast<size_t>(p)] -= q[static_cast<size_t>(p)];
      }
      for (int c : plan.cycles_of_vertex[static_cast<size_t>(v)]) {
        const std::uint8_t k = cur.cls[static_cast<size_t>(c)];
        if (k == 2) continue;
        const Coeffs& t = cur.tbl(plan.cycles[static_cast<size_t>(c)].gone_mask);
        const std::int64_t f = (k == 0) ? 2 : -2;
        for (int p = 0; p < 8; ++p) rhs[static_cast<size_t>(p)] -= f * t[static_cast<size_t>(p)];
      }
      if (rhs != lev)
        fail(st.identity_failures, idx, "vertex identity failed at vertex " + std::to_string(v));
      else
        ++st.vertex_identities;
    }

    // floating-point spot check
    if (opt.float_stride > 0 && idx % opt.float_stride == 0) {
      Eigen::Matrix<std::complex<double>, N, N> A;
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
          A(r, c) = std::complex<double>(static_cast<double>(cur.re[r][c]),
                                         static_cast<double>(cur.im[r][c]));
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, N, N>> es(
          A, Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success) {
        fail(st.float_failures, idx, "eigenvalue solver failed");
      } else {
        double sum = 0, sumsq = 0, worst = 0;
        for (int i = 0; i < N; ++i) {
          const double lam = es.eigenvalues()(i);
          sum += lam;
          sumsq += lam * lam;
          double val = 0, scale = 1;
          for (int p = N; p >= 0; --p) {
            val = val * lam + static_cast<double>(lev[static_cast<size_t>(p)]);
            scale = scale * std::abs(lam) + std::abs(static_cast<double>(lev[static_cast<size_t>(p)]));
          }
          // Floor the scale: near an eigenvalue at 0 with vanishing trailing
          // coefficients the running scale collapses to ~|p(lam)| itself.
          worst = std::max(worst, std::abs(val) / std::max(scale, 1.0));
        }
        if (std::abs(sum) <= 1e-8 && std::abs(sumsq - 2.0 * m) <= 1e-8 * (1 + 2.0 * m) &&
            worst <= 1e-7)
          ++st.float_checks;
        else
          fail(st.float_failures, idx, "float spot check failed");
      }
    }

    if (idx + 1 < to) cur.advance();
  }
}

template <int N>
void run_graph(const MixedGraph& G, const SweepOptions& opt, SweepStats& st) {
  Plan<N> plan = build_plan<N>(G);
  ++st.graphs;
  st.orientations += static_cast<std::uint64_t>(plan.total);

  int threads = opt.num_threads > 0 ? opt.num_threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (static_cast<std::int64_t>(threads) > plan.total)
    threads = static_cast<int>(plan.total);

  if (threads == 1) {
    run_range(plan, opt, 0, plan.total, st);
    return;
  }
  std::vector<SweepStats> parts(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    std::int64_t from = plan.total * t / threads;
    std::int64_t to = plan.total * (t + 1) / threads;
    pool.emplace_back([&plan, &opt, from, to, &parts, t] {
      run_range(plan, opt, from, to, parts[static_cast<size_t>(t)]);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : parts) st.merge(part, static_cast<size_t>(opt.max_failures));
}

}  // namespace sweep_detail

inline SweepStats exhaustive_small_graph_sweep(const SweepOptions& opt = {}) {
  if (opt.min_n < 1 || opt.max_n < opt.min_n || opt.max_n > 6)
    throw Error("exhaustive sweep covers 1 <= n <= 6");
  const auto t0 = std::chrono::steady_clock::now();
  SweepStats st;
  for (int n = opt.min_n; n <= opt.max_n; ++n) {
    EnumerationScope sc;
    sc.max_n = n;
    sc.c4free_only = false;
    sc.connected_only = true;
    for (const MixedGraph& G : enumerate_underlying(sc)) {
      switch (n) {
        case 1: sweep_detail::run_graph<1>(G, opt, st); break;
        case 2: sweep_detail::run_graph<2>(G, opt, st); break;
        case 3: sweep_detail::run_graph<3>(G, opt, st); break;
        case 4: sweep_detail::run_graph<4>(G, opt, st); break;
        case 5: sweep_detail::run_graph<5>(G, opt, st); break;
        default: sweep_detail::run_graph<6>(G, opt, st); break;
      }
    }
  }
  st.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

/// Exact charpolys grouped by cycle sign vector: within one group all
/// orientations must agree. Uses the unchecked int64 recurrence, which is
/// safe (and guarded by the divisibility test) up to n = 12.
struct DeterminismStats {
  std::uint64_t orientations = 0;
  std::uint64_t classes = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_notes;
};

inline DeterminismStats check_sign_vector_determinism(const MixedGraph& G,
                                                      int max_failures = 5) {
  const int n = G.num_vertices();
  if (n > 12) throw Error("sign-vector determinism check supports n <= 12");
  DeterminismStats st;
  const std::vector<Cycle> cycles = enumerate_cycles(G);
  std::map<std::vector<std::uint8_t>, std::array<std::int64_t, 13>> seen;
  for_each_orientation(G, [&](const std::vector<Edge>& edges) {
    MixedGraph D(n, edges);
    std::vector<std::uint8_t> key;
    key.reserve(cycles.size());
    for (const auto& c : cycles)
      key.push_back(static_cast<std::uint8_t>(sign_class_of(classify_cycle(D, c))));

    std::int64_t re[12][12] = {}, im[12][12] = {};
    for (const auto& e : edges) {
      switch (e.kind) {
        case EdgeKind::Undirected: re[e.u][e.v] = re[e.v][e.u] = 1; break;
        case EdgeKind::Forward: im[e.u][e.v] = 1; im[e.v][e.u] = -1; break;
        default: im[e.u][e.v] = -1; im[e.v][e.u] = 1; break;
      }
    }
    std::array<std::int64_t, 13> asc{};
    if (!sweep_detail::faddeev_int<12>(n, re, im, asc.data()))
      throw Error("determinism check: non-integral trace in charpoly recurrence");

    ++st.orientations;
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), asc);
      ++st.classes;
    } else if (it->second != asc) {
      ++st.failures;
      if (st.failure_notes.size() < static_cast<size_t>(max_failures))
        st.failure_notes.push_back("orientation " + std::to_string(st.orientations - 1) +
                                   " disagrees with its sign class representative");
    }
  });
  return st;
}

}  // namespace hermspec
