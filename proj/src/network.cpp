#include "sqtile/network.hpp"

#include "sqtile/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sqtile {

bool ResistorNetwork::connected() const {
  if (vertex_count == 0) return false;
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
  }
  return visited == vertex_count;
}

ResistorNetwork tiling_to_network(const Tiling& t) {
  if (!t.complete()) throw std::invalid_argument("tiling_to_network requires a complete tiling");

  // horizontal intervals per y line
  std::map<Rational, std::vector<std::pair<Rational, Rational>>> lines;
  lines[Rational(0)].push_back({Rational(0), t.width});
  lines[t.height].push_back({Rational(0), t.width});
  for (const auto& s : t.squares) {
    lines[s.y].push_back({s.x, s.x + s.side});
    lines[s.y + s.side].push_back({s.x, s.x + s.side});
  }

  // merge touching/overlapping intervals into maximal segments
  struct Segment {
    Rational y, x1, x2;
    int id;
  };
  std::vector<Segment> segments;
  for (auto& [y, iv] : lines) {
    std::sort(iv.begin(), iv.end());
    Rational lo = iv.front().first, hi = iv.front().second;
    for (std::size_t i = 1; i < iv.size(); ++i) {
      if (iv[i].first <= hi) {
        if (iv[i].second > hi) hi = iv[i].second;
      } else {
        segments.push_back({y, lo, hi, static_cast<int>(segments.size())});
        lo = iv[i].first;
        hi = iv[i].second;
      }
    }
    segments.push_back({y, lo, hi, static_cast<int>(segments.size())});
  }

  auto find_segment = [&](const Rational& y, const Rational& x) -> int {
    for (const auto& seg : segments)
      if (seg.y == y && seg.x1 <= x && x <= seg.x2) return seg.id;
    throw std::logic_error("segment lookup failed");
  };

  ResistorNetwork g;
  g.vertex_count = segments.size();
  g.pole_a = find_segment(t.height, Rational(0));
  g.pole_b = find_segment(Rational(0), Rational(0));

  struct EdgeInfo {
    int upper, lower;
    Rational x;
  };
  std::vector<EdgeInfo> infos;
  for (const auto& s : t.squares) {
    int up = find_segment(s.y + s.side, s.x);
    int dn = find_segment(s.y, s.x);
    infos.push_back({up, dn, s.x});
    g.edges.emplace_back(up, dn);
  }

  // rotation: per vertex, downward edges by x ascending, then upward edges by x descending
  g.rotation.assign(g.vertex_count, {});
  std::vector<std::vector<std::pair<Rational, int>>> down(g.vertex_count), up(g.vertex_count);
  for (std::size_t i = 0; i < infos.size(); ++i) {
    down[static_cast<std::size_t>(infos[i].upper)].push_back({infos[i].x, static_cast<int>(i)});
    up[static_cast<std::size_t>(infos[i].lower)].push_back({infos[i].x, static_cast<int>(i)});
  }
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    std::sort(down[v].begin(), down[v].end());
    std::sort(up[v].begin(), up[v].end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    for (auto& [_, e] : down[v]) g.rotation[v].push_back(e);
    for (auto& [_, e] : up[v]) g.rotation[v].push_back(e);
  }
  return g;
}

HarmonicSolution solve_kirchhoff(const ResistorNetwork& g, const Rational& pa, const Rational& pb) {
  if (pa == pb) throw std::invalid_argument("solve_kirchhoff requires pa != pb");
  if (!g.connected()) throw std::invalid_argument("solve_kirchhoff requires a connected network");
  const std::size_t n = g.vertex_count;

  std::vector<int> index(n, -1);
  std::vector<int> internal;
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<int>(v) == g.pole_a || static_cast<int>(v) == g.pole_b) continue;
    index[v] = static_cast<int>(internal.size());
    internal.push_back(static_cast<int>(v));
  }

  const std::size_t m = internal.size();
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> rhs(m, Rational(0));
  for (const auto& [u, v] : g.edges) {
    auto touch = [&](int a, int b) {
      // edge a-b seen from a
      if (index[static_cast<std::size_t>(a)] < 0) return;
      int i = index[static_cast<std::size_t>(a)];
      A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 1;
      if (index[static_cast<std::size_t>(b)] >= 0) {
        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(index[static_cast<std::size_t>(b)])] -= 1;
      } else {
        rhs[static_cast<std::size_t>(i)] += (b == g.pole_a) ? pa : pb;
      }
    };
    touch(u, v);
    touch(v, u);
  }

  HarmonicSolution sol;
  sol.potential.assign(n, Rational(0));
  sol.potential[static_cast<std::size_t>(g.pole_a)] = pa;
  sol.potential[static_cast<std::size_t>(g.pole_b)] = pb;
  if (m > 0) {
    auto x = solve_linear(A, rhs);
    for (std::size_t i = 0; i < m; ++i) sol.potential[static_cast<std::size_t>(internal[i])] = x[i];
  }

  sol.net_current = 0;
  for (const auto& [u, v] : g.edges) {
    Rational c = sol.potential[static_cast<std::size_t>(u)] - sol.potential[static_cast<std::size_t>(v)];
    sol.current.push_back(c);
    if (v == g.pole_b) sol.net_current += c;
    if (u == g.pole_b) sol.net_current -= c;
  }

  // exact residual check at the internal vertices
  std::vector<Rational> net(n, Rational(0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    net[static_cast<std::size_t>(g.edges[e].first)] += sol.current[e];
    net[static_cast<std::size_t>(g.edges[e].second)] -= sol.current[e];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<int>(v) == g.pole_a || static_cast<int>(v) == g.pole_b) continue;
    if (net[v] != 0) throw std::logic_error("Kirchhoff residual nonzero");
  }
  return sol;
}

Rational effective_resistance(const ResistorNetwork& g) {
  HarmonicSolution s1 = solve_kirchhoff(g, Rational(1), Rational(0));
  if (s1.net_current == 0) throw std::runtime_error("no current between the poles");
  Rational r1 = 1 / s1.net_current;
  HarmonicSolution s2 = solve_kirchhoff(g, Rational(3), Rational(1));
  Rational r2 = 2 / s2.net_current;
  if (r1 != r2) throw std::logic_error("effective resistance depends on boundary values");
  return r1;
}

Int spanning_tree_count(const ResistorNetwork& g, bool glue_poles) {
  std::size_t n = g.vertex_count;
  std::vector<int> remap(n);
  for (std::size_t v = 0; v < n; ++v) remap[v] = static_cast<int>(v);
  if (glue_poles) {
    remap[static_cast<std::size_t>(g.pole_b)] = g.pole_a;
    // compact indices
  }
  std::map<int, int> compact;
  for (std::size_t v = 0; v < n; ++v) {
    int r = remap[v];
    if (!compact.count(r)) {
      int id = static_cast<int>(compact.size());
      compact[r] = id;
    }
  }
  std::size_t nn = compact.size();
  if (nn <= 1) return 1;
  std::vector<std::vector<Int>> L(nn, std::vector<Int>(nn, Int(0)));
  for (const auto& [u, v] : g.edges) {
    int cu = compact[remap[static_cast<std::size_t>(u)]];
    int cv = compact[remap[static_cast<std::size_t>(v)]];
    if (cu == cv) continue;  // self-loop after gluing
    L[static_cast<std::size_t>(cu)][static_cast<std::size_t>(cu)] += 1;
    L[static_cast<std::size_t>(cv)][static_cast<std::size_t>(cv)] += 1;
    L[static_cast<std::size_t>(cu)][static_cast<std::size_t>(cv)] -= 1;
    L[static_cast<std::size_t>(cv)][static_cast<std::size_t>(cu)] -= 1;
  }
  // delete the last row and column
  std::vector<std::vector<Int>> M(nn - 1, std::vector<Int>(nn - 1));
  for (std::size_t i = 0; i + 1 < nn; ++i)
    for (std::size_t j = 0; j + 1 < nn; ++j) M[i][j] = L[i][j];
  Int det = bareiss_det(std::move(M));
  return det < 0 ? Int(-det) : det;
}

LowerBoundCheck lower_bound_check(const Int& p, const Int& q, const Int& count) {
  LowerBoundCheck res;
  res.area_ok = count * p >= q;
  Int pw = 1;
  bool huge = false;
  for (Int i = 0; i < count; ++i) {
    pw <<= 1;
    if (pw >= q) {
      huge = true;
      break;
    }
  }
  res.log_ok = huge || pw >= q;
  res.pass = res.area_ok && res.log_ok;
  return res;
}

Tiling network_to_tiling(const ResistorNetwork& g) {
  if (!g.has_rotation())
    throw std::invalid_argument("network_to_tiling requires a rotation system");
  Rational r = effective_resistance(g);
  HarmonicSolution sol = solve_kirchhoff(g, r, Rational(0));
  for (const auto& c : sol.current)
    if (c == 0) throw std::runtime_error("network_to_tiling: zero-current edge (degenerate square)");

  // orient edges downward along the current
  struct DirEdge {
    int hi, lo;
    Rational c;
  };
  std::vector<DirEdge> dir;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    Rational c = sol.current[e];
    if (c > 0)
      dir.push_back({u, v, c});
    else
      dir.push_back({v, u, Rational(-c)});
  }

  // left-to-right order of downward and upward edges at each vertex
  std::vector<std::vector<int>> down_order(g.vertex_count), up_order(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const auto& rot = g.rotation[v];
    if (rot.empty()) continue;
    std::size_t cnt = rot.size();
    auto is_down = [&](std::size_t i) {
      int e = rot[i % cnt];
      return dir[static_cast<std::size_t>(e)].hi == static_cast<int>(v);
    };
    // find a cyclic start where a down-run begins (or any point if single-signed)
    std::size_t start = 0;
    bool mixed = false;
    for (std::size_t i = 0; i < cnt; ++i) {
      if (is_down(i) != is_down(i + 1)) mixed = true;
      if (is_down(i) && !is_down(i + cnt - 1)) start = i;
    }
    if (!mixed) start = 0;
    std::vector<int> downs, ups;
    bool seen_up = false;
    for (std::size_t i = 0; i < cnt; ++i) {
      int e = rot[(start + i) % cnt];
      if (dir[static_cast<std::size_t>(e)].hi == static_cast<int>(v)) {
        if (seen_up)
          throw std::runtime_error("network_to_tiling: rotation mixes up and down arcs");
        downs.push_back(e);
      } else {
        seen_up = true;
        ups.push_back(e);
      }
    }
    // clockwise from west: downs appear left-to-right, ups right-to-left
    std::reverse(ups.begin(), ups.end());
    down_order[v] = downs;
    up_order[v] = ups;
  }

  // process vertices by decreasing potential; assign x-intervals to edges
  std::vector<std::size_t> verts(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) verts[v] = v;
  std::sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) {
    if (sol.potential[a] != sol.potential[b]) return sol.potential[a] > sol.potential[b];
    return a < b;
  });

  std::vector<Rational> edge_x(g.edges.size(), Rational(0));
  std::vector<char> edge_placed(g.edges.size(), 0);
  Tiling t;
  t.width = sol.net_current;
  t.height = r;

  for (std::size_t v : verts) {
    Rational left;
    if (static_cast<int>(v) == g.pole_a) {
      left = 0;
    } else {
      // union of incoming tiles must be a contiguous interval
      bool first = true;
      Rational lo = 0, hi = 0;
      Rational total = 0;
      for (int e : up_order[v]) {
        if (!edge_placed[static_cast<std::size_t>(e)])
          throw std::runtime_error("network_to_tiling: inconsistent rotation system (unplaced upstream edge)");
        const auto& de = dir[static_cast<std::size_t>(e)];
        Rational x1 = edge_x[static_cast<std::size_t>(e)];
        Rational x2 = x1 + de.c;
        total += de.c;
        if (first) {
          lo = x1;
          hi = x2;
          first = false;
        } else {
          if (x1 < lo) lo = x1;
          if (x2 > hi) hi = x2;
        }
      }
      if (first) throw std::runtime_error("network_to_tiling: vertex with no incoming current");
      if (hi - lo != total)
        throw std::runtime_error("network_to_tiling: incoming tiles are not contiguous");
      left = lo;
    }
    Rational xcur = left;
    for (int e : down_order[v]) {
      edge_x[static_cast<std::size_t>(e)] = xcur;
      edge_placed[static_cast<std::size_t>(e)] = 1;
      xcur += dir[static_cast<std::size_t>(e)].c;
    }
  }

  for (std::size_t e = 0; e < dir.size(); ++e) {
    const auto& de = dir[e];
    t.squares.push_back({edge_x[e], sol.potential[static_cast<std::size_t>(de.lo)], de.c});
  }
  return t;
}

}  // namespace sqtile
