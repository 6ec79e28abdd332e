#include "sqtile/oracle.hpp"

#include "sqtile/contfrac.hpp"
#include "sqtile/greedy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sqtile {

namespace {

constexpr int kInfinity = 1 << 20;

struct Searcher {
  int p, q;  // width, height
  std::uint64_t budget;
  std::uint64_t states = 0;
  bool exhausted = false;
  std::unordered_map<std::uint64_t, int> memo;

  std::uint64_t key(const std::vector<int>& h) const {
    std::uint64_t k = 0;
    for (int v : h) k = (k << 4) | static_cast<std::uint64_t>(v);
    return k;
  }

  // minimal squares to fill the remaining region above the profile
  int solve(std::vector<int>& h) {
    int lowest = kInfinity, col = -1;
    for (int i = 0; i < p; ++i)
      if (h[i] < lowest) {
        lowest = h[i];
        col = i;
      }
    if (lowest == q) return 0;
    std::uint64_t k = key(h);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    if (++states > budget) {
      exhausted = true;
      return kInfinity;
    }

    int run = 0;
    while (col + run < p && h[col + run] == lowest) ++run;
    int smax = std::min(run, q - lowest);
    int best = kInfinity;
    for (int s = smax; s >= 1; --s) {
      for (int j = 0; j < s; ++j) h[col + j] += s;
      int sub = solve(h);
      for (int j = 0; j < s; ++j) h[col + j] -= s;
      if (sub + 1 < best) best = sub + 1;
      if (exhausted) return best;
    }
    memo[k] = best;
    return best;
  }

  // replays an optimal solution using the completed memo
  void witness(std::vector<int>& h, Tiling& t) {
    while (true) {
      int lowest = kInfinity, col = -1;
      for (int i = 0; i < p; ++i)
        if (h[i] < lowest) {
          lowest = h[i];
          col = i;
        }
      if (lowest == q) return;
      int run = 0;
      while (col + run < p && h[col + run] == lowest) ++run;
      int smax = std::min(run, q - lowest);
      int target = memo.at(key(h));
      bool placed = false;
      for (int s = smax; s >= 1; --s) {
        for (int j = 0; j < s; ++j) h[col + j] += s;
        int sub = h_full(h) ? 0 : (memo.count(key(h)) ? memo.at(key(h)) : kInfinity);
        if (sub + 1 == target) {
          t.squares.push_back({Rational(col), Rational(lowest), Rational(s)});
          placed = true;
          break;
        }
        for (int j = 0; j < s; ++j) h[col + j] -= s;
      }
      if (!placed) throw std::logic_error("oracle witness replay failed");
    }
  }

  bool h_full(const std::vector<int>& h) const {
    for (int v : h)
      if (v != q) return false;
    return true;
  }
};

}  // namespace

OracleResult optimal_tile_count(int p, int q, std::uint64_t state_budget) {
  if (p < 1 || q < 1) throw std::invalid_argument("optimal_tile_count requires positive sides");
  if (p > 15 || q > 15) throw std::invalid_argument("optimal_tile_count sides capped at 15");

  OracleResult res;
  if (p == q) {
    res.lower = res.best = 1;
    res.exact = true;
    res.witness.width = res.witness.height = Rational(p);
    res.witness.squares.push_back({Rational(0), Rational(0), Rational(p)});
    return res;
  }

  Searcher s;
  s.p = p;
  s.q = q;
  s.budget = state_budget;
  std::vector<int> h(static_cast<std::size_t>(p), 0);
  int best = s.solve(h);
  res.states = s.states;
  if (s.exhausted) {
    Tiling g = greedy_tile(Int(p), Int(q));
    res.best = std::min(best, static_cast<int>(g.squares.size()));
    // area bound with the largest possible square
    int smax = std::min(p, q);
    res.lower = std::max(1, (p * q + smax * smax - 1) / (smax * smax));
    res.exact = false;
    res.witness = g;
    return res;
  }
  res.best = best;
  res.lower = best;
  res.exact = true;
  res.witness.width = Rational(p);
  res.witness.height = Rational(q);
  std::fill(h.begin(), h.end(), 0);
  s.witness(h, res.witness);
  return res;
}

std::vector<OracleRow> optimal_table(int max_q, std::uint64_t budget_per_instance) {
  std::vector<OracleRow> rows;
  for (int q = 2; q <= max_q; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      OracleResult r = optimal_tile_count(p, q, budget_per_instance);
      rows.push_back({p, q, r.best, r.exact, r.witness});
    }
  return rows;
}

Int enumerate_spanning_trees(const ResistorNetwork& g) {
  const std::size_t m = g.edges.size();
  if (m > 20) throw std::invalid_argument("enumerate_spanning_trees capped at 20 edges");
  const std::size_t n = g.vertex_count;
  if (n <= 1) return 1;
  Int count = 0;
  std::vector<int> parent(n);

  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  const std::size_t need = n - 1;
  std::vector<std::size_t> combo(need);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t chosen) {
    if (chosen == need) {
      for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<int>(v);
      std::size_t merges = 0;
      for (std::size_t i = 0; i < need; ++i) {
        auto [u, v] = g.edges[combo[i]];
        int ru = find(u), rv = find(v);
        if (ru == rv) return;
        parent[static_cast<std::size_t>(ru)] = rv;
        ++merges;
      }
      if (merges == need) count += 1;
      return;
    }
    for (std::size_t e = start; e + (need - chosen) <= m; ++e) {
      combo[chosen] = e;
      rec(e + 1, chosen + 1);
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace sqtile
