#pragma once

// Brute-force reference implementations used as test oracles. They work on
// plain integer tables and share no code with the library.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

namespace oracle {

struct Table {
  int k = 0;
  std::vector<std::vector<int>> add, mul;
};

inline Table boolean() {
  Table t;
  t.k = 2;
  t.add = {{0, 1}, {1, 1}};
  t.mul = {{0, 0}, {0, 1}};
  return t;
}

inline Table modular(int m) {
  Table t;
  t.k = m;
  t.add.assign(m, std::vector<int>(m));
  t.mul.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      t.add[a][b] = (a + b) % m;
      t.mul[a][b] = (a * b) % m;
    }
  return t;
}

// Library element order for a chain: 0 = bottom, 1 = top, 2.. = middle
// elements in increasing order. rank() maps that order to the chain order.
inline int chain_rank(int e, int k) { return e == 0 ? 0 : e == 1 ? k - 1 : e - 1; }
inline int chain_elem(int r, int k) { return r == 0 ? 0 : r == k - 1 ? 1 : r + 1; }

inline Table chain(int k) {
  Table t;
  t.k = k;
  t.add.assign(k, std::vector<int>(k));
  t.mul.assign(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int ra = chain_rank(a, k), rb = chain_rank(b, k);
      t.add[a][b] = chain_elem(ra > rb ? ra : rb, k);
      t.mul[a][b] = chain_elem(ra < rb ? ra : rb, k);
    }
  return t;
}

// Every semiring axiom by direct scan.
inline bool valid_semiring(const Table& t) {
  const int k = t.k;
  for (int a = 0; a < k; ++a) {
    if (t.add[0][a] != a || t.add[a][0] != a) return false;
    if (t.mul[1][a] != a || t.mul[a][1] != a) return false;
    if (t.mul[0][a] != 0 || t.mul[a][0] != 0) return false;
    for (int b = 0; b < k; ++b) {
      if (t.add[a][b] != t.add[b][a]) return false;
      for (int c = 0; c < k; ++c) {
        if (t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]]) return false;
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) return false;
        if (t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]]) return false;
        if (t.mul[t.add[a][b]][c] != t.add[t.mul[a][c]][t.mul[b][c]]) return false;
      }
    }
  }
  return true;
}

using Mat = std::vector<int>;  // row-major n*n

inline Mat mul(const Table& t, const Mat& a, const Mat& b, int n) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = 0;
      for (int k = 0; k < n; ++k) acc = t.add[acc][t.mul[a[i * n + k]][b[k * n + j]]];
      c[i * n + j] = acc;
    }
  return c;
}

inline bool commute(const Table& t, const Mat& a, const Mat& b, int n) { return mul(t, a, b, n) == mul(t, b, a, n); }

// Matrix number `code` with base-k digits, entry (0,0) most significant.
inline Mat decode(std::uint64_t code, int k, int n) {
  Mat m(n * n);
  for (int i = n * n - 1; i >= 0; --i) {
    m[i] = static_cast<int>(code % k);
    code /= k;
  }
  return m;
}

inline std::vector<Mat> all_matrices(int k, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= k;
  std::vector<Mat> out;
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(decode(c, k, n));
  return out;
}

inline std::vector<Mat> center(const Table& t, int n) {
  const auto all = all_matrices(t.k, n);
  std::vector<Mat> out;
  for (const auto& a : all) {
    bool central = true;
    for (const auto& b : all) {
      if (!commute(t, a, b, n)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(a);
  }
  return out;
}

// Plain adjacency lists of the commuting graph on the given vertex set.
struct Graph {
  std::vector<Mat> vertices;
  std::vector<std::vector<int>> adj;
};

inline Graph commuting_graph(const Table& t, int n, const std::vector<Mat>& vertices) {
  Graph g;
  g.vertices = vertices;
  g.adj.resize(vertices.size());
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (u != v && commute(t, vertices[u], vertices[v], n)) g.adj[u].push_back(static_cast<int>(v));
  return g;
}

inline Graph full_graph(const Table& t, int n) {
  const auto all = all_matrices(t.k, n);
  const auto c = center(t, n);
  std::vector<Mat> vs;
  for (const auto& m : all) {
    bool central = false;
    for (const auto& z : c) central = central || z == m;
    if (!central) vs.push_back(m);
  }
  return commuting_graph(t, n, vs);
}

constexpr int kInf = std::numeric_limits<int>::max();

inline std::vector<int> bfs(const Graph& g, int s) {
  std::vector<int> d(g.adj.size(), kInf);
  std::deque<int> q{s};
  d[s] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int v : g.adj[u])
      if (d[v] == kInf) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

// Max over the all-pairs distance matrix; kInf when disconnected.
inline int diameter(const Graph& g) {
  int best = 0;
  for (std::size_t s = 0; s < g.adj.size(); ++s)
    for (int d : bfs(g, static_cast<int>(s))) best = d > best ? d : best;
  return best;
}

}  // namespace oracle
