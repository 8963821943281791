#include "comgraph/commuting_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "comgraph/errors.hpp"
#include "comgraph/parallel.hpp"

namespace comgraph {

namespace {

using Bits = std::vector<std::uint64_t>;

inline void set_bit(std::uint64_t* row, std::size_t v) { row[v >> 6] |= std::uint64_t{1} << (v & 63); }
inline bool test_bit(const std::uint64_t* row, std::size_t v) { return (row[v >> 6] >> (v & 63)) & 1U; }

// Least set bit with index >= from, or npos.
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
std::size_t first_bit_from(const Bits& bits, std::size_t from) {
  std::size_t w = from >> 6;
  if (w >= bits.size()) return kNone;
  std::uint64_t word = bits[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
    if (++w >= bits.size()) return kNone;
    word = bits[w];
  }
}

template <typename Fn>
void for_each_bit(const Bits& bits, Fn&& fn) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      fn((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

// Result of one all-levels BFS used by the diameter scan.
struct SourceScan {
  bool all_reached = true;
  std::uint32_t best_level = 0;  // max distance to a vertex with larger id
  std::size_t best_target = kNone;
  std::size_t unreached_target = kNone;  // least unreached vertex with larger id
};

class BitBfs {
 public:
  explicit BitBfs(const CommutingGraph& g)
      : g_(g), n_(g.vertex_count()), words_(g.row_words()), visited_(words_), frontier_(words_), next_(words_) {}

  SourceScan scan(std::size_t source) {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    set_bit(visited_.data(), source);
    set_bit(frontier_.data(), source);
    std::size_t frontier_count = 1, visited_count = 1;
    SourceScan out;
    for (std::uint32_t level = 1; frontier_count > 0; ++level) {
      std::fill(next_.begin(), next_.end(), 0);
      const std::size_t unvisited = n_ - visited_count;
      if (frontier_count * 4 < unvisited) {
        for_each_bit(frontier_, [&](std::size_t u) {
          const std::uint64_t* row = g_.row(static_cast<VertexId>(u)).data();
          for (std::size_t w = 0; w < words_; ++w) next_[w] |= row[w];
        });
        for (std::size_t w = 0; w < words_; ++w) next_[w] &= ~visited_[w];
      } else {
        for (std::size_t w = 0; w < words_; ++w) {
          std::uint64_t open = ~visited_[w];
          if (w == words_ - 1 && (n_ & 63)) open &= (std::uint64_t{1} << (n_ & 63)) - 1;
          while (open) {
            const std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(open));
            open &= open - 1;
            const std::uint64_t* row = g_.row(static_cast<VertexId>(v)).data();
            for (std::size_t x = 0; x < words_; ++x) {
              if (row[x] & frontier_[x]) {
                set_bit(next_.data(), v);
                break;
              }
            }
          }
        }
      }
      frontier_count = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        visited_[w] |= next_[w];
        frontier_count += static_cast<std::size_t>(std::popcount(next_[w]));
      }
      visited_count += frontier_count;
      if (frontier_count > 0) {
        if (std::size_t t = first_bit_from(next_, source + 1); t != kNone) {
          out.best_level = level;
          out.best_target = t;
        }
      }
      frontier_.swap(next_);
    }
    if (visited_count < n_) {
      out.all_reached = false;
      for (std::size_t v = source + 1; v < n_; ++v) {
        if (!test_bit(visited_.data(), v)) {
          out.unreached_target = v;
          break;
        }
      }
    }
    return out;
  }

 private:
  const CommutingGraph& g_;
  std::size_t n_;
  std::size_t words_;
  Bits visited_, frontier_, next_;
};

}  // namespace

// -- construction ----------------------------------------------------------

CommutingGraph::CommutingGraph(std::shared_ptr<const MatrixSpace> space, std::vector<std::uint64_t> codes,
                               const GraphOptions& options)
    : space_(std::move(space)), codes_(std::move(codes)), workers_(std::max(1U, options.workers)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  words_ = (codes_.size() + 63) / 64;
  if (options.mode == GraphMode::kMaterialized) {
    if (codes_.size() > kMaxMaterializedVertices) {
      throw BudgetExceeded(std::to_string(codes_.size()) +
                           " vertices exceed the materialization limit; use implicit mode");
    }
    const std::uint64_t bytes = static_cast<std::uint64_t>(codes_.size()) * words_ * sizeof(std::uint64_t);
    if (bytes > options.memory_cap_bytes) {
      throw BudgetExceeded("adjacency needs " + std::to_string(bytes >> 20) + " MiB, above the cap of " +
                           std::to_string(options.memory_cap_bytes >> 20) + " MiB; use implicit mode");
    }
    materialize();
  }
}

CommutingGraph CommutingGraph::build(std::shared_ptr<const MatrixSpace> space, const GraphOptions& options) {
  if (!space) throw StructuralError("build: null space");
  const auto& center = space->center_codes();
  std::vector<std::uint64_t> codes;
  codes.reserve(space->size() - center.size());
  for (std::uint64_t x = 0; x < space->size(); ++x) {
    if (!std::binary_search(center.begin(), center.end(), x)) codes.push_back(x);
  }
  return CommutingGraph(std::move(space), std::move(codes), options);
}

CommutingGraph CommutingGraph::build_subset(std::shared_ptr<const MatrixSpace> space,
                                            std::vector<std::uint64_t> members, const GraphOptions& options) {
  if (!space) throw StructuralError("build_subset: null space");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::uint64_t> codes;
  for (std::uint64_t x : members) {
    if (x >= space->size()) throw StructuralError("subset member outside the matrix space");
    const bool commutes_with_all =
        std::all_of(members.begin(), members.end(), [&](std::uint64_t y) { return space->commutes(x, y); });
    if (!commutes_with_all) codes.push_back(x);
  }
  return CommutingGraph(std::move(space), std::move(codes), options);
}

void CommutingGraph::materialize() {
  const std::size_t n = codes_.size();
  adjacency_.assign(n * words_, 0);
  // Worker w fills the upper triangle of rows u = w, w + W, ...; each row has a
  // single writer. The lower triangle is mirrored afterwards.
  parallel_ranges(workers_, workers_, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t w = begin; w < end; ++w) {
      for (std::size_t u = w; u < n; u += workers_) {
        std::uint64_t* row = adjacency_.data() + u * words_;
        for (std::size_t v = u + 1; v < n; ++v) {
          if (space_->commutes(codes_[u], codes_[v])) set_bit(row, v);
        }
      }
    }
  });
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint64_t* row = adjacency_.data() + u * words_;
    for (std::size_t w = (u + 1) >> 6; w < words_; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        const std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        if (v > u) set_bit(adjacency_.data() + v * words_, u);
      }
    }
  }
}

std::optional<VertexId> CommutingGraph::vertex_of(std::uint64_t code) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<VertexId>(it - codes_.begin());
}

bool CommutingGraph::adjacent(VertexId u, VertexId v) const {
  if (u == v) return false;
  if (!adjacency_.empty()) return test_bit(adjacency_.data() + static_cast<std::size_t>(u) * words_, v);
  return space_->commutes(codes_[u], codes_[v]);
}

std::vector<VertexId> CommutingGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  if (!adjacency_.empty()) {
    const auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t word = r[w];
      while (word) {
        out.push_back(static_cast<VertexId>((w << 6) + static_cast<std::size_t>(std::countr_zero(word))));
        word &= word - 1;
      }
    }
    return out;
  }
  for (VertexId u = 0; u < codes_.size(); ++u) {
    if (u != v && space_->commutes(codes_[v], codes_[u])) out.push_back(u);
  }
  return out;
}

// -- distances -------------------------------------------------------------

DistanceResult distance(const CommutingGraph& g, VertexId u, VertexId v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw DomainError("distance: vertex out of range");
  DistanceResult result;
  if (u == v) {
    result.value = 0;
    result.path = {u};
    return result;
  }
  constexpr VertexId kUnseen = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> parent(n, kUnseen);
  parent[u] = u;
  std::vector<VertexId> frontier{u};
  while (!frontier.empty() && parent[v] == kUnseen) {
    std::vector<VertexId> next;
    for (VertexId w : frontier) {
      for (VertexId x : g.neighbors(w)) {
        if (parent[x] == kUnseen) {
          parent[x] = w;
          next.push_back(x);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier.swap(next);
  }
  if (parent[v] == kUnseen) return result;
  for (VertexId x = v; x != u; x = parent[x]) result.path.push_back(x);
  result.path.push_back(u);
  std::reverse(result.path.begin(), result.path.end());
  result.value = static_cast<std::uint32_t>(result.path.size() - 1);
  return result;
}

DistanceResult distance(const CommutingGraph& g, const Matrix& u, const Matrix& v) {
  auto vu = g.vertex_of(u);
  auto vv = g.vertex_of(v);
  if (!vu || !vv) throw DomainError("distance: endpoint is not a vertex (central or outside the vertex set)");
  return distance(g, *vu, *vv);
}

DiameterResult diameter(const CommutingGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw DomainError("diameter undefined: graph has fewer than two vertices");
  if (!g.materialized()) throw DomainError("diameter requires a materialized graph");

  DiameterResult result;
  {
    BitBfs bfs(g);
    const SourceScan first = bfs.scan(0);
    if (!first.all_reached) {
      result.from = 0;
      result.to = static_cast<VertexId>(first.unreached_target);
      return result;  // infinite, and (0, least unreached) is the least such pair
    }
  }

  struct Best {
    std::uint32_t level = 0;
    std::size_t from = kNone, to = kNone;
  };
  auto better = [](const Best& a, const Best& b) {
    if (a.level != b.level) return a.level > b.level;
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  };
  const unsigned workers = g.workers();
  std::vector<Best> local(workers);
  parallel_ranges(workers, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    BitBfs bfs(g);
    for (std::uint64_t w = begin; w < end; ++w) {
      Best& best = local[w];
      for (std::size_t s = w; s + 1 < n; s += workers) {
        const SourceScan scan = bfs.scan(s);
        if (scan.best_target == kNone) continue;
        const Best cand{scan.best_level, s, scan.best_target};
        if (best.from == kNone || better(cand, best)) best = cand;
      }
    }
  });
  Best best;
  for (const Best& b : local) {
    if (b.from != kNone && (best.from == kNone || better(b, best))) best = b;
  }
  result.from = static_cast<VertexId>(best.from);
  result.to = static_cast<VertexId>(best.to);
  result.distance = distance(g, result.from, result.to);
  return result;
}

std::vector<std::vector<VertexId>> connected_components(const CommutingGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId x : g.neighbors(comp[i])) {
        if (!seen[x]) {
          seen[x] = true;
          comp.push_back(x);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// -- certificate -----------------------------------------------------------

DistanceCertificate certify_distance_ge4(const MatrixSpace& space, const Matrix& a, const Matrix& b,
                                         unsigned workers) {
  const std::uint64_t ca = space.encode(a), cb = space.encode(b);
  if (space.is_central(ca) || space.is_central(cb)) throw DomainError("certify_distance_ge4: endpoint is central");
  if (ca == cb) throw DomainError("certify_distance_ge4: endpoints coincide");
  if (space.commutes(ca, cb)) throw DomainError("certify_distance_ge4: endpoints are adjacent (distance 1)");

  workers = std::max(1U, workers);
  std::vector<std::vector<std::uint64_t>> na(workers), nb(workers);
  parallel_ranges(space.size(), workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t x = begin; x < end; ++x) {
      if (space.is_central(x)) continue;
      if (x != ca && space.commutes(ca, x)) na[w].push_back(x);
      if (x != cb && space.commutes(cb, x)) nb[w].push_back(x);
    }
  });
  DistanceCertificate cert;
  cert.scanned = space.size();
  for (unsigned w = 0; w < workers; ++w) {
    cert.neighborhood_a.insert(cert.neighborhood_a.end(), na[w].begin(), na[w].end());
    cert.neighborhood_b.insert(cert.neighborhood_b.end(), nb[w].begin(), nb[w].end());
  }
  cert.neighbors_a = cert.neighborhood_a.size();
  cert.neighbors_b = cert.neighborhood_b.size();

  for (std::uint64_t c : cert.neighborhood_a) {
    for (std::uint64_t d : cert.neighborhood_b) {
      if (c == d) {
        ++cert.common_neighbors;
        continue;
      }
      ++cert.cross_pairs_checked;
      if (space.commutes(c, d)) {
        ++cert.cross_pairs_commuting;
        if (!cert.counterexample) cert.counterexample = std::pair(c, d);
      }
    }
  }
  cert.holds = cert.common_neighbors == 0 && cert.cross_pairs_commuting == 0;
  return cert;
}

// -- export ----------------------------------------------------------------

void export_graph(const CommutingGraph& g, ExportFormat format, std::ostream& out) {
  const std::size_t n = g.vertex_count();
  if (format == ExportFormat::kDot) {
    if (n > kMaxDotVertices) {
      throw BudgetExceeded("DOT export is limited to " + std::to_string(kMaxDotVertices) + " vertices");
    }
    out << "graph commuting {\n";
    for (VertexId v = 0; v < n; ++v) {
      out << "  " << g.code(v) << " [label=\"" << compact_string(g.matrix(v)) << "\"];\n";
    }
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : g.neighbors(u)) {
        if (v > u) out << "  " << g.code(u) << " -- " << g.code(v) << ";\n";
      }
    }
    out << "}\n";
    return;
  }
  out << "u,v\n";
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v > u) out << g.code(u) << ',' << g.code(v) << '\n';
    }
  }
}

std::vector<std::uint64_t> nilpotent_codes(const MatrixSpace& space) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t p = x;; p = space.multiply(p, x)) {
      if (p == 0) {
        out.push_back(x);
        break;
      }
      if (!seen.insert(p).second) break;
    }
  }
  return out;
}

}  // namespace comgraph
