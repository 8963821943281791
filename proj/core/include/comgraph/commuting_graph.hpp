#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "comgraph/matrix_space.hpp"

namespace comgraph {

using VertexId = std::uint32_t;

enum class GraphMode { kMaterialized, kImplicit };

struct GraphOptions {
  GraphMode mode = GraphMode::kMaterialized;
  std::uint64_t memory_cap_bytes = std::uint64_t{1} << 30;
  unsigned workers = 1;
};

inline constexpr std::uint64_t kMaxMaterializedVertices = std::uint64_t{1} << 20;

/// Commuting graph of a set of matrices: vertices are the members that do not
/// commute with the whole set, edges join distinct commuting vertices.
/// Vertices are numbered in canonical (code) order.
class CommutingGraph {
 public:
  /// Γ(M_n(S)): every matrix outside the center.
  static CommutingGraph build(std::shared_ptr<const MatrixSpace> space, const GraphOptions& options = {});

  /// Γ(T) for T ⊆ M_n(S) given by codes; members commuting with all of T are
  /// not vertices.
  static CommutingGraph build_subset(std::shared_ptr<const MatrixSpace> space, std::vector<std::uint64_t> members,
                                     const GraphOptions& options = {});

  const MatrixSpace& space() const { return *space_; }
  std::size_t vertex_count() const { return codes_.size(); }
  bool materialized() const { return !adjacency_.empty() || codes_.empty(); }
  unsigned workers() const { return workers_; }

  std::uint64_t code(VertexId v) const { return codes_[v]; }
  Matrix matrix(VertexId v) const { return space_->decode(codes_[v]); }
  std::optional<VertexId> vertex_of(std::uint64_t code) const;
  std::optional<VertexId> vertex_of(const Matrix& m) const { return vertex_of(space_->encode(m)); }

  bool adjacent(VertexId u, VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Packed adjacency row (materialized graphs only).
  std::span<const std::uint64_t> row(VertexId v) const {
    return {adjacency_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t row_words() const { return words_; }

 private:
  CommutingGraph(std::shared_ptr<const MatrixSpace> space, std::vector<std::uint64_t> codes,
                 const GraphOptions& options);
  void materialize();

  std::shared_ptr<const MatrixSpace> space_;
  std::vector<std::uint64_t> codes_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
  unsigned workers_ = 1;
};

/// Length of a shortest path; nullopt value means no path exists.
struct DistanceResult {
  std::optional<std::uint32_t> value;
  std::vector<VertexId> path;  // value + 1 vertices when finite

  bool infinite() const { return !value.has_value(); }
};

DistanceResult distance(const CommutingGraph& g, VertexId u, VertexId v);
DistanceResult distance(const CommutingGraph& g, const Matrix& u, const Matrix& v);

struct DiameterResult {
  DistanceResult distance;   // realizing distance with witness path (path empty if infinite)
  VertexId from = 0;         // lexicographically least realizing pair, from < to
  VertexId to = 0;
};

/// Exact diameter by BFS from every vertex (parallel over sources). Throws
/// DomainError when the graph has fewer than two vertices.
DiameterResult diameter(const CommutingGraph& g);

/// Components ordered by least vertex; each component sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const CommutingGraph& g);

/// Proof that d(A, B) >= 4 by checking that N(A) and N(B) are disjoint and
/// that no pair across them commutes.
struct DistanceCertificate {
  bool holds = false;
  std::uint64_t scanned = 0;              // matrices examined per neighborhood scan
  std::uint64_t neighbors_a = 0;
  std::uint64_t neighbors_b = 0;
  std::uint64_t common_neighbors = 0;
  std::uint64_t cross_pairs_checked = 0;
  std::uint64_t cross_pairs_commuting = 0;
  std::vector<std::uint64_t> neighborhood_a;  // codes, ascending
  std::vector<std::uint64_t> neighborhood_b;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;  // first commuting cross pair
};

/// Works on M_n(S) without materializing adjacency. Throws DomainError when A
/// or B is central, A = B, or A and B commute.
DistanceCertificate certify_distance_ge4(const MatrixSpace& space, const Matrix& a, const Matrix& b,
                                         unsigned workers = 1);

enum class ExportFormat { kDot, kCsvEdges };

inline constexpr std::size_t kMaxDotVertices = 10000;

void export_graph(const CommutingGraph& g, ExportFormat format, std::ostream& out);

/// Codes of the nilpotent matrices of the space, ascending.
std::vector<std::uint64_t> nilpotent_codes(const MatrixSpace& space);

}  // namespace comgraph
