#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "comgraph/matrix.hpp"
#include "comgraph/matrix_space.hpp"

namespace comgraph {

/// A claimed path in a commuting graph.
template <typename M>
struct PathWitness {
  std::string claim;
  std::vector<M> vertices;
  std::size_t max_length = 0;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

using FinitePath = PathWitness<Matrix>;
using TropicalPath = PathWitness<TropicalMatrix>;

// -- Boolean witnesses -----------------------------------------------------

/// Two matrices of M_n(B), n >= 3, at distance at least 4 in the commuting
/// graph. n = 3 uses the explicit pair; n >= 4 the block construction
/// [0 e_{n-1}^T; (0,1,...,1)^T J_{n-1}^T] and diag-block(1, J_{n-1}).
std::pair<Matrix, Matrix> boolean_witness_pair(std::size_t n);

/// The neighborhoods of the n = 3 witnesses (five matrices each), in
/// canonical order.
std::pair<std::vector<Matrix>, std::vector<Matrix>> expected_neighbor_sets_n3();

/// (J_n, J_n^T).
std::pair<Matrix, Matrix> jn_pair(const SemiringPtr& s, std::size_t n);

/// C(J_n) ∩ C(J_n^T) by enumeration, canonical order.
std::vector<Matrix> jn_centralizer_intersection(const SemiringPtr& s, std::size_t n,
                                                std::uint64_t budget = kDefaultEnumerationBudget);

bool is_scalar(const Matrix& m);

// -- path constructors -----------------------------------------------------

/// Which construction produced (part of) a tropical path.
enum class TropicalRoute {
  kDirect,              // endpoints commute
  kNonDiagonal,         // Z - (Z + aI) - E, a the largest entry
  kRepeatedDiagonal,    // D - F - E, F joining two equal diagonal positions
  kDistinctDiagonal,    // D - two-block scalar - C - B - Y with B the mu/epsilon matrix
  kDistinctDiagonalEigen,  // same shape, B = u v^T from tropical eigenvectors of Y
};

const char* route_name(TropicalRoute route);

struct TropicalConnection {
  TropicalPath path;
  std::vector<TropicalRoute> routes;
};

/// Path of length <= 4 between non-central X, Y in M_n(T), n >= 3. Every
/// edge is checked before returning; a failed check throws std::logic_error.
TropicalConnection tropical_connect(const TropicalMatrix& x, const TropicalMatrix& y);

/// Right and left eigenvectors (u, v) of y for the same eigenvalue, both with
/// at least one finite entry.
std::pair<std::vector<TropicalScalar>, std::vector<TropicalScalar>> common_eigenvectors(const TropicalMatrix& y);

/// Largest mean weight of a cycle in the digraph of y; bottom when acyclic.
TropicalScalar max_cycle_mean(const TropicalMatrix& y);

enum class NonentireCase {
  kBothNoncentral = 1,  // A - xA - yB - B
  kFirstCentral,        // A - xE12 - yB - B
  kSecondCentral,       // A - xA - yE12 - B
  kBothCentral,         // A - xE12 - yE12 - B
};

struct NonentireConnection {
  FinitePath path;
  NonentireCase which = NonentireCase::kBothNoncentral;
};

/// Path of length <= 3 between non-central A, B over a commutative
/// semiring with zero divisors x y = 0. Centrality of xA and yB is decided
/// against the enumerated center of `space`.
NonentireConnection nonentire_connect(const MatrixSpace& space, const Matrix& a, const Matrix& b);

/// Consecutive vertices distinct and commuting, no vertex central, length
/// within max_length.
bool validate_path(const TropicalPath& path);
bool validate_path(const MatrixSpace& space, const FinitePath& path);

}  // namespace comgraph
