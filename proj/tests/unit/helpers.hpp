#pragma once

#include <string>
#include <vector>

#include "comgraph/matrix.hpp"
#include "comgraph/semiring.hpp"
#include "oracle.hpp"

namespace testing {

inline comgraph::SemiringPtr sr(const std::string& name) {
  if (name == "boolean") return comgraph::boolean_semiring();
  return comgraph::make_semiring(comgraph::builtin_semiring(*comgraph::parse_builtin_name(name)));
}

inline comgraph::Matrix mat(const comgraph::SemiringPtr& s, std::size_t n, const std::vector<int>& entries) {
  std::vector<comgraph::ElementId> e;
  for (int v : entries) e.emplace_back(static_cast<std::size_t>(v));
  return comgraph::Matrix(s, n, std::move(e));
}

inline oracle::Mat ints(const comgraph::Matrix& m) {
  oracle::Mat out;
  for (auto e : m.entries()) out.push_back(static_cast<int>(e.index()));
  return out;
}

inline comgraph::TropicalScalar t(long v) { return comgraph::TropicalScalar(v); }
inline const comgraph::TropicalScalar kNegInf{};

inline comgraph::TropicalMatrix tmat(std::size_t n, std::vector<comgraph::TropicalScalar> entries) {
  return comgraph::TropicalMatrix(n, std::move(entries));
}

}  // namespace testing
