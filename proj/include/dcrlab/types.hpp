#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcrlab {

using Index = Eigen::Index;

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using RowVectorX = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using TokenSeq = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Completed operations must never leave NaN/Inf behind.
template <typename S>
inline void require_finite(const MatrixX<S>& m, const std::string& what) {
  if (!m.allFinite()) throw Error("non-finite value in " + what);
}

template <typename S>
inline bool nearly_equal(S a, S b, S tol) {
  return std::abs(a - b) <= tol * std::max<S>(S(1), std::max(std::abs(a), std::abs(b)));
}

}  // namespace dcrlab
