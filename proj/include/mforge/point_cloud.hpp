#pragma once

#include <optional>
#include <vector>

#include "mforge/matrix.hpp"

namespace mforge {

// A set of N points in D-dimensional Euclidean space. `labels` carries an
// optional scalar per point (color / class id); `clean` carries the
// pre-noise ground truth when the cloud was generated synthetically.
struct PointCloud {
  Matrix points;
  std::optional<std::vector<double>> labels;
  std::optional<Matrix> clean;

  PointCloud() = default;
  explicit PointCloud(Matrix p) : points(std::move(p)) {}

  std::size_t size() const { return points.rows; }
  std::size_t dim() const { return points.cols; }
};

// Throws ParameterError unless N >= 1, D >= 1, all coordinates finite and
// `clean` (when present) has the same shape as `points`.
void validate(const PointCloud& cloud);

// Symmetric, zero-diagonal matrix of Euclidean distances.
struct DistanceMatrix {
  Matrix d;

  DistanceMatrix() = default;
  explicit DistanceMatrix(Matrix m) : d(std::move(m)) {}

  std::size_t size() const { return d.rows; }
  double operator()(std::size_t i, std::size_t j) const { return d(i, j); }
};

}  // namespace mforge
