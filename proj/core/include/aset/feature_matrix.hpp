#pragma once

#include <Eigen/Dense>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aset/descriptor.hpp"
#include "aset/raster.hpp"
#include "aset/samples.hpp"

namespace aset {

/// Band values at the labeled pixel locations, in sample order.
Eigen::VectorXd extract_column(const ImageCube& cube, int band_id,
                               const LabeledSamples& samples);

struct NormalizedColumn {
  Eigen::VectorXd values; // mean-centered, unit Euclidean norm
  double mean = 0.0;
  double norm = 0.0; // Euclidean norm of the centered vector
};

/// Mean-centers and unit-normalizes a raw column. Returns nullopt for
/// zero-variance (degenerate) columns, which callers must discard.
std::optional<NormalizedColumn> normalize_column(const Eigen::VectorXd& raw);

/// l x d matrix of normalized feature values at labeled pixels. Columns are
/// paired 1:1 with descriptors; per-column training statistics are retained
/// so the model can be applied to full images later.
class FeatureMatrix {
public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(Eigen::Index rows) : values_(rows, 0) {}

  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }

  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<FeatureDescriptor>& descriptors() const { return descriptors_; }
  const std::vector<double>& column_means() const { return means_; }
  const std::vector<double>& column_norms() const { return norms_; }

  bool contains(const FeatureDescriptor& desc) const { return index_.count(desc) > 0; }

  /// Appends one normalized column. Throws on duplicate descriptor or
  /// length mismatch.
  void append(const NormalizedColumn& column, const FeatureDescriptor& desc);

  /// Removes the given column indices (used when pruning zero weight rows).
  void remove_columns(const std::vector<Eigen::Index>& indices);

private:
  Eigen::MatrixXd values_;
  std::vector<FeatureDescriptor> descriptors_;
  std::vector<double> means_;
  std::vector<double> norms_;
  std::unordered_map<FeatureDescriptor, Eigen::Index, DescriptorHash> index_;
};

} // namespace aset
