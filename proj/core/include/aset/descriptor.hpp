#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace aset {

enum class SeShape { disk, diamond, square, line };

/// Flat structuring element. `size` is the window diameter (disk, diamond,
/// square) or segment length (line) in pixels, odd and >= 3. `angle` is
/// meaningful for line elements only and is normalized to 0 otherwise so
/// descriptors stay value-comparable.
struct StructuringElement {
  SeShape shape = SeShape::disk;
  int size = 3;
  double angle = 0.0; // radians in [-pi/2, pi/2], line only

  bool operator==(const StructuringElement&) const = default;
};

enum class FilterKind {
  band, // identity on a stored band; used for the initial active set
  opening,
  closing,
  tophat_open,
  tophat_close,
  open_rec,
  close_rec,
  open_rec_tophat,
  close_rec_tophat,
  avg,
  entropy,
  stddev,
  range,
  attr_area,
  attr_diag,
  ratio,
  norm_ratio,
  sum,
  product,
};

bool is_morphological(FilterKind kind);
bool is_texture(FilterKind kind);
bool is_attribute(FilterKind kind);
bool is_combination(FilterKind kind);

std::string to_string(FilterKind kind);
FilterKind filter_kind_from_string(std::string_view name);

/// Recipe of one feature: filter kind, parameters, input band id(s) and
/// hierarchy depth. Equal fields mean the same feature.
struct FeatureDescriptor {
  FilterKind kind = FilterKind::band;
  int input_a = -1;
  std::optional<int> input_b;                 // combinations only
  std::optional<StructuringElement> se;       // morphological kinds only
  std::optional<int> window;                  // texture kinds only
  std::optional<int> threshold;               // attribute kinds only
  int depth = 0;

  bool operator==(const FeatureDescriptor&) const = default;

  /// Throws invariant_error unless exactly the parameters required by
  /// `kind` are present and valid.
  void validate() const;
};

/// Canonical one-line text form, e.g. `open_rec(band=17, se=disk, size=11)`
/// or `norm_ratio(a=4, b=9)`. Round-trips exactly through
/// parse_descriptor, including line angles and non-default depths.
std::string to_string(const FeatureDescriptor& desc);
FeatureDescriptor parse_descriptor(std::string_view text);

std::size_t hash_value(const FeatureDescriptor& desc);

struct DescriptorHash {
  std::size_t operator()(const FeatureDescriptor& d) const { return hash_value(d); }
};

} // namespace aset
