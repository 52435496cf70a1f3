#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "aset/errors.hpp"

namespace aset {

/// Single-band raster, row-major float grid. Solver math is double; band
/// storage stays single precision.
struct Band {
  int height = 0;
  int width = 0;
  std::vector<float> values;

  Band() = default;
  Band(int h, int w, float fill = 0.0f)
      : height(h), width(w), values(static_cast<std::size_t>(h) * w, fill) {}

  std::size_t size() const { return values.size(); }

  float& at(int r, int c) { return values[static_cast<std::size_t>(r) * width + c]; }
  float at(int r, int c) const { return values[static_cast<std::size_t>(r) * width + c]; }

  /// Replicate-padded access: coordinates are clamped to the image.
  float at_clamped(int r, int c) const {
    r = std::clamp(r, 0, height - 1);
    c = std::clamp(c, 0, width - 1);
    return at(r, c);
  }

  bool same_shape(const Band& other) const {
    return height == other.height && width == other.width;
  }

  bool all_finite() const;
};

enum class BandOrigin { spectral, auxiliary, derived };

std::string to_string(BandOrigin origin);
BandOrigin band_origin_from_string(const std::string& s);

struct BandMeta {
  int id = 0;
  BandOrigin origin = BandOrigin::spectral;
  int depth = 0; // 0 for spectral/auxiliary inputs, >=1 for derived bands
};

/// H x W x B raster stack. Band ids are assigned sequentially on insertion
/// and stay stable for the lifetime of the cube. Immutable apart from
/// single-writer add_band.
class ImageCube {
public:
  ImageCube(int height, int width);

  int height() const { return height_; }
  int width() const { return width_; }
  int band_count() const { return static_cast<int>(bands_.size()); }

  /// Appends a band, validates shape and finiteness, returns its id.
  int add_band(Band band, BandOrigin origin, int depth = 0);

  bool has_band(int id) const { return id >= 0 && id < band_count(); }
  const Band& band(int id) const;
  const BandMeta& meta(int id) const;
  const std::vector<BandMeta>& metas() const { return meta_; }

private:
  int height_;
  int width_;
  std::vector<Band> bands_;
  std::vector<BandMeta> meta_;
};

} // namespace aset
