#include "aset/raster.hpp"

#include <cmath>

namespace aset {

bool Band::all_finite() const {
  for (float v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string to_string(BandOrigin origin) {
  switch (origin) {
    case BandOrigin::spectral: return "spectral";
    case BandOrigin::auxiliary: return "auxiliary";
    case BandOrigin::derived: return "derived";
  }
  return "spectral";
}

BandOrigin band_origin_from_string(const std::string& s) {
  if (s == "spectral") return BandOrigin::spectral;
  if (s == "auxiliary") return BandOrigin::auxiliary;
  if (s == "derived") return BandOrigin::derived;
  throw invariant_error("unknown band origin: " + s);
}

ImageCube::ImageCube(int height, int width) : height_(height), width_(width) {
  if (height <= 0 || width <= 0) throw invariant_error("cube dimensions must be positive");
}

int ImageCube::add_band(Band band, BandOrigin origin, int depth) {
  if (band.height != height_ || band.width != width_)
    throw invariant_error("band shape does not match cube");
  if (!band.all_finite()) throw invariant_error("band contains non-finite values");
  if (depth < 0) throw invariant_error("band depth must be non-negative");
  if (origin != BandOrigin::derived && depth != 0)
    throw invariant_error("spectral/auxiliary bands must have depth 0");
  const int id = band_count();
  bands_.push_back(std::move(band));
  meta_.push_back(BandMeta{id, origin, depth});
  return id;
}

const Band& ImageCube::band(int id) const {
  if (!has_band(id)) throw invariant_error("unknown band id " + std::to_string(id));
  return bands_[static_cast<std::size_t>(id)];
}

const BandMeta& ImageCube::meta(int id) const {
  if (!has_band(id)) throw invariant_error("unknown band id " + std::to_string(id));
  return meta_[static_cast<std::size_t>(id)];
}

} // namespace aset
