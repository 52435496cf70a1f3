#pragma once

#include <vector>

#include "aset/errors.hpp"

namespace aset {

struct PixelIndex {
  int row = 0;
  int col = 0;
  bool operator==(const PixelIndex&) const = default;
};

/// Labeled pixel set. Labels are class ids in 1..num_classes.
struct LabeledSamples {
  std::vector<PixelIndex> pixels;
  std::vector<int> labels;
  int num_classes = 0;

  std::size_t size() const { return pixels.size(); }

  /// Checks list lengths, label range and (optionally) that every class
  /// in 1..num_classes is present.
  void validate(bool require_all_classes) const {
    if (pixels.size() != labels.size())
      throw invariant_error("pixel and label lists differ in length");
    if (num_classes < 1) throw invariant_error("num_classes must be >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(num_classes), false);
    for (int y : labels) {
      if (y < 1 || y > num_classes)
        throw invariant_error("label outside 1..C");
      seen[static_cast<std::size_t>(y - 1)] = true;
    }
    if (require_all_classes) {
      for (int c = 0; c < num_classes; ++c)
        if (!seen[static_cast<std::size_t>(c)])
          throw invariant_error("class " + std::to_string(c + 1) + " missing from samples");
    }
  }
};

} // namespace aset
