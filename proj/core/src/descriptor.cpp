#include "aset/descriptor.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <utility>
#include <vector>

#include "aset/errors.hpp"

namespace aset {

namespace {

struct KindName {
  FilterKind kind;
  const char* name;
};

constexpr std::array<KindName, 19> kKinds = {{
    {FilterKind::band, "band"},
    {FilterKind::opening, "opening"},
    {FilterKind::closing, "closing"},
    {FilterKind::tophat_open, "tophat_open"},
    {FilterKind::tophat_close, "tophat_close"},
    {FilterKind::open_rec, "open_rec"},
    {FilterKind::close_rec, "close_rec"},
    {FilterKind::open_rec_tophat, "open_rec_tophat"},
    {FilterKind::close_rec_tophat, "close_rec_tophat"},
    {FilterKind::avg, "avg"},
    {FilterKind::entropy, "entropy"},
    {FilterKind::stddev, "stddev"},
    {FilterKind::range, "range"},
    {FilterKind::attr_area, "attr_area"},
    {FilterKind::attr_diag, "attr_diag"},
    {FilterKind::ratio, "ratio"},
    {FilterKind::norm_ratio, "norm_ratio"},
    {FilterKind::sum, "sum"},
    {FilterKind::product, "product"},
}};

const char* se_shape_name(SeShape shape) {
  switch (shape) {
    case SeShape::disk: return "disk";
    case SeShape::diamond: return "diamond";
    case SeShape::square: return "square";
    case SeShape::line: return "line";
  }
  return "disk";
}

SeShape se_shape_from_string(std::string_view name) {
  if (name == "disk") return SeShape::disk;
  if (name == "diamond") return SeShape::diamond;
  if (name == "square") return SeShape::square;
  if (name == "line") return SeShape::line;
  throw invariant_error("unknown structuring element shape: " + std::string(name));
}

// %.17g round-trips IEEE doubles exactly.
std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int default_depth(FilterKind kind) { return kind == FilterKind::band ? 0 : 1; }

} // namespace

bool is_morphological(FilterKind kind) {
  switch (kind) {
    case FilterKind::opening:
    case FilterKind::closing:
    case FilterKind::tophat_open:
    case FilterKind::tophat_close:
    case FilterKind::open_rec:
    case FilterKind::close_rec:
    case FilterKind::open_rec_tophat:
    case FilterKind::close_rec_tophat:
      return true;
    default:
      return false;
  }
}

bool is_texture(FilterKind kind) {
  return kind == FilterKind::avg || kind == FilterKind::entropy ||
         kind == FilterKind::stddev || kind == FilterKind::range;
}

bool is_attribute(FilterKind kind) {
  return kind == FilterKind::attr_area || kind == FilterKind::attr_diag;
}

bool is_combination(FilterKind kind) {
  return kind == FilterKind::ratio || kind == FilterKind::norm_ratio ||
         kind == FilterKind::sum || kind == FilterKind::product;
}

std::string to_string(FilterKind kind) {
  for (const auto& kn : kKinds)
    if (kn.kind == kind) return kn.name;
  throw invariant_error("unknown filter kind");
}

FilterKind filter_kind_from_string(std::string_view name) {
  for (const auto& kn : kKinds)
    if (name == kn.name) return kn.kind;
  throw invariant_error("unknown filter kind: " + std::string(name));
}

void FeatureDescriptor::validate() const {
  if (input_a < 0) throw invariant_error("descriptor input_a is unset");
  if (depth < 0) throw invariant_error("descriptor depth must be non-negative");
  const bool want_se = is_morphological(kind);
  const bool want_window = is_texture(kind);
  const bool want_threshold = is_attribute(kind);
  const bool want_b = is_combination(kind);
  if (se.has_value() != want_se)
    throw invariant_error("descriptor " + aset::to_string(kind) +
                          (want_se ? " requires" : " must not carry") + " a structuring element");
  if (window.has_value() != want_window)
    throw invariant_error("descriptor " + aset::to_string(kind) +
                          (want_window ? " requires" : " must not carry") + " a window");
  if (threshold.has_value() != want_threshold)
    throw invariant_error("descriptor " + aset::to_string(kind) +
                          (want_threshold ? " requires" : " must not carry") + " a threshold");
  if (input_b.has_value() != want_b)
    throw invariant_error("descriptor " + aset::to_string(kind) +
                          (want_b ? " requires" : " must not carry") + " a second input");
  if (se) {
    if (se->size < 3 || se->size % 2 == 0)
      throw invariant_error("structuring element size must be odd and >= 3");
    if (se->shape != SeShape::line && se->angle != 0.0)
      throw invariant_error("non-line structuring elements must have angle 0");
    if (se->shape == SeShape::line && (se->angle < -M_PI_2 || se->angle > M_PI_2))
      throw invariant_error("line angle must lie in [-pi/2, pi/2]");
  }
  if (window && (*window < 3 || *window % 2 == 0))
    throw invariant_error("texture window must be odd and >= 3");
  if (threshold && *threshold < 1)
    throw invariant_error("attribute threshold must be >= 1");
}

std::string to_string(const FeatureDescriptor& desc) {
  std::string out = to_string(desc.kind);
  out += '(';
  if (is_combination(desc.kind)) {
    out += "a=" + std::to_string(desc.input_a);
    out += ", b=" + std::to_string(desc.input_b.value_or(-1));
  } else if (desc.kind == FilterKind::band) {
    out += "id=" + std::to_string(desc.input_a);
  } else {
    out += "band=" + std::to_string(desc.input_a);
    if (desc.se) {
      out += ", se=";
      out += se_shape_name(desc.se->shape);
      out += ", size=" + std::to_string(desc.se->size);
      if (desc.se->shape == SeShape::line) out += ", angle=" + format_double(desc.se->angle);
    }
    if (desc.window) out += ", window=" + std::to_string(*desc.window);
    if (desc.threshold) out += ", threshold=" + std::to_string(*desc.threshold);
  }
  if (desc.depth != default_depth(desc.kind)) out += ", depth=" + std::to_string(desc.depth);
  out += ')';
  return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> split_args(std::string_view body,
                                                            std::string_view full) {
  std::vector<std::pair<std::string, std::string>> args;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view item = body.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 >= item.size())
      throw invariant_error("malformed descriptor argument in: " + std::string(full));
    args.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    pos = end + 1;
  }
  return args;
}

int parse_int(const std::string& s, std::string_view full) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw invariant_error("malformed integer in descriptor: " + std::string(full));
  return static_cast<int>(v);
}

double parse_double(const std::string& s, std::string_view full) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw invariant_error("malformed number in descriptor: " + std::string(full));
  return v;
}

} // namespace

FeatureDescriptor parse_descriptor(std::string_view text) {
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw invariant_error("malformed descriptor: " + std::string(text));
  FeatureDescriptor desc;
  desc.kind = filter_kind_from_string(text.substr(0, open));
  desc.depth = default_depth(desc.kind);

  const auto args = split_args(text.substr(open + 1, text.size() - open - 2), text);
  std::optional<SeShape> shape;
  std::optional<int> se_size;
  std::optional<double> se_angle;
  for (const auto& [key, value] : args) {
    if (key == "band" || key == "id" || key == "a") {
      desc.input_a = parse_int(value, text);
    } else if (key == "b") {
      desc.input_b = parse_int(value, text);
    } else if (key == "se") {
      shape = se_shape_from_string(value);
    } else if (key == "size") {
      se_size = parse_int(value, text);
    } else if (key == "angle") {
      se_angle = parse_double(value, text);
    } else if (key == "window") {
      desc.window = parse_int(value, text);
    } else if (key == "threshold") {
      desc.threshold = parse_int(value, text);
    } else if (key == "depth") {
      desc.depth = parse_int(value, text);
    } else {
      throw invariant_error("unknown descriptor argument '" + key + "' in: " + std::string(text));
    }
  }
  if (shape || se_size) {
    if (!shape || !se_size)
      throw invariant_error("incomplete structuring element in: " + std::string(text));
    StructuringElement se;
    se.shape = *shape;
    se.size = *se_size;
    se.angle = se_angle.value_or(0.0);
    desc.se = se;
  } else if (se_angle) {
    throw invariant_error("angle without structuring element in: " + std::string(text));
  }
  desc.validate();
  return desc;
}

std::size_t hash_value(const FeatureDescriptor& desc) {
  std::size_t h = std::hash<int>{}(static_cast<int>(desc.kind));
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<int>{}(desc.input_a));
  mix(std::hash<int>{}(desc.input_b.value_or(-1)));
  if (desc.se) {
    mix(std::hash<int>{}(static_cast<int>(desc.se->shape)));
    mix(std::hash<int>{}(desc.se->size));
    mix(std::hash<double>{}(desc.se->angle));
  }
  mix(std::hash<int>{}(desc.window.value_or(0)));
  mix(std::hash<int>{}(desc.threshold.value_or(0)));
  mix(std::hash<int>{}(desc.depth));
  return h;
}

} // namespace aset
