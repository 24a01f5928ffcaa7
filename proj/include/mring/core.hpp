#ifndef MRING_CORE_HPP
#define MRING_CORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mring {

inline constexpr const char* kVersion = "1.0.0";

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input shape (width mismatch, bad sizes).
struct input_shape_error : error {
  using error::error;
};
// A subset that must lie in the sigma-algebra does not.
struct membership_error : error {
  using error::error;
};
// Values are not constant on some atom.
struct measurability_error : error {
  using error::error;
};
struct non_unit_error : error {
  using error::error;
};
// Enumeration exceeded its subfamily cap.
struct resource_error : error {
  using error::error;
};
// Document parsing / validation failure.
struct validation_error : error {
  using error::error;
};
struct no_extension_error : error {
  using error::error;
};

/// Finite ground set: a point count plus distinct labels.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw input_shape_error("ground set must have at least one point");
    if (labels_.size() > 64) throw input_shape_error("ground set limited to 64 points");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw input_shape_error("duplicate point label: " + labels_[i]);
  }

  static GroundSet indexed(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return GroundSet(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<int>(i);
    throw validation_error("unknown point label: " + label);
  }

  bool operator==(const GroundSet& o) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Subset of a ground set as a fixed-width bit vector.
class Subset {
 public:
  Subset(int width, std::uint64_t bits = 0) : bits_(bits), width_(width) {
    if (width < 1 || width > 64) throw input_shape_error("subset width out of range");
    if (width < 64 && (bits >> width) != 0)
      throw input_shape_error("subset bits exceed width");
  }

  static Subset empty(int width) { return Subset(width, 0); }
  static Subset full(int width) {
    return Subset(width, width == 64 ? ~0ull : (1ull << width) - 1);
  }

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool test(int i) const { return (bits_ >> i) & 1; }
  int popcount() const { return std::popcount(bits_); }
  bool none() const { return bits_ == 0; }
  bool any() const { return bits_ != 0; }
  bool is_full() const { return bits_ == full(width_).bits_; }

  Subset with(int i) const { return Subset(width_, bits_ | (1ull << i)); }
  Subset complement() const { return Subset(width_, ~bits_ & full(width_).bits_); }

  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check_width(b);
    return Subset(a.width_, a.bits_ | b.bits_);
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check_width(b);
    return Subset(a.width_, a.bits_ & b.bits_);
  }
  /// Set difference a \ b.
  friend Subset operator-(const Subset& a, const Subset& b) {
    a.check_width(b);
    return Subset(a.width_, a.bits_ & ~b.bits_);
  }

  bool subset_of(const Subset& o) const {
    check_width(o);
    return (bits_ & ~o.bits_) == 0;
  }
  bool disjoint(const Subset& o) const {
    check_width(o);
    return (bits_ & o.bits_) == 0;
  }

  /// Lowest-indexed member, or -1 when empty.
  int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < width_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  bool operator==(const Subset& o) const = default;

 private:
  void check_width(const Subset& o) const {
    if (width_ != o.width_) throw input_shape_error("subset width mismatch");
  }
  std::uint64_t bits_;
  int width_;
};

/// Canonical family order: by cardinality, then by bit pattern.
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
  return a.bits() < b.bits();
}

inline void canonical_sort(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

inline std::string render_subset(const Subset& s, const GroundSet& g) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace mring

#endif
