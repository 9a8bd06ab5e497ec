#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace modrep {

/// A permutation of the points 0..degree-1. Products act on the left:
/// (g * h)(x) = g(h(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(unsigned degree);
  /// Cycle notation on points 1..degree, e.g. "(1 2 3)(4 5)" or "()".
  static Perm parse(std::string_view text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  std::uint16_t operator()(unsigned x) const { return img_[x]; }
  const std::vector<std::uint16_t>& images() const { return img_; }
  bool is_identity() const;

  Perm inverse() const;
  friend Perm operator*(const Perm& g, const Perm& h);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

  /// Cycle notation on points 1..degree, fixed points omitted.
  std::string to_string() const;

 private:
  std::vector<std::uint16_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace modrep
