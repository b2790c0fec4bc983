#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fpgroups {

/// Permutation of {1..d}, stored in one-line notation. All public positions
/// are 1-based, matching the convention [d] = {1, ..., d} used throughout.
class Permutation {
 public:
  Permutation() = default;

  /// One-line notation: image[l-1] is the image of l. Throws
  /// std::invalid_argument if the entries are not a bijection on {1..d}.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t d);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t l) const { return image_[l - 1]; }

  Permutation inverse() const;
  bool is_identity() const;

  const std::vector<std::size_t>& one_line() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

  /// "[3,1,2,4]"
  std::string to_string() const;

 private:
  std::vector<std::size_t> image_;
};

}  // namespace fpgroups
