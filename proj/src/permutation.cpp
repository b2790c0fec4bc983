#include "fpgroups/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fpgroups {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v < 1 || v > image_.size() || seen[v - 1])
      throw std::invalid_argument("not a permutation of {1..d}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<std::size_t> image(d);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t l = 1; l <= image_.size(); ++l) inv[image_[l - 1] - 1] = l;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t l = 1; l <= image_.size(); ++l)
    if (image_[l - 1] != l) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (k) out << ',';
    out << image_[k];
  }
  out << ']';
  return out.str();
}

}  // namespace fpgroups
