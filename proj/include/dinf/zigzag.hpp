#ifndef DINF_ZIGZAG_HPP
#define DINF_ZIGZAG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/order.hpp"

namespace dinf {

/// A finite sequence of points with consecutive entries ⊑-comparable; the
/// combinatorial stand-in for a path in a finite space.  Consecutive
/// repeats are collapsed.
class Zigzag {
 public:
  static Zigzag make(const Poset& space, const std::vector<std::size_t>& points) {
    if (points.empty()) throw FormatError("a zigzag needs at least one point");
    Zigzag z;
    for (auto p : points) {
      if (p >= space.size()) throw UnknownElement(std::to_string(p));
      if (!z.points_.empty() && z.points_.back() == p) continue;
      if (!z.points_.empty() && !space.comparable(z.points_.back(), p))
        throw FormatError("zigzag steps between incomparable points " +
                          space.label(z.points_.back()) + " and " + space.label(p));
      z.points_.push_back(p);
    }
    return z;
  }

  static Zigzag make(const Poset& space, const std::vector<std::string>& labels) {
    std::vector<std::size_t> points;
    for (const auto& l : labels) points.push_back(space.index_of(l));
    return make(space, points);
  }

  const std::vector<std::size_t>& points() const { return points_; }
  std::size_t front() const { return points_.front(); }
  std::size_t back() const { return points_.back(); }

  std::vector<std::string> labels(const Poset& space) const {
    std::vector<std::string> out;
    for (auto p : points_) out.push_back(space.label(p));
    return out;
  }

  friend bool operator==(const Zigzag&, const Zigzag&) = default;

 private:
  std::vector<std::size_t> points_;
};

inline Zigzag reversed(const Zigzag& z, const Poset& space) {
  auto pts = z.points();
  return Zigzag::make(space, std::vector<std::size_t>(pts.rbegin(), pts.rend()));
}

}  // namespace dinf

#endif
