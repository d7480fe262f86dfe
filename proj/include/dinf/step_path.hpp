#ifndef DINF_STEP_PATH_HPP
#define DINF_STEP_PATH_HPP

// Exact piecewise-constant maps [0,1]ⁿ → finite Scott space.
//
// A path lives on a rectangular grid: along each axis the breakpoints
// 0 = q₀ < … < q_m = 1 give 2m+1 cells, indexed so that even indices are
// breakpoints and odd indices the open intervals between them.  A path is a
// value per product cell.  All arithmetic is over boost::rational.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "dinf/error.hpp"
#include "dinf/homotopy.hpp"
#include "dinf/order.hpp"
#include "dinf/zigzag.hpp"

namespace dinf {

using Rational = boost::rational<std::int64_t>;
using SpacePtr = std::shared_ptr<const ScottSpace>;

inline SpacePtr share(ScottSpace s) { return std::make_shared<const ScottSpace>(std::move(s)); }

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational parse_rational(const std::string& s) {
  std::istringstream in(s.find('/') == std::string::npos ? s + "/1" : s);
  Rational q;
  if (!(in >> q) || in.peek() != std::char_traits<char>::eof())
    throw FormatError("not a rational: '" + s + "'");
  return q;
}

namespace detail {

/// Doubled index of the cell containing t.
inline std::size_t locate(const std::vector<Rational>& breaks, const Rational& t) {
  if (t < breaks.front() || t > breaks.back()) throw FormatError("parameter outside [0,1]: " + to_string(t));
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (t == breaks[i]) return 2 * i;
    if (t < breaks[i]) return 2 * i - 1;
  }
  return 2 * (breaks.size() - 1);
}

/// A point inside the cell with the given doubled index.
inline Rational representative(const std::vector<Rational>& breaks, std::size_t j) {
  if (j % 2 == 0) return breaks[j / 2];
  return (breaks[j / 2] + breaks[j / 2 + 1]) / 2;
}

inline std::vector<Rational> merge(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Rational next = (j == b.size() || (i < a.size() && a[i] < b[j])) ? a[i] : b[j];
    if (i < a.size() && a[i] == next) ++i;
    if (j < b.size() && b[j] == next) ++j;
    out.push_back(next);
  }
  return out;
}

inline void check_breaks(const std::vector<Rational>& b) {
  if (b.size() < 2 || b.front() != Rational(0) || b.back() != Rational(1))
    throw MalformedPartition("breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (!(b[i] < b[i + 1])) throw MalformedPartition("breakpoints must be strictly increasing");
}

}  // namespace detail

template <std::size_t Dim>
class StepPath {
 public:
  using Cell = std::array<std::size_t, Dim>;
  using Point = std::array<Rational, Dim>;
  using Breaks = std::array<std::vector<Rational>, Dim>;

  /// `values` in row-major order over the doubled grid, axis 0 slowest.
  static StepPath make(SpacePtr space, Breaks breaks, std::vector<std::size_t> values) {
    if (!space) throw FormatError("path without a space");
    StepPath p;
    p.space_ = std::move(space);
    for (const auto& b : breaks) detail::check_breaks(b);
    p.breaks_ = std::move(breaks);
    if (values.size() != p.cell_count())
      throw MalformedPartition("expected " + std::to_string(p.cell_count()) + " cell values, got " +
                               std::to_string(values.size()));
    for (auto v : values)
      if (v >= p.space_->size()) throw UnknownElement(std::to_string(v));
    p.values_ = std::move(values);
    return p;
  }

  static StepPath constant(SpacePtr space, std::size_t value) {
    Breaks b;
    for (auto& axis : b) axis = {Rational(0), Rational(1)};
    std::size_t cells = 1;
    for (std::size_t a = 0; a < Dim; ++a) cells *= 3;
    return make(std::move(space), std::move(b), std::vector<std::size_t>(cells, value));
  }

  const ScottSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Breaks& breaks() const { return breaks_; }
  const std::vector<std::size_t>& values() const { return values_; }

  std::size_t extent(std::size_t axis) const { return 2 * breaks_[axis].size() - 1; }

  std::size_t cell_count() const {
    std::size_t n = 1;
    for (std::size_t a = 0; a < Dim; ++a) n *= extent(a);
    return n;
  }

  std::size_t flat(const Cell& c) const {
    std::size_t i = 0;
    for (std::size_t a = 0; a < Dim; ++a) i = i * extent(a) + c[a];
    return i;
  }

  Cell unflat(std::size_t i) const {
    Cell c{};
    for (std::size_t a = Dim; a-- > 0;) {
      c[a] = i % extent(a);
      i /= extent(a);
    }
    return c;
  }

  std::size_t at(const Cell& c) const { return values_[flat(c)]; }

  std::size_t operator()(const Point& t) const {
    Cell c{};
    for (std::size_t a = 0; a < Dim; ++a) c[a] = detail::locate(breaks_[a], t[a]);
    return at(c);
  }

  Point representative(const Cell& c) const {
    Point t{};
    for (std::size_t a = 0; a < Dim; ++a) t[a] = detail::representative(breaks_[a], c[a]);
    return t;
  }

  /// The same map over a finer grid; `finer` must contain every breakpoint.
  StepPath refined(const Breaks& finer) const {
    StepPath out;
    out.space_ = space_;
    out.breaks_ = finer;
    for (std::size_t a = 0; a < Dim; ++a)
      for (const auto& q : breaks_[a])
        if (!std::binary_search(finer[a].begin(), finer[a].end(), q))
          throw MalformedPartition("refinement drops breakpoint " + to_string(q));
    out.values_.resize(out.cell_count());
    for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] = (*this)(out.representative(out.unflat(i)));
    return out;
  }

  /// Restriction t_{axis} = (the cell with doubled index j).
  StepPath<Dim - 1> slice(std::size_t axis, std::size_t j) const requires(Dim >= 1) {
    typename StepPath<Dim - 1>::Breaks b;
    for (std::size_t a = 0, k = 0; a < Dim; ++a)
      if (a != axis) b[k++] = breaks_[a];
    std::vector<std::size_t> vals;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (unflat(i)[axis] == j) vals.push_back(values_[i]);
    return StepPath<Dim - 1>::make(space_, std::move(b), std::move(vals));
  }

  /// Face t_{axis} ∈ {0, 1}.
  StepPath<Dim - 1> face(std::size_t axis, bool one) const requires(Dim >= 1) {
    return slice(axis, one ? extent(axis) - 1 : 0);
  }

  friend bool operator==(const StepPath& p, const StepPath& q) {
    if (p.space_ != q.space_ && !(p.space_->poset() == q.space_->poset())) return false;
    if (p.breaks_ == q.breaks_) return p.values_ == q.values_;
    Breaks common;
    for (std::size_t a = 0; a < Dim; ++a) common[a] = detail::merge(p.breaks_[a], q.breaks_[a]);
    return p.refined(common).values_ == q.refined(common).values_;
  }

 private:
  template <std::size_t>
  friend class StepPath;

  SpacePtr space_;
  Breaks breaks_;
  std::vector<std::size_t> values_;
};

using StepPath1 = StepPath<1>;
using StepPath2 = StepPath<2>;

inline std::size_t point_value(const StepPath<0>& p) { return p.values().front(); }

// ---------------------------------------------------------------------------
// Continuity

template <std::size_t Dim>
struct ContinuityViolation {
  Mask open = 0;
  typename StepPath<Dim>::Point point;      // maps into the open
  typename StepPath<Dim>::Point neighbour;  // arbitrarily close to point, maps outside
};

template <std::size_t Dim>
struct ContinuityReport {
  bool continuous = true;
  std::optional<ContinuityViolation<Dim>> witness;
  explicit operator bool() const { return continuous; }
};

/// Preimage of every open is checked to be open in the cube: a union of
/// cells is open iff it contains, with every cell, every cell whose closure
/// meets it (its open star).
template <std::size_t Dim>
ContinuityReport<Dim> check_continuity(const StepPath<Dim>& p) {
  using Cell = typename StepPath<Dim>::Cell;
  const auto& opens = p.space().opens();
  for (std::size_t i = 0; i < p.cell_count(); ++i) {
    const Cell c = p.unflat(i);
    // enumerate the star of c
    std::vector<Cell> star{c};
    for (std::size_t a = 0; a < Dim; ++a) {
      if (c[a] % 2 == 1) continue;
      std::vector<Cell> more;
      for (const auto& s : star) {
        if (c[a] > 0) {
          auto t = s;
          t[a] = c[a] - 1;
          more.push_back(t);
        }
        if (c[a] + 1 < p.extent(a)) {
          auto t = s;
          t[a] = c[a] + 1;
          more.push_back(t);
        }
      }
      star.insert(star.end(), more.begin(), more.end());
    }
    for (auto a : opens) {
      if (!has(a, p.at(c))) continue;
      for (const auto& s : star)
        if (!has(a, p.at(s)))
          return {false, ContinuityViolation<Dim>{a, p.representative(c), p.representative(s)}};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Products, restriction, reversal

/// Concatenation along `axis` by halving: p on t ≤ 1/2, q on t ≥ 1/2.
template <std::size_t Dim>
StepPath<Dim> join(const StepPath<Dim>& p, const StepPath<Dim>& q, std::size_t axis) {
  if (!(p.space().poset() == q.space().poset())) throw FormatError("paths live in different spaces");
  const auto pf = p.face(axis, true), qf = q.face(axis, false);
  if (!(pf == qf))
    throw FaceMismatch("p[t" + std::to_string(axis + 1) + "=1] differs from q[t" + std::to_string(axis + 1) +
                       "=0]");
  typename StepPath<Dim>::Breaks pb = p.breaks(), qb = q.breaks(), out;
  for (std::size_t a = 0; a < Dim; ++a)
    if (a != axis) pb[a] = qb[a] = out[a] = detail::merge(p.breaks()[a], q.breaks()[a]);
  const auto pr = p.refined(pb), qr = q.refined(qb);
  const Rational half(1, 2);
  for (const auto& t : pb[axis]) out[axis].push_back(t * half);
  for (std::size_t i = 1; i < qb[axis].size(); ++i) out[axis].push_back((qb[axis][i] + 1) * half);

  const std::size_t split = pr.extent(axis) - 1;
  std::size_t cells = 1;
  for (std::size_t a = 0; a < Dim; ++a) cells *= 2 * out[a].size() - 1;
  std::vector<std::size_t> values(cells);
  auto shape = StepPath<Dim>::make(p.space_ptr(), out, std::vector<std::size_t>(cells, 0));
  for (std::size_t i = 0; i < cells; ++i) {
    auto c = shape.unflat(i);
    if (c[axis] <= split) {
      values[i] = pr.at(c);
    } else {
      c[axis] -= split;
      values[i] = qr.at(c);
    }
  }
  return StepPath<Dim>::make(p.space_ptr(), std::move(out), std::move(values));
}

/// 1-path concatenation p ∗₀ q.
inline StepPath1 concat(const StepPath1& p, const StepPath1& q) { return join(p, q, 0); }

/// p ∗ᵣ q for 2-paths: ∗₁ halves t₁, ∗₀ halves t₂.
inline StepPath2 product(const StepPath2& p, const StepPath2& q, int r) {
  if (r != 0 && r != 1) throw FormatError("2-paths compose with r in {0,1}");
  return join(p, q, r == 1 ? 0 : 1);
}

/// p[t_coordinate = value]; coordinates are numbered from 1.
template <std::size_t Dim>
StepPath<Dim - 1> restrict(const StepPath<Dim>& p, std::size_t coordinate, const Rational& value) {
  if (coordinate < 1 || coordinate > Dim) throw FormatError("no coordinate t" + std::to_string(coordinate));
  return p.slice(coordinate - 1, detail::locate(p.breaks()[coordinate - 1], value));
}

/// t_axis ↦ 1 − t_axis.
template <std::size_t Dim>
StepPath<Dim> reverse(const StepPath<Dim>& p, std::size_t axis = 0) {
  auto b = p.breaks();
  std::vector<Rational> rb;
  for (auto it = b[axis].rbegin(); it != b[axis].rend(); ++it) rb.push_back(1 - *it);
  b[axis] = rb;
  std::vector<std::size_t> values(p.values().size());
  auto shape = StepPath<Dim>::make(p.space_ptr(), b, values);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto c = shape.unflat(i);
    c[axis] = p.extent(axis) - 1 - c[axis];
    values[i] = p.at(c);
  }
  return StepPath<Dim>::make(p.space_ptr(), std::move(b), std::move(values));
}

// ---------------------------------------------------------------------------
// Zigzags, base points, parallelism, homotopy

inline Zigzag to_zigzag(const StepPath1& p) {
  return Zigzag::make(p.space().poset(), p.values());
}

/// (a, b) when the faces t_n = 0 and t_n = 1 are constant.
template <std::size_t Dim>
std::optional<std::pair<std::size_t, std::size_t>> base_points(const StepPath<Dim>& p) {
  auto lo = p.face(Dim - 1, false), hi = p.face(Dim - 1, true);
  auto constant = [](const auto& f) -> std::optional<std::size_t> {
    for (auto v : f.values())
      if (v != f.values().front()) return std::nullopt;
    return f.values().front();
  };
  auto a = constant(lo), b = constant(hi);
  if (!a || !b) return std::nullopt;
  return std::pair{*a, *b};
}

/// Same base points and, for r = 1 … n−1, equal faces t₁ = … = t_r = 0 and
/// t₁ = … = t_r = 1.
template <std::size_t Dim>
bool parallel(const StepPath<Dim>& p, const StepPath<Dim>& q) {
  if (!(p.space().poset() == q.space().poset())) return false;
  auto bp = base_points(p), bq = base_points(q);
  if (!bp || !bq || *bp != *bq) return false;
  if constexpr (Dim == 2) {
    if (!(p.face(0, false) == q.face(0, false))) return false;
    if (!(p.face(0, true) == q.face(0, true))) return false;
  }
  return true;
}

inline Verdict homotopic(const StepPath1& p, const StepPath1& q, const FundamentalGroup& g) {
  return zigzag_homotopic(to_zigzag(p), to_zigzag(q), g);
}

/// 2-paths with the same base points are compared through their t₁ faces;
/// homotopic faces settle the question when the space carries the
/// contractibility certificate for π₂, and remain unresolved otherwise.
inline Verdict homotopic(const StepPath2& p, const StepPath2& q, const FundamentalGroup& g) {
  auto bp = base_points(p), bq = base_points(q);
  if (!bp || !bq) throw EndpointMismatch("2-path is not based at points");
  if (*bp != *bq) throw EndpointMismatch("2-paths are based at different points");
  for (bool one : {false, true}) {
    auto v = homotopic(p.face(0, one), q.face(0, one), g);
    if (v != Verdict::Homotopic) return v;
  }
  auto cert = pi_n_certificate(p.space().poset(), 2);
  return cert.kind == HigherCertificate::TrivialByContractibility ? Verdict::Homotopic : Verdict::Unresolved;
}

// ---------------------------------------------------------------------------
// SVG

namespace detail {

inline std::string colour(std::size_t v) {
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  return palette[v % 10];
}

inline double real(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace detail

/// The unit square (t₁ to the right, t₂ upward) with every cell painted and
/// labelled by its value.  1-paths are drawn as a single track.
template <std::size_t Dim>
std::string to_svg(const StepPath<Dim>& p, const std::string& title = "") {
  static_assert(Dim == 1 || Dim == 2);
  const double side = 320, pad = 40;
  const double height = Dim == 2 ? side : 40;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 * pad << "\" height=\""
    << height + 2 * pad << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  if (!title.empty()) s << "  <text x=\"" << pad << "\" y=\"20\">" << title << "</text>\n";
  const auto& poset = p.space().poset();
  auto X = [&](const Rational& t) { return pad + detail::real(t) * side; };
  auto Y = [&](const Rational& t) { return pad + height - detail::real(t) * height; };
  auto range = [&](std::size_t axis, std::size_t j) {
    const auto& b = p.breaks()[axis];
    return j % 2 == 0 ? std::pair{b[j / 2], b[j / 2]} : std::pair{b[j / 2], b[j / 2 + 1]};
  };
  // draw open cells first, then edges, then vertices
  for (int pass = Dim; pass >= 0; --pass) {
    for (std::size_t i = 0; i < p.cell_count(); ++i) {
      auto c = p.unflat(i);
      int dim = 0;
      for (auto j : c) dim += static_cast<int>(j % 2);
      if (dim != pass) continue;
      auto v = p.at(c);
      auto [x0, x1] = range(0, c[0]);
      Rational y0(0), y1(1);
      if constexpr (Dim == 2) std::tie(y0, y1) = range(1, c[1]);
      const double ax = X(x0), bx = X(x1), ay = Dim == 2 ? Y(y1) : Y(Rational(1, 2)),
                   by = Dim == 2 ? Y(y0) : Y(Rational(1, 2));
      const auto col = detail::colour(v);
      if (pass == 2) {
        s << "  <rect x=\"" << ax << "\" y=\"" << ay << "\" width=\"" << bx - ax << "\" height=\"" << by - ay
          << "\" fill=\"" << col << "\" fill-opacity=\"0.35\"/>\n";
        s << "  <text x=\"" << (ax + bx) / 2 << "\" y=\"" << (ay + by) / 2 << "\" text-anchor=\"middle\">"
          << poset.label(v) << "</text>\n";
      } else if (pass == 1) {
        s << "  <line x1=\"" << ax << "\" y1=\"" << (Dim == 2 ? by : ay) << "\" x2=\"" << bx << "\" y2=\"" << ay
          << "\" stroke=\"" << col << "\" stroke-width=\"4\"><title>" << poset.label(v) << "</title></line>\n";
        if constexpr (Dim == 1)
          s << "  <text x=\"" << (ax + bx) / 2 << "\" y=\"" << ay - 8 << "\" text-anchor=\"middle\">"
            << poset.label(v) << "</text>\n";
      } else {
        s << "  <circle cx=\"" << ax << "\" cy=\"" << by << "\" r=\"5\" fill=\"" << col << "\" stroke=\"black\"><title>"
          << poset.label(v) << "</title></circle>\n";
      }
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace dinf

#endif
