#ifndef DINF_ERROR_HPP
#define DINF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dinf {

/// Base of every error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::string x, std::string y)
      : Error("AntisymmetryViolation",
              "order is not antisymmetric: " + x + " <= " + y + " and " + y + " <= " + x),
        x(std::move(x)),
        y(std::move(y)) {}
  std::string x, y;
};

class TransitivityViolation : public Error {
 public:
  TransitivityViolation(std::string x, std::string y, std::string z)
      : Error("TransitivityViolation", "order is not transitive: " + x + " <= " + y + " <= " +
                                           z + " but not " + x + " <= " + z),
        x(std::move(x)),
        y(std::move(y)),
        z(std::move(z)) {}
  std::string x, y, z;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(std::string label)
      : Error("UnknownElement", "unknown element '" + label + "'"), label(std::move(label)) {}
  std::string label;
};

class DuplicateElement : public Error {
 public:
  explicit DuplicateElement(std::string label)
      : Error("DuplicateElement", "duplicate element label '" + label + "'"),
        label(std::move(label)) {}
  std::string label;
};

class NotACpo : public Error {
 public:
  explicit NotACpo(const std::string& why) : Error("NotACpo", why) {}
};

class NotMonotone : public Error {
 public:
  NotMonotone(std::size_t x, std::size_t y)
      : Error("NotMonotone", "table is not monotone at pair (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ")"),
        x(x),
        y(y) {}
  std::size_t x, y;
};

class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::size_t count, const std::string& where)
      : Error("SizeLimitExceeded",
              where + ": enumeration exceeded the size limit (" + std::to_string(count) + ")"),
        count(count) {}
  std::size_t count;
};

class LevelOutOfRange : public Error {
 public:
  explicit LevelOutOfRange(const std::string& what) : Error("LevelOutOfRange", what) {}
};

class NonMonotoneRealization : public Error {
 public:
  NonMonotoneRealization()
      : Error("NonMonotoneRealization",
              "semantic map is not realized by a monotone top-level function") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("SyntaxError", "syntax error at " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

class InvalidStep : public Error {
 public:
  InvalidStep(std::size_t index, std::string from, std::string to)
      : Error("InvalidStep", "invalid conversion step " + std::to_string(index) + ": " + from +
                                 "  ~>  " + to),
        index(index),
        from(std::move(from)),
        to(std::move(to)) {}
  std::size_t index;
  std::string from, to;
};

class EndpointMismatch : public Error {
 public:
  explicit EndpointMismatch(const std::string& what) : Error("EndpointMismatch", what) {}
};

class EquationMismatch : public Error {
 public:
  explicit EquationMismatch(const std::string& what) : Error("EquationMismatch", what) {}
};

class MalformedPartition : public Error {
 public:
  explicit MalformedPartition(const std::string& what) : Error("MalformedPartition", what) {}
};

class FaceMismatch : public Error {
 public:
  explicit FaceMismatch(const std::string& what) : Error("FaceMismatch", what) {}
};

class NotConnected : public Error {
 public:
  explicit NotConnected(std::size_t components)
      : Error("NotConnected",
              "space has " + std::to_string(components) + " path components"),
        components(components) {}
  std::size_t components;
};

class IncompleteTable : public Error {
 public:
  explicit IncompleteTable(const std::string& what) : Error("IncompleteTable", what) {}
};

class NonDiagonalPair : public Error {
 public:
  explicit NonDiagonalPair(const std::string& what) : Error("NonDiagonalPair", what) {}
};

class TowerMismatch : public Error {
 public:
  TowerMismatch() : Error("TowerMismatch", "cell sequences belong to a different tower") {}
};

class InterpretationMismatch : public Error {
 public:
  InterpretationMismatch(std::size_t index, const std::string& term)
      : Error("InterpretationMismatch",
              "chain term " + std::to_string(index) + " (" + term +
                  ") does not share the level-0 interpretation of the first term"),
        index(index) {}
  std::size_t index;
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("FormatError", what) {}
};

}  // namespace dinf

#endif
