#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pellucas {

enum class ErrorKind {
  IndexCapExceeded,
  InvalidRange,
  DegreeCapExceeded,
  PoleProximity,
  DidNotConverge,
  InvalidRegion,
  ZeroArgument,
  EmptyGrid,
};

const char* to_string(ErrorKind kind) noexcept;

/// Which side of a functional equation an evaluation error came from.
enum class Side { None, Lhs, Rhs };

const char* to_string(Side side) noexcept;

/// Base class for every domain error raised by the library. Precondition
/// violations on arguments (bad weights, non-finite points) are reported with
/// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class IndexCapExceeded : public Error {
 public:
  IndexCapExceeded(std::int64_t index, std::int64_t cap);
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

class InvalidRange : public Error {
 public:
  InvalidRange(std::int64_t lo, std::int64_t hi);
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::int64_t degree, std::int64_t cap);
};

class PoleProximity : public Error {
 public:
  PoleProximity(std::int64_t index, double distance, Side side = Side::None);
  std::int64_t index() const noexcept { return index_; }
  double distance() const noexcept { return distance_; }
  Side side() const noexcept { return side_; }
  PoleProximity with_side(Side side) const {
    return PoleProximity(index_, distance_, side);
  }

 private:
  std::int64_t index_;
  double distance_;
  Side side_;
};

class DidNotConverge : public Error {
 public:
  DidNotConverge(std::int64_t half_width, double tail_bound,
                 Side side = Side::None);
  std::int64_t half_width() const noexcept { return half_width_; }
  double tail_bound() const noexcept { return tail_bound_; }
  Side side() const noexcept { return side_; }
  DidNotConverge with_side(Side side) const {
    return DidNotConverge(half_width_, tail_bound_, side);
  }

 private:
  std::int64_t half_width_;
  double tail_bound_;
  Side side_;
};

class InvalidRegion : public Error {
 public:
  explicit InvalidRegion(const std::string& detail);
};

class ZeroArgument : public Error {
 public:
  explicit ZeroArgument(const std::string& equation);
};

class EmptyGrid : public Error {
 public:
  explicit EmptyGrid(std::int64_t skipped);
};

}  // namespace pellucas
