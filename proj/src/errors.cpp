#include "pellucas/errors.hpp"

#include "pellucas/format.hpp"

namespace pellucas {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexCapExceeded: return "IndexCapExceeded";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::DidNotConverge: return "DidNotConverge";
    case ErrorKind::InvalidRegion: return "InvalidRegion";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
  }
  return "Unknown";
}

const char* to_string(Side side) noexcept {
  switch (side) {
    case Side::None: return "none";
    case Side::Lhs: return "lhs";
    case Side::Rhs: return "rhs";
  }
  return "none";
}

namespace {

std::string side_suffix(Side side) {
  return side == Side::None ? std::string{}
                            : std::string(" (") + to_string(side) + " side)";
}

}  // namespace

IndexCapExceeded::IndexCapExceeded(std::int64_t index, std::int64_t cap)
    : Error(ErrorKind::IndexCapExceeded,
            "IndexCapExceeded: |" + std::to_string(index) + "| exceeds cap " +
                std::to_string(cap)),
      index_(index) {}

InvalidRange::InvalidRange(std::int64_t lo, std::int64_t hi)
    : Error(ErrorKind::InvalidRange, "InvalidRange: lo=" + std::to_string(lo) +
                                         " > hi=" + std::to_string(hi)) {}

DegreeCapExceeded::DegreeCapExceeded(std::int64_t degree, std::int64_t cap)
    : Error(ErrorKind::DegreeCapExceeded,
            "DegreeCapExceeded: denominator degree " + std::to_string(degree) +
                " exceeds cap " + std::to_string(cap)) {}

PoleProximity::PoleProximity(std::int64_t index, double distance, Side side)
    : Error(ErrorKind::PoleProximity,
            "PoleProximity: term j=" + std::to_string(index) +
                " has scaled denominator " + format_double(distance) +
                side_suffix(side)),
      index_(index),
      distance_(distance),
      side_(side) {}

DidNotConverge::DidNotConverge(std::int64_t half_width, double tail_bound,
                               Side side)
    : Error(ErrorKind::DidNotConverge,
            "DidNotConverge: tail bound " + format_double(tail_bound) +
                " at half-width " + std::to_string(half_width) +
                side_suffix(side)),
      half_width_(half_width),
      tail_bound_(tail_bound),
      side_(side) {}

InvalidRegion::InvalidRegion(const std::string& detail)
    : Error(ErrorKind::InvalidRegion, "InvalidRegion: " + detail) {}

ZeroArgument::ZeroArgument(const std::string& equation)
    : Error(ErrorKind::ZeroArgument,
            "ZeroArgument: " + equation + " is undefined at z = 0") {}

EmptyGrid::EmptyGrid(std::int64_t skipped)
    : Error(ErrorKind::EmptyGrid, "EmptyGrid: all " + std::to_string(skipped) +
                                      " points were skipped") {}

}  // namespace pellucas
