#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kw {

enum class Errc {
  InvalidSymbol,
  NotCloseMatched,
  NotInKbar,
  NotInVertexSet,
  NotQuadrantWord,
  NotSphereWord,
  NotInK00,
  NotDiskWord,
  NotEncodable,
  InvalidSplit,
  ArcOutOfRange,
  InvalidConfig,
  InvalidAnchor,
  InvalidMap,
  RejectionBudgetExceeded,
  InsufficientSupport,
  IoError,
};

const char* errcName(Errc c);

struct Error : std::runtime_error {
  Errc code;
  std::size_t position = 0;  // 1-based where meaningful, 0 otherwise

  Error(Errc c, const std::string& msg, std::size_t pos = 0)
      : std::runtime_error(msg), code(c), position(pos) {}
};

}  // namespace kw
