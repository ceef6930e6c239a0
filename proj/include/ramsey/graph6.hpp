#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

// Malformed graph6 input; `position` is the offending byte offset.
struct Graph6Error : std::runtime_error {
  std::size_t position;
  Graph6Error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

// Standard graph6 encoding, single-byte order form (n <= 62).
std::string g6_encode(const Graph& g);
Graph g6_decode(std::string_view text);

}  // namespace ramsey
