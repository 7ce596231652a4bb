#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trussdiv {

// Dense internal vertex id, 0..n-1.
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
// Vertex id as it appears in input files and all user-facing output.
using ExternalId = std::uint64_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller-supplied parameter: unknown vertex, k < 2, r out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed input file.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured memory cap would be exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace trussdiv
