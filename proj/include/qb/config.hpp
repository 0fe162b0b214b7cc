// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qb {

inline constexpr const char* kVersion = "0.1.0";

/// Limits shared by every exhaustive checker.
struct Config {
  std::uint64_t cap = 4096;              // largest carrier enumerated exhaustively
  std::uint64_t samples = 200;           // size of randomized suites
  std::uint64_t seed = 0;
  std::uint64_t ideal_count_cap = 10000;
  std::uint64_t brute_force_limit = 4096;  // 2^12 candidate maps
};

/// Raised when an exhaustive computation would exceed Config::cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation is called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qb
