#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace waldcat {

// Engine-wide error types. Every hard failure is an exception; verification
// verdicts (axiom checks etc.) are ordinary return values, never exceptions.
struct EngineError : std::runtime_error {
  explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size cap was exceeded (CLI exit code 3).
struct CapExceeded : EngineError {
  explicit CapExceeded(const std::string& msg) : EngineError(msg) {}
};

// The target category cannot perform a requested construction.
struct UnsupportedOperation : EngineError {
  explicit UnsupportedOperation(const std::string& msg) : EngineError(msg) {}
};

// An operation's hypotheses do not hold (e.g. good_pushout on a bad cube).
struct HypothesisFailure : EngineError {
  explicit HypothesisFailure(const std::string& msg) : EngineError(msg) {}
};

// Handles into a TargetCategory. Values are interned by the owning category;
// equal ids mean equal values, so equality tests are O(1). Ids are only
// meaningful relative to the category that issued them.
struct TObj {
  uint32_t id = 0;
  friend bool operator==(TObj a, TObj b) { return a.id == b.id; }
  friend bool operator!=(TObj a, TObj b) { return a.id != b.id; }
  friend bool operator<(TObj a, TObj b) { return a.id < b.id; }
};

struct TMor {
  uint32_t id = 0;
  friend bool operator==(TMor a, TMor b) { return a.id == b.id; }
  friend bool operator!=(TMor a, TMor b) { return a.id != b.id; }
  friend bool operator<(TMor a, TMor b) { return a.id < b.id; }
};

// FNV-1a style combine, used for interning keys and memo tables.
inline size_t hash_combine(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <class T>
size_t hash_range(const std::vector<T>& xs, size_t seed = 0xcbf29ce484222325ULL) {
  for (const auto& x : xs) seed = hash_combine(seed, std::hash<T>{}(x));
  return hash_combine(seed, xs.size());
}

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const { return hash_range(v); }
};

// Size caps. Hard errors, never silent truncation.
struct EngineConfig {
  int max_objects = 512;        // objects per finite category
  int max_set_elems = 4096;     // elements of a pointed set (excl. basepoint)
  int max_dim = 24;             // vector space dimension
  int max_cube_dim = 8;         // cube dimension
  int max_arity = 8;            // multifunctor arity
  uint64_t max_enumeration = 20'000'000;  // search-space guard
};

inline EngineConfig& engine_config() {
  static EngineConfig cfg;
  return cfg;
}

}  // namespace waldcat

template <>
struct std::hash<waldcat::TObj> {
  size_t operator()(waldcat::TObj o) const { return std::hash<uint32_t>{}(o.id); }
};
template <>
struct std::hash<waldcat::TMor> {
  size_t operator()(waldcat::TMor m) const { return std::hash<uint32_t>{}(m.id); }
};
