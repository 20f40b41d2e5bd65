#pragma once

// Append-only persistence for factorizations of (1+i)^e - 1.
//
// One record per line:
//
//   e;complete;re,im,mult|re,im,mult|...
//
// with canonical prime generators in decimal and complete written as 0 or 1.
// Later lines for the same exponent supersede earlier ones, so a deeper
// factorization is recorded by appending rather than rewriting.

#include "gaussrom/gint.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace gaussrom {

struct CacheRecord {
  unsigned long exponent = 0;
  bool complete = false;
  std::vector<std::pair<GInt, unsigned>> factors;  // canonical generator, multiplicity

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

std::string format_cache_line(const CacheRecord& record);

/// Throws std::invalid_argument on a malformed line.
CacheRecord parse_cache_line(std::string_view line);

/// Thread-safe: concurrent lookups, serialized appends.
class FactorCache {
 public:
  /// In-memory only; nothing is persisted.
  FactorCache() = default;

  /// Loads every record already in the file (if it exists) and appends new
  /// records to it.
  explicit FactorCache(std::filesystem::path path);

  std::optional<CacheRecord> lookup(unsigned long exponent) const;
  void append(const CacheRecord& record);
  std::size_t size() const;

  /// Path from the GAUSSROM_CACHE environment variable, if set.
  static std::optional<std::filesystem::path> default_path();

 private:
  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mutex_;
  std::map<unsigned long, CacheRecord> records_;
};

}  // namespace gaussrom
