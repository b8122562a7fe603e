#pragma once

// File-backed cache for computed values, keyed by a canonical subject
// descriptor plus method.  Entries carry full provenance and an explicit
// error exponent; writes are atomic (temp file + rename), so concurrent
// processes can share a cache directory.

#include <iosfwd>
#include <optional>
#include <string>

#include "lcert/numerics.hpp"

namespace lcert {

class ValueCache {
 public:
  explicit ValueCache(std::string dir);

  void store(const std::string& key, const std::string& method,
             long precision_bits, const Complex& value) const;

  /// Hit only when the stored precision is at least min_precision.
  /// Corrupt entries are reported on diag and treated as misses.
  std::optional<Complex> lookup(const std::string& key,
                                const std::string& method, long min_precision,
                                std::ostream& diag) const;
  std::optional<Complex> lookup(const std::string& key,
                                const std::string& method,
                                long min_precision) const;

 private:
  std::string path_for(const std::string& key, const std::string& method) const;

  std::string dir_;
};

}  // namespace lcert
