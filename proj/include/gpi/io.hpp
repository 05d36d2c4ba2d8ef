#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gpi/algebra.hpp"

namespace gpi {

// Malformed input: bad JSON (message carries line and column) or a schema mismatch
// (message carries the JSON pointer of the offending value).
struct ParseError : Error {
  using Error::Error;
};

// Structural problems (non-associative semigroup table, bad sandwich, ...) throw Error.
GradedAlgebra parse_algebra_document(std::string_view text);
FiniteSemigroup parse_semigroup_document(std::string_view text);

// Semigroups are always written as tables with labels; products sorted by (i, j, k).
// indent < 0 gives the compact form used for hashing.
std::string algebra_document(const GradedAlgebra &a, int indent = 2);
std::string canonical_document(std::string_view text);

// Construction parameters as JSON; kind is munn | existence | decomposition | m2-family | fixture.
GradedAlgebra construct_from_params(const std::string &kind, std::string_view params);

std::string sha256_hex(std::string_view data);

// Directory of reports keyed by SHA-256 of canonical document + parameters.
class ReportStore {
public:
  explicit ReportStore(std::filesystem::path dir);
  static std::optional<ReportStore> from_env(); // GPI_CACHE_DIR

  static std::string key(std::string_view canonical, std::string_view params);
  std::optional<std::string> get(const std::string &key) const;
  // Written to a temporary name in the same directory, then renamed into place.
  void put(const std::string &key, const std::string &report) const;
  const std::filesystem::path &dir() const { return dir_; }

private:
  std::filesystem::path dir_;
};

} // namespace gpi
