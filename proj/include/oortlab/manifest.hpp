#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oortlab {

/// One manifest line: `<spec> ; p=<list> ; expect=<T/F list>` (the expect part is optional).
struct ManifestEntry {
  std::string spec;
  std::vector<std::uint64_t> primes;
  std::optional<std::vector<bool>> expect;  // aligned with primes
  std::size_t line = 0;
};

/// Blank lines and lines starting with '#' are skipped.
struct CatalogueManifest {
  std::vector<ManifestEntry> entries;
};

/// Checks that specs parse, prime lists are nonempty primes and expect lengths match.
/// Throws ParseError naming the line.
CatalogueManifest parse_manifest(std::string_view text);

/// Throws IoError when the file cannot be read, ParseError as above.
CatalogueManifest load_manifest(const std::string& path);

}  // namespace oortlab
