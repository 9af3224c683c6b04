#include "oortlab/manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/group_spec.hpp"

namespace oortlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("manifest line " + std::to_string(line) + ": " + what);
}

// Strips `key=` from a field.
std::string_view value_of(std::string_view field, std::string_view key, std::size_t line) {
  if (field.substr(0, key.size()) != key || field.size() <= key.size() ||
      field[key.size()] != '=') {
    fail(line, "expected " + std::string(key) + "=...");
  }
  return trim(field.substr(key.size() + 1));
}

}  // namespace

CatalogueManifest parse_manifest(std::string_view text) {
  CatalogueManifest m;
  std::size_t line_no = 0;
  for (std::string_view rest = text; !rest.empty();) {
    const auto nl = rest.find('\n');
    std::string_view raw = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    auto fields = split(line, ';');
    if (fields.size() < 2 || fields.size() > 3) fail(line_no, "expected <spec> ; p=<list> [; expect=<list>]");
    ManifestEntry e;
    e.line = line_no;
    e.spec = std::string(fields[0]);
    try {
      parse_group_spec(e.spec);
    } catch (const ParseError& err) {
      fail(line_no, err.what());
    }
    for (auto tok : split(value_of(fields[1], "p", line_no), ',')) {
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || !is_prime(p)) {
        fail(line_no, "not a prime: '" + std::string(tok) + "'");
      }
      e.primes.push_back(p);
    }
    if (fields.size() == 3) {
      std::vector<bool> expect;
      for (auto tok : split(value_of(fields[2], "expect", line_no), ',')) {
        if (tok == "T") {
          expect.push_back(true);
        } else if (tok == "F") {
          expect.push_back(false);
        } else {
          fail(line_no, "expect values are T or F, got '" + std::string(tok) + "'");
        }
      }
      if (expect.size() != e.primes.size()) fail(line_no, "expect list length differs from p list");
      e.expect = std::move(expect);
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

CatalogueManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read manifest " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading manifest " + path);
  return parse_manifest(buf.str());
}

}  // namespace oortlab
