#ifndef RIORDAN_FIXTURES_HPP
#define RIORDAN_FIXTURES_HPP

#include <string>
#include <vector>

namespace riordan {

/// One catalog entry: an OEIS-style id, whether it is a sequence or a
/// triangle, and the expected prefix loaded from the data file.
struct FixtureResult {
  std::string id;
  bool pass;
  std::string detail;  // mismatch description when failing
};

/// Ids with a registered recomputation rule, sorted.
std::vector<std::string> fixture_ids();

/// Recomputes each requested fixture from its defining construction and
/// prefix-compares against the catalog at `path`. Empty `ids` means all.
/// Results come back sorted by id.
std::vector<FixtureResult> verify_fixtures(const std::string& path,
                                           const std::vector<std::string>& ids);

}  // namespace riordan

#endif
