#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hlcluster/ymono.hpp"

namespace hlc {

/// A table of highest-weight monomials pinned to an explicit height
/// function.  Header lines are `# key: value`; the body is one canonical
/// monomial per line.  `compare: equal` demands the computed non-frozen
/// table equals the body as a set; `compare: subset` only that every body
/// line is computed.
struct FixtureFile {
    char family = 'A';
    int rank = 0;
    std::vector<long> xi;
    std::string source;
    bool subset = false;
    int level = 1;  // level > 1 tables are produced by the grid-seed enumeration
    std::vector<YMonomial> monomials;

    static FixtureFile parse(std::istream& in);
    static FixtureFile load(const std::string& path);
    std::string serialize() const;
};

struct FixtureDiff {
    bool ok = false;
    std::vector<std::string> missing;     // in fixture, not computed
    std::vector<std::string> unexpected;  // computed, not in fixture (equal mode)
};

/// Recomputes the table for the fixture's height function and diffs.
/// `budget` caps the seed enumeration for level > 1 fixtures.
FixtureDiff verify_fixture(const FixtureFile& fixture, int64_t budget = 30000);

}  // namespace hlc
