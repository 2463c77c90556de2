#include "hlcluster/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hlcluster/hltable.hpp"
#include "hlcluster/level.hpp"

namespace hlc {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

FixtureFile FixtureFile::parse(std::istream& in) {
    FixtureFile f;
    std::string line;
    bool have_type = false, have_rank = false, have_xi = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto colon = line.find(':');
            if (colon == std::string::npos) continue;
            std::string key = trim(line.substr(1, colon - 1));
            std::string value = trim(line.substr(colon + 1));
            if (key == "type") {
                f.family = value.at(0);
                have_type = true;
            } else if (key == "rank") {
                f.rank = std::stoi(value);
                have_rank = true;
            } else if (key == "xi") {
                std::istringstream vs(value);
                std::string tok;
                while (std::getline(vs, tok, ',')) f.xi.push_back(std::stol(trim(tok)));
                have_xi = true;
            } else if (key == "source") {
                f.source = value;
            } else if (key == "compare") {
                f.subset = value == "subset";
            } else if (key == "level") {
                f.level = std::stoi(value);
            }
            continue;
        }
        f.monomials.push_back(YMonomial::parse(line));
    }
    if (!have_type || !have_rank || !have_xi)
        throw std::invalid_argument("fixture header needs type, rank and xi");
    if (static_cast<int>(f.xi.size()) != f.rank)
        throw std::invalid_argument("fixture xi length does not match rank");
    return f;
}

FixtureFile FixtureFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    return parse(in);
}

std::string FixtureFile::serialize() const {
    std::ostringstream os;
    os << "# type: " << family << "\n# rank: " << rank << "\n# xi: ";
    for (size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i];
    os << "\n";
    if (!source.empty()) os << "# source: " << source << "\n";
    if (level != 1) os << "# level: " << level << "\n";
    os << "# compare: " << (subset ? "subset" : "equal") << "\n";
    for (const auto& m : monomials) os << m.str() << "\n";
    return os.str();
}

FixtureDiff verify_fixture(const FixtureFile& fixture, int64_t budget) {
    HeightFunction xi(build_diagram(fixture.family, fixture.rank), fixture.xi);
    std::set<std::string> computed;
    if (fixture.level == 1) {
        ARQuiver ar(xi);
        auto records = hl_table(ar, false, false);
        for (const auto& rec : records) computed.insert(rec.hw.str());
    } else {
        GridQuiver grid(xi, fixture.level);
        Seed seed = Seed::grid_principal(grid);
        auto res = enumerate_bfs(seed, budget);
        if (res.capped) throw std::runtime_error("verify_fixture: enumeration budget exceeded");
        for (const auto& v : res.variables) computed.insert(hw_level_l(grid, seed, v.laurent).str());
    }

    FixtureDiff diff;
    std::set<std::string> wanted;
    for (const auto& m : fixture.monomials) wanted.insert(m.str());
    for (const auto& w : wanted)
        if (!computed.count(w)) diff.missing.push_back(w);
    if (!fixture.subset)
        for (const auto& c : computed)
            if (!wanted.count(c)) diff.unexpected.push_back(c);
    diff.ok = diff.missing.empty() && diff.unexpected.empty();
    return diff;
}

}  // namespace hlc
