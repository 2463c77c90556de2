#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlc {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

Family family_from_char(char c);

/// Simply-laced Dynkin diagram with Bourbaki vertex labels 1..rank.
///
/// Type A is the path 1-2-...-n.  Type D is the path 1-...-(n-2) with both
/// n-1 and n attached to n-2.  Type E (rank 6,7,8) is the path
/// 1-3-4-...-n with 2 attached to 4.
class DynkinDiagram {
public:
    DynkinDiagram(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int i, int j) const { return adj_[idx(i)][idx(j)]; }
    const std::vector<int>& neighbors(int i) const { return nbrs_[idx(i)]; }
    int degree(int i) const { return static_cast<int>(nbrs_[idx(i)].size()); }

    /// Cartan matrix entry: 2 on the diagonal, -1 on edges, 0 otherwise.
    int cartan(int i, int j) const;

    /// Coxeter number: n+1, 2n-2, 12, 18, 30.
    int coxeter_number() const;

    int num_positive_roots() const { return rank_ * coxeter_number() / 2; }

    std::string name() const;

private:
    int idx(int i) const;

    Family family_;
    int rank_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<int>> nbrs_;
};

DynkinDiagram build_diagram(Family family, int rank);
DynkinDiagram build_diagram(char family, int rank);

}  // namespace hlc
