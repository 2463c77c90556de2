#include "hlcluster/dynkin.hpp"

namespace hlc {

Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'D': case 'd': return Family::D;
        case 'E': case 'e': return Family::E;
        default: throw std::invalid_argument(std::string("unknown Dynkin family '") + c + "'");
    }
}

DynkinDiagram::DynkinDiagram(Family family, int rank) : family_(family), rank_(rank) {
    switch (family) {
        case Family::A:
            if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
            for (int i = 1; i < rank; ++i) edges_.emplace_back(i, i + 1);
            break;
        case Family::D:
            if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
            for (int i = 1; i < rank - 2; ++i) edges_.emplace_back(i, i + 1);
            edges_.emplace_back(rank - 2, rank - 1);
            edges_.emplace_back(rank - 2, rank);
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw std::invalid_argument("type E requires rank 6, 7 or 8");
            edges_.emplace_back(1, 3);
            for (int i = 3; i < rank; ++i) edges_.emplace_back(i, i + 1);
            edges_.emplace_back(2, 4);
            break;
    }
    adj_.assign(rank_, std::vector<bool>(rank_, false));
    nbrs_.assign(rank_, {});
    for (auto [a, b] : edges_) {
        adj_[a - 1][b - 1] = adj_[b - 1][a - 1] = true;
        nbrs_[a - 1].push_back(b);
        nbrs_[b - 1].push_back(a);
    }
}

int DynkinDiagram::idx(int i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("vertex index " + std::to_string(i));
    return i - 1;
}

int DynkinDiagram::cartan(int i, int j) const {
    if (i == j) { idx(i); return 2; }
    return adjacent(i, j) ? -1 : 0;
}

int DynkinDiagram::coxeter_number() const {
    switch (family_) {
        case Family::A: return rank_ + 1;
        case Family::D: return 2 * rank_ - 2;
        case Family::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
    }
    throw std::logic_error("unreachable");
}

std::string DynkinDiagram::name() const {
    return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

DynkinDiagram build_diagram(Family family, int rank) { return DynkinDiagram(family, rank); }
DynkinDiagram build_diagram(char family, int rank) { return DynkinDiagram(family_from_char(family), rank); }

}  // namespace hlc
