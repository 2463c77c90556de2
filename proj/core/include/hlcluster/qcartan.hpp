#pragma once

#include <vector>

#include "hlcluster/dynkin.hpp"

namespace hlc {

/// Entries of the inverse quantum Cartan matrix, written as a power
/// series sum_k C~_ij(k) z^k.  Values satisfy
///
///   C~_ij(m) = 0 for m <= 0,   C~_ij(1) = delta_ij,
///   C~_ij(m-1) + C~_ij(m+1) = sum_{k ~ j} C~_ik(m)   for m >= 1,
///
/// and are 2h-periodic in m >= 1.  The full period is precomputed at
/// construction, so lookups are table reads and safe to share across
/// threads.
class QCartanTable {
public:
    explicit QCartanTable(const DynkinDiagram& diagram);

    const DynkinDiagram& diagram() const { return diagram_; }
    int period() const { return period_; }  // 2h

    /// C~_ij(m), any integer m.
    long entry(int i, int j, long m) const;

    /// N_ij(k) = C~_ij(k+1) + C~_ij(-k-1) - C~_ij(k-1) - C~_ij(-k+1).
    long n_func(int i, int j, long k) const;

private:
    DynkinDiagram diagram_;
    int period_;
    // table_[(i-1)*rank + (j-1)][m-1] for 1 <= m <= 2h, i <= j.
    std::vector<std::vector<long>> table_;
};

inline long qcartan_entry(const QCartanTable& t, int i, int j, long m) { return t.entry(i, j, m); }
inline long n_func(const QCartanTable& t, int i, int j, long k) { return t.n_func(i, j, k); }

}  // namespace hlc
