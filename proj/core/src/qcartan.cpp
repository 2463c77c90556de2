#include "hlcluster/qcartan.hpp"

namespace hlc {

QCartanTable::QCartanTable(const DynkinDiagram& diagram)
    : diagram_(diagram), period_(2 * diagram.coxeter_number()) {
    const int n = diagram_.rank();
    // Row-fill by the recurrence in m: C~(m+1) = sum_{k ~ j} C~_ik(m) - C~(m-1).
    // Values for m beyond the period are only needed transiently.
    std::vector<std::vector<long>> full(n * n, std::vector<long>(period_ + 2, 0));
    auto at = [&](int i, int j, long m) -> long {
        if (m <= 0) return 0;
        return full[(i - 1) * n + (j - 1)][m - 1];
    };
    for (int i = 1; i <= n; ++i) full[(i - 1) * n + (i - 1)][0] = 1;
    for (long m = 1; m <= period_ + 1; ++m) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                long s = 0;
                for (int k : diagram_.neighbors(j)) s += at(i, k, m);
                full[(i - 1) * n + (j - 1)][m] = s - at(i, j, m - 1);
            }
        }
    }
    table_.assign(n * n, std::vector<long>(period_, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int m = 1; m <= period_; ++m)
                table_[(i - 1) * n + (j - 1)][m - 1] = full[(i - 1) * n + (j - 1)][m - 1];
}

long QCartanTable::entry(int i, int j, long m) const {
    const int n = diagram_.rank();
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("QCartanTable vertex index");
    if (m <= 0) return 0;
    long r = (m - 1) % period_ + 1;
    return table_[(i - 1) * n + (j - 1)][r - 1];
}

long QCartanTable::n_func(int i, int j, long k) const {
    return entry(i, j, k + 1) + entry(i, j, -k - 1) - entry(i, j, k - 1) - entry(i, j, -k + 1);
}

}  // namespace hlc
