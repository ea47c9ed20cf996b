#include "excesslab/excess_table.hpp"

#include <stdexcept>

namespace excesslab {

ExcessTable::ExcessTable(int k_max, int l_max) : k_max_(k_max), l_max_(l_max) {
    if (k_max < 1 || l_max < -1)
        throw std::invalid_argument("ExcessTable: k_max >= 1 and l_max >= -1 required");
    rows_.assign(l_max + 2, std::vector<Integer>(k_max));

    // tree row: c(k, k-1) = k^{k-2}
    rows_[0][0] = 1;
    for (int k = 2; k <= k_max; ++k) rows_[0][k - 1] = ipow(k, k - 2);

    std::vector<Integer> binom(k_max + 1);
    for (int lr = 0; lr <= l_max; ++lr) {
        const int l = lr - 1;
        for (int k = 1; k <= k_max; ++k) {
            const long max_edges = static_cast<long>(k) * (k - 1) / 2;
            if (k + lr > max_edges) continue;  // stays zero
            for (int t = 0; t <= k; ++t)
                mpz_bin_uiui(binom[t].get_mpz_t(), k, t);

            Integer acc = (Integer(max_edges) - k - l) * count(k, l);
            Integer conv = 0;
            for (int t = 1; t < k; ++t) {
                const Integer weight = binom[t] * (static_cast<long>(t) * (k - t));
                Integer inner = 0;
                for (int p = -1; p <= l + 1; ++p) {
                    const Integer& a = count(t, p);
                    if (a == 0) continue;
                    const Integer& b = count(k - t, l - p);
                    if (b == 0) continue;
                    inner += a * b;
                }
                if (inner != 0) conv += weight * inner;
            }
            acc += divexact(conv, Integer(2));
            rows_[lr + 1][k - 1] = divexact(acc, Integer(k + l + 1));
        }
    }
}

const Integer& ExcessTable::count(int k, int l) const {
    if (k < 1 || k > k_max_ || l < -1 || l > l_max_) {
        if (l > l_max_ || k > k_max_)
            throw std::out_of_range("ExcessTable::count: outside table coverage");
        return zero_;
    }
    if (k + l < 0 || k + l > static_cast<long>(k) * (k - 1) / 2) return zero_;
    return rows_[l + 1][k - 1];
}

static Integer bridge_convolution(const ExcessTable& table, int k, int l,
                                  int p_lo, int p_hi) {
    if (k < 2) return 0;
    if (k > table.k_max() || l > table.l_max())
        throw std::out_of_range("bridge count: table too small");
    Integer total = 0;
    Integer binom;
    for (int p = p_lo; p <= p_hi; ++p) {
        for (int t = 1; t < k; ++t) {
            const Integer& a = table.count(t, p);
            if (a == 0) continue;
            const Integer& b = table.count(k - t, l - p);
            if (b == 0) continue;
            mpz_bin_uiui(binom.get_mpz_t(), k, t);
            total += binom * (static_cast<long>(t) * (k - t)) * a * b;
        }
    }
    return divexact(total, Integer(2));
}

Integer bridge_count_exact(const ExcessTable& table, int k, int l) {
    if (l < 0) throw std::invalid_argument("bridge_count_exact: l >= 0 required");
    return bridge_convolution(table, k, l, 0, l);
}

Integer bridge_count_general(const ExcessTable& table, int k, int l, int r,
                             bool one_sided) {
    if (r < 0 || (!one_sided && 2 * r > l) || r > l)
        throw std::invalid_argument("bridge_count_general: r out of range");
    return bridge_convolution(table, k, l, r, one_sided ? l : l - r);
}

}  // namespace excesslab
