#ifndef APOLAR_DETERMINANT_HPP
#define APOLAR_DETERMINANT_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace apolar {

/// Division-free determinant over a commutative ring by dynamic programming over
/// column subsets. at(r, c) yields entries; mul, add and neg are the ring
/// operations and zero is the additive identity. O(m 2^m) products.
template <class T, class At, class Mul, class Add, class Neg>
T subset_determinant(std::size_t m, const T& zero, const T& one, At at, Mul mul, Add add, Neg neg) {
    if (m > 20) throw std::length_error("subset_determinant: matrix too large");
    const std::uint32_t full = (1u << m) - 1;
    std::vector<T> dp(std::size_t{1} << m, zero);
    std::vector<bool> live(dp.size(), false);
    dp[0] = one;
    live[0] = true;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!live[mask]) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t c = 0; c < m; ++c) {
            const std::uint32_t bit = 1u << c;
            if (mask & bit) continue;
            T term = mul(dp[mask], at(row, c));
            // Each used column to the right of c is one inversion.
            if (std::popcount(mask & ~((bit << 1) - 1)) % 2) term = neg(term);
            dp[mask | bit] = add(dp[mask | bit], term);
            live[mask | bit] = true;
        }
    }
    return dp[full];
}

/// Calls visit(rows, cols) for every m x m minor position in lexicographic
/// order until visit returns false or limit positions were visited. Returns
/// the number visited.
template <class Visit>
std::size_t for_each_minor(std::size_t nrows, std::size_t ncols, std::size_t m, std::size_t limit, Visit visit) {
    std::size_t count = 0;
    if (m > nrows || m > ncols) return 0;
    std::vector<std::size_t> rs(m), cs(m);
    auto first = [&](std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < m; ++i) v[i] = i;
    };
    auto advance = [&](std::vector<std::size_t>& v, std::size_t n) {
        for (std::size_t i = m; i-- > 0;) {
            if (v[i] < n - m + i) {
                ++v[i];
                for (std::size_t j = i + 1; j < m; ++j) v[j] = v[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    first(rs);
    do {
        first(cs);
        do {
            if (count >= limit) return count;
            ++count;
            if (!visit(rs, cs)) return count;
        } while (m > 0 && advance(cs, ncols));
    } while (m > 0 && advance(rs, nrows));
    return count;
}

}  // namespace apolar

#endif
