#include "rectcount/subset_lattice.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "rectcount/binomial.hpp"

namespace rectcount {

IncidenceMatrix build_incidence(int n) {
    if (n < 0 || n > max_incidence_ground)
        throw std::invalid_argument("build_incidence: ground size must be in 0.." +
                                    std::to_string(max_incidence_ground));
    const std::size_t cols = std::size_t{1} << n;
    RectMatrix m(static_cast<std::size_t>(n), cols);
    for (int i = 0; i < n; ++i)
        for (std::size_t s = 0; s < cols; ++s)
            if ((s >> i) & 1u) m.set(static_cast<std::size_t>(i), s, sym1);
    return {n, std::move(m)};
}

void SubsetConstraint::validate() const {
    if (n < 0 || n > 32) throw std::invalid_argument("SubsetConstraint: n must be in 0..32");
    if ((contain & avoid) != 0)
        throw std::invalid_argument("SubsetConstraint: contain and avoid overlap");
    const std::uint32_t universe = (n == 32) ? ~0u : ((1u << n) - 1u);
    if (((contain | avoid) & ~universe) != 0)
        throw std::invalid_argument("SubsetConstraint: element outside {0..n-1}");
    if (size_min < 0 || size_min > size_max || size_max > n)
        throw std::invalid_argument("SubsetConstraint: need 0 <= size_min <= size_max <= n");
}

std::uint64_t count_subsets_brute(const SubsetConstraint& c) {
    c.validate();
    if (c.n > max_subset_enumeration)
        throw std::invalid_argument("count_subsets_brute: n exceeds the 2^n enumeration guard (" +
                                    std::to_string(max_subset_enumeration) + ")");
    const std::uint32_t last = (c.n == 0) ? 0 : (1u << c.n) - 1u;
    std::uint64_t count = 0;
    std::uint32_t s = 0;
    while (true) {
        const int size = std::popcount(s);
        count += (s & c.contain) == c.contain && (s & c.avoid) == 0 && c.size_min <= size &&
                 size <= c.size_max;
        if (s == last) break;
        ++s;
    }
    return count;
}

std::uint64_t count_subsets_formula(const SubsetConstraint& c) {
    c.validate();
    const int contained = std::popcount(c.contain);
    const int avoided = std::popcount(c.avoid);
    const long long free_elems = c.n - contained - avoided;
    ExactInt total = 0;
    for (long long i = c.size_min - contained; i <= c.size_max - contained; ++i)
        total += binom(free_elems, i);
    return total.convert_to<std::uint64_t>();
}

std::vector<std::vector<ExactInt>> theorem_input_table(int n, int k, int l, int m1, int m2) {
    if (!(0 <= l && l <= k && k <= n))
        throw std::invalid_argument("theorem_input_table: need 0 <= l <= k <= n");
    if (!(0 <= m1 && m1 <= m2 && m2 <= n))
        throw std::invalid_argument("theorem_input_table: need 0 <= m1 <= m2 <= n");
    std::vector<std::vector<ExactInt>> table(static_cast<std::size_t>(l) + 1);
    for (int i1 = 0; i1 <= l; ++i1) {
        auto& row = table[static_cast<std::size_t>(i1)];
        row.reserve(static_cast<std::size_t>(k - l) + 1);
        for (int i2 = 0; i2 <= k - l; ++i2) {
            ExactInt sum = 0;
            for (long long i3 = m1 - i2; i3 <= m2 - i2; ++i3) sum += binom(n - i1 - i2, i3);
            row.push_back(std::move(sum));
        }
    }
    return table;
}

std::vector<std::size_t> labels_with_size(int n, int size_min, int size_max) {
    if (n < 0 || n > max_subset_enumeration)
        throw std::invalid_argument("labels_with_size: n out of range");
    std::vector<std::size_t> labels;
    const std::size_t cols = std::size_t{1} << n;
    for (std::size_t s = 0; s < cols; ++s) {
        const int size = std::popcount(s);
        if (size_min <= size && size <= size_max) labels.push_back(s);
    }
    return labels;
}

}  // namespace rectcount
