#pragma once

#include <cstdint>
#include <vector>

#include "rectcount/exact_int.hpp"
#include "rectcount/matrix.hpp"

namespace rectcount {

// Materialization guard: the incidence matrix holds n * 2^n bits.
inline constexpr int max_incidence_ground = 20;
// Pure counting paths enumerate 2^n subsets without materializing.
inline constexpr int max_subset_enumeration = 24;

// The n x 2^n subset-incidence matrix: column s has a 1 in row i iff bit i of
// the label s is set. Every binary column of height n appears exactly once.
struct IncidenceMatrix {
    int ground_size = 0;
    RectMatrix matrix;
};

IncidenceMatrix build_incidence(int n);

// Subsets S of {0..n-1} with contain subseteq S, S disjoint from avoid, and
// |S| in [size_min, size_max]. contain and avoid are element bit masks.
struct SubsetConstraint {
    int n = 0;
    std::uint32_t contain = 0;
    std::uint32_t avoid = 0;
    int size_min = 0;
    int size_max = 0;

    void validate() const;
};

// Enumerates all 2^n subsets. Requires n <= max_subset_enumeration.
std::uint64_t count_subsets_brute(const SubsetConstraint& c);

// Closed form: sum_{i = size_min-|contain|}^{size_max-|contain|}
// C(n-|contain|-|avoid|, i), out-of-range binomials contributing 0.
std::uint64_t count_subsets_formula(const SubsetConstraint& c);

// Table a[i1][i2] = sum_{i3=m1-i2}^{m2-i2} C(n-i1-i2, i3) for 0 <= i1 <= l,
// 0 <= i2 <= k-l; feed to count_binary_bivariate(a, l, k). i1 counts the
// rows of I inside the where-c-is-1 split, i2 the rows outside it.
std::vector<std::vector<ExactInt>> theorem_input_table(int n, int k, int l, int m1, int m2);

// Column labels s in [0, 2^n) with size_min <= |s| <= size_max, ascending.
std::vector<std::size_t> labels_with_size(int n, int size_min, int size_max);

}  // namespace rectcount
