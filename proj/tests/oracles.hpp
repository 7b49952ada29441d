// Test-only oracles, kept independent of the library implementations they
// check: the wedge sign is recomputed by sorting explicit generator lists,
// and densities by materializing whole cyclic subgroups.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmlef/element.hpp"

namespace cmlef::testing {

/// Sign of sorting the concatenation of two generator rank lists, by literal
/// bubble sort with swap counting; 0 when a rank repeats.
inline int sign_oracle(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> cat = a;
    cat.insert(cat.end(), b.begin(), b.end());
    int swaps = 0;
    for (std::size_t pass = 0; pass + 1 < cat.size(); ++pass) {
        for (std::size_t i = 0; i + 1 < cat.size(); ++i) {
            if (cat[i] == cat[i + 1])
                return 0;
            if (cat[i] > cat[i + 1]) {
                std::swap(cat[i], cat[i + 1]);
                ++swaps;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < cat.size(); ++i)
        if (cat[i] == cat[i + 1])
            return 0;
    return (swaps % 2 == 0) ? 1 : -1;
}

inline std::vector<unsigned> ranks_of(const Monomial& m) {
    std::vector<unsigned> out;
    for (unsigned r = 0; r < 64; ++r)
        if (m.contains(r))
            out.push_back(r);
    return out;
}

inline Monomial monomial_of(const std::vector<unsigned>& ranks) {
    std::uint64_t bits = 0;
    for (unsigned r : ranks)
        bits |= std::uint64_t{1} << r;
    return Monomial(bits);
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    std::uint64_t out = 1;
    for (unsigned i = 0; i < k; ++i)
        out = out * (n - i) / (i + 1);
    return out;
}

inline Element random_homogeneous(std::mt19937_64& rng, const GeneratorLayout& layout,
                                  unsigned degree) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    Element out;
    for (const Monomial& m : degree_basis(layout, degree))
        if (rng() % 3 == 0)
            out.add_term(m, Scalar(coeff(rng)));
    return out;
}

inline Element random_sparse(std::mt19937_64& rng, const GeneratorLayout& layout) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    Element out;
    const unsigned n = layout.generator_count();
    for (unsigned k = 0; k < 6; ++k) {
        const std::uint64_t bits = rng() & ((std::uint64_t{1} << n) - 1);
        out.add_term(Monomial(bits), Scalar(coeff(rng)));
    }
    return out;
}

/// Density oracle: for each element, materialize the full cyclic subgroup as
/// a set and test membership of c afterwards.
inline std::pair<unsigned, unsigned> naive_density(
    const std::vector<std::vector<unsigned>>& table, unsigned c) {
    const unsigned n = static_cast<unsigned>(table.size());
    unsigned count = 0;
    for (unsigned a = 0; a < n; ++a) {
        std::set<unsigned> subgroup{0};
        unsigned power = a;
        while (subgroup.insert(power).second)
            power = table[power][a];
        if (subgroup.count(c) != 0)
            ++count;
    }
    return {count, n};
}

// --- random groups of order <= 24 with a known central involution --------

struct RandomGroupCase {
    std::vector<std::vector<unsigned>> table;
    unsigned c = 0;
    std::string name;
};

namespace detail {

inline std::vector<std::vector<unsigned>> cyclic_table(unsigned n) {
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return table;
}

inline std::vector<std::vector<unsigned>> product_with_z2(
    const std::vector<std::vector<unsigned>>& h) {
    // Z/2 x H with (s, a) -> s * |H| + a, so the identity stays at 0.
    const unsigned m = static_cast<unsigned>(h.size());
    const unsigned n = 2 * m;
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            table[a][b] = (((a / m) + (b / m)) % 2) * m + h[a % m][b % m];
    return table;
}

inline std::vector<std::vector<unsigned>> dihedral_table(unsigned m) {
    // Elements (i, j) = rotation^i reflection^j with index j * m + i.
    const unsigned n = 2 * m;
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a) {
        const unsigned i1 = a % m, j1 = a / m;
        for (unsigned b = 0; b < n; ++b) {
            const unsigned i2 = b % m, j2 = b / m;
            const unsigned i = j1 ? (i1 + m - i2) % m : (i1 + i2) % m;
            table[a][b] = ((j1 + j2) % 2) * m + i;
        }
    }
    return table;
}

inline std::vector<std::vector<unsigned>> quaternion_table() {
    // Indices: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
    const auto mul = [](unsigned a, unsigned b) -> unsigned {
        const auto axis = [](unsigned x) { return x / 2; };  // 0:1, 1:i, 2:j, 3:k
        const auto sign = [](unsigned x) { return x % 2; };
        static const unsigned axis_mul[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const unsigned sign_mul[4][4] = {
            {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        // sign_mul[x][y] = 1 when unit_x * unit_y carries a minus (i*i = -1,
        // j*i = -k, ...).
        const unsigned ax = axis(a), ay = axis(b);
        const unsigned s = (sign(a) + sign(b) + sign_mul[ax][ay]) % 2;
        return axis_mul[ax][ay] * 2 + s;
    };
    std::vector<std::vector<unsigned>> table(8, std::vector<unsigned>(8));
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b)
            table[a][b] = mul(a, b);
    return table;
}

}  // namespace detail

/// A random relabeled group of order <= 24 with a central involution:
/// cyclic of even order, Z/2 x Z/k, an even dihedral group, or the
/// quaternion group. Element 0 stays the identity under relabeling.
inline RandomGroupCase random_group_with_central_involution(std::mt19937_64& rng) {
    RandomGroupCase out;
    switch (rng() % 4) {
        case 0: {
            const unsigned m = 1 + static_cast<unsigned>(rng() % 12);  // order 2m <= 24
            out.table = detail::cyclic_table(2 * m);
            out.c = m;
            out.name = "cyclic-" + std::to_string(2 * m);
            break;
        }
        case 1: {
            const unsigned k = 1 + static_cast<unsigned>(rng() % 12);
            out.table = detail::product_with_z2(detail::cyclic_table(k));
            out.c = k;  // the Z/2 generator
            out.name = "z2-x-cyclic-" + std::to_string(k);
            break;
        }
        case 2: {
            static const unsigned choices[] = {2, 4, 6, 8, 10, 12};
            const unsigned m = choices[rng() % 6];
            out.table = detail::dihedral_table(m);
            out.c = m / 2;  // rotation^{m/2} is central for even m
            out.name = "dihedral-" + std::to_string(2 * m);
            break;
        }
        default: {
            out.table = detail::quaternion_table();
            out.c = 1;  // -1
            out.name = "quaternion-8";
            break;
        }
    }
    // Random relabeling fixing the identity.
    const unsigned n = static_cast<unsigned>(out.table.size());
    std::vector<unsigned> relabel(n);
    for (unsigned i = 0; i < n; ++i)
        relabel[i] = i;
    std::shuffle(relabel.begin() + 1, relabel.end(), rng);
    std::vector<std::vector<unsigned>> shuffled(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            shuffled[relabel[a]][relabel[b]] = relabel[out.table[a][b]];
    out.table = std::move(shuffled);
    out.c = relabel[out.c];
    return out;
}

}  // namespace cmlef::testing
