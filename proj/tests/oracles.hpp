#pragma once

// Shared generators and brute-force oracles for the unit and acceptance suites.

#include <random>
#include <set>
#include <vector>

#include "clv/lattice.hpp"
#include "clv/poly.hpp"

namespace clv::oracle {

inline DivClass random_class(std::mt19937& rng, std::size_t rank, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntVec v;
    for (std::size_t i = 0; i < rank; ++i) v.emplace_back(d(rng));
    return DivClass(v);
}

// Order of the subgroup generated by the columns inside (Z/P)^m, by closure.
inline std::size_t generated_subgroup_size(const std::vector<std::vector<long long>>& cols, std::size_t m, long long P) {
    std::set<std::vector<long long>> seen{std::vector<long long>(m, 0)};
    std::vector<std::vector<long long>> frontier{std::vector<long long>(m, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& v : frontier)
            for (const auto& c : cols) {
                std::vector<long long> w(m);
                for (std::size_t i = 0; i < m; ++i) w[i] = (((v[i] + c[i]) % P) + P) % P;
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

inline long long ipow(long long b, std::size_t e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

inline MultiPoly random_homogeneous(std::mt19937& rng, int degree, int max_terms = 8) {
    std::uniform_int_distribution<int> coeff(-5, 5), var(0, 3), terms(1, max_terms);
    MultiPoly p;
    int k = terms(rng);
    for (int i = 0; i < k; ++i) {
        Exponent e{0, 0, 0, 0};
        for (int d = 0; d < degree; ++d) ++e[var(rng)];
        p = p + MultiPoly::monomial(coeff(rng), e);
    }
    return p;
}

inline PointP3 random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    for (;;) {
        PointP3 p(c(rng), c(rng), c(rng), c(rng));
        if (p.coords != std::array<Rat, 4>{0, 0, 0, 0}) return p;
    }
}

}  // namespace clv::oracle
