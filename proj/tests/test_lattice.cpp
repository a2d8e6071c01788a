#include <doctest.h>

#include <random>
#include <set>

#include "clv/lattice.hpp"
#include "oracles.hpp"

using namespace clv;
using namespace clv::oracle;

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// gcd of all k x k minors, computed by brute force over row and column subsets.
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t, std::function<void()>)> choose =
        [&](std::size_t n, std::vector<std::size_t>& pick, std::size_t start, std::function<void()> f) {
            if (pick.size() == k) return f();
            for (std::size_t i = start; i < n; ++i) {
                pick.push_back(i);
                choose(n, pick, i + 1, f);
                pick.pop_back();
            }
        };
    choose(m.rows(), rows, 0, [&] {
        choose(m.cols(), cols, 0, [&] {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
            g = gcd_int(g, determinant(sub));
        });
    });
    return g;
}

}  // namespace

TEST_CASE("pairing on the cubic lattice") {
    IntLattice L = cubic_lattice();
    CHECK(pair(L, parse_class(L, "H"), parse_class(L, "H")) == 1);
    CHECK(pair(L, parse_class(L, "E1"), parse_class(L, "E2")) == 0);
    CHECK(pair(L, parse_class(L, "E1"), parse_class(L, "E1")) == -1);
    CHECK(pair(L, parse_class(L, "2H-E1-E2-E5"), -L.canonical_class) == 3);
    CHECK(pair(L, L.canonical_class, L.canonical_class) == 3);
    CHECK_THROWS_AS(pair(L, DivClass{1, 0}, parse_class(L, "H")), InputError);
}

TEST_CASE("arithmetic genus examples") {
    IntLattice L = cubic_lattice();
    CHECK(arithmetic_genus(L, parse_class(L, "H-E1")) == 0);
    CHECK(arithmetic_genus(elliptic_cone_lattice(), DivClass{2, 6}) == 4);
    CHECK(arithmetic_genus(nonnormal_f3_lattice(), DivClass{2, 6}) == 2);
    // a*Sigma + 3a*f: 1 + 3a(a-1)/2 on the cone model and 1 + a(3a-5)/2 on the non-normal model.
    for (int a = 1; a <= 6; ++a) {
        CHECK(arithmetic_genus(elliptic_cone_lattice(), DivClass{a, 3 * a}) == 1 + 3 * a * (a - 1) / 2);
        CHECK(arithmetic_genus(nonnormal_f3_lattice(), DivClass{a, 3 * a}) == 1 + a * (3 * a - 5) / 2);
    }
}

TEST_CASE("non-curve class parity is a structural error") {
    // Zero canonical class with an odd self-intersection gives odd D^2 + D.K.
    IntLattice odd = make_lattice(IntMatrix::from_rows({{-1, 0}, {0, -1}}, 2), DivClass{0, 0}, {"A", "B"}, DivClass{1, 0},
                                  "A,B");
    CHECK_THROWS_AS(arithmetic_genus(odd, DivClass{1, 0}), StructuralError);
}

TEST_CASE("make_lattice rejects asymmetric gram") {
    CHECK_THROWS_AS(make_lattice(IntMatrix::from_rows({{0, 1}, {2, 0}}, 2), DivClass{0, 0}, {"a", "b"}, DivClass{1, 0}, "a,b"),
                    InputError);
}

TEST_CASE("class text round trip") {
    IntLattice L = cubic_lattice();
    for (const char* s : {"H", "E6", "H-E1", "2H-E1-E2-E5", "6H-2E1-2E2-2E3-2E4-4E5", "-E1+E2", "0"})
        CHECK(format_class(L, parse_class(L, s)) == s);
    IntLattice F = nonnormal_f1_lattice();
    CHECK(parse_class(F, "Sigma+2f") == DivClass{1, 2});
    CHECK(format_class(F, DivClass{1, 2}) == "Sigma+2f");
    CHECK_THROWS_AS(parse_class(L, "H+Q"), InputError);
}

TEST_CASE("property: pairing is bilinear and symmetric on 1000 random pairs") {
    std::mt19937 rng(12345);
    const IntLattice lats[] = {cubic_lattice(), elliptic_cone_lattice(), nonnormal_f1_lattice()};
    int failures = 0;
    for (int it = 0; it < 1000; ++it) {
        const IntLattice& L = lats[it % 3];
        DivClass a = random_class(rng, L.rank), b = random_class(rng, L.rank), c = random_class(rng, L.rank);
        Int k = std::uniform_int_distribution<int>(-5, 5)(rng);
        if (pair(L, a, b) != pair(L, b, a)) ++failures;
        if (pair(L, a + b, c) != pair(L, a, c) + pair(L, b, c)) ++failures;
        if (pair(L, k * a, c) != k * pair(L, a, c)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("property: genus agrees with the expanded coordinate formula") {
    std::mt19937 rng(7);
    IntLattice L = cubic_lattice();
    for (int it = 0; it < 500; ++it) {
        DivClass d = random_class(rng, 7);
        // D = aH - sum b_i E_i with coefficients (a, -b_i).
        Int a = d.coeffs[0], sb = 0, sb2 = 0;
        for (int i = 1; i <= 6; ++i) {
            sb += -d.coeffs[i];
            sb2 += d.coeffs[i] * d.coeffs[i];
        }
        Int twice = a * a - sb2 - 3 * a + sb;
        if (twice % 2 != 0) {
            CHECK_THROWS_AS(arithmetic_genus(L, d), StructuralError);
        } else {
            CHECK(arithmetic_genus(L, d) == 1 + twice / 2);
        }
    }
}

TEST_CASE("smith normal form examples") {
    auto snf = smith_normal_form(IntMatrix::from_rows({{3}}, 1));
    CHECK(snf.diagonal == IntVec{3});
    snf = smith_normal_form(IntMatrix::identity(3));
    CHECK(snf.diagonal == IntVec{1, 1, 1});
    snf = smith_normal_form(IntMatrix(0, 0));
    CHECK(snf.rank == 0);
    snf = smith_normal_form(IntMatrix(2, 3));
    CHECK(snf.rank == 0);
    IntLattice L = cubic_lattice();
    std::vector<IntVec> cols;
    for (const char* s : {"H", "H-E1-E2-E3", "E1-E2", "E2-E3", "E3-E4", "E4-E5", "E5-E6"})
        cols.push_back(parse_class(L, s).coeffs);
    snf = smith_normal_form(IntMatrix::from_columns(cols, 7));
    CHECK(snf.diagonal == IntVec{1, 1, 1, 1, 1, 1, 3});
}

TEST_CASE("property: SNF against brute-force quotient counting on 200 matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 3), entry(-4, 4);
    int failures = 0;
    for (int it = 0; it < 200; ++it) {
        std::size_t m = dim(rng), n = dim(rng);
        IntMatrix M(m, n);
        std::vector<std::vector<long long>> cols(n, std::vector<long long>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int v = entry(rng);
                M.at(i, j) = v;
                cols[j][i] = v;
            }
        SmithResult s = smith_normal_form(M);
        // Audit the transforms.
        if (s.U * M * s.V != s.D) ++failures;
        if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) ++failures;
        for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k)
            if (s.diagonal[k + 1] % s.diagonal[k] != 0) ++failures;
        // Rank from rational elimination.
        std::size_t r = 0;
        for (std::size_t k = 1; k <= std::min(m, n); ++k)
            if (determinantal_divisor(M, k) != 0) r = k;
        if (r != s.rank) ++failures;
        // Determinantal divisors: d_k = product of the first k invariant factors.
        Int prod = 1;
        for (std::size_t k = 1; k <= r; ++k) {
            prod *= s.diagonal[k - 1];
            if (determinantal_divisor(M, k) != prod) ++failures;
        }
        // Torsion order by closure in (Z/P)^m with P the product of the elementary divisors.
        long long P = to_ll(prod);
        FgAbGroup g = coker_of([&] {
            std::vector<DivClass> gens;
            for (std::size_t j = 0; j < n; ++j) gens.emplace_back(M.column(j));
            return gens;
        }(), m);
        long long torsion = 1;
        for (const auto& t : g.torsion) torsion *= to_ll(t);
        long long quotient = ipow(P, m) / static_cast<long long>(generated_subgroup_size(cols, m, P));
        long long brute = quotient / ipow(P, m - r);
        if (brute != torsion) ++failures;
        if (g.free_rank != m - r) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("coker_of examples") {
    IntLattice L = cubic_lattice();
    auto gens = [&](std::initializer_list<const char*> names) {
        std::vector<DivClass> v;
        for (const char* s : names) v.push_back(parse_class(L, s));
        return v;
    };
    CHECK(coker_of(gens({"H", "H-E1-E2-E3", "E1-E2", "E2-E3", "E3-E4", "E4-E5", "E5-E6"}), 7) == fg_group(0, {3}));
    CHECK(coker_of(gens({"E4", "H-E1", "H-E1-E2-E3", "E1-E2", "E2-E3", "E3-E4", "H-E1-E5-E6"}), 7) == fg_group(1, {}));
    CHECK(coker_of(gens({"H-E1-E6", "H-E1", "H-E1-E2-E3", "E1-E2", "E2-E3", "E3-E4", "E4-E5"}), 7) == fg_group(0, {2}));
    CHECK_THROWS_AS(coker_of({DivClass{1, 2}}, 3), InputError);
    CHECK(coker_of({}, 2) == fg_group(2, {}));
}

TEST_CASE("property: coker_of invariant under permutation and column operations") {
    std::mt19937 rng(99);
    int failures = 0;
    for (int it = 0; it < 200; ++it) {
        std::size_t rank = 1 + it % 4, n = 1 + (it / 4) % 5;
        std::vector<DivClass> g;
        for (std::size_t j = 0; j < n; ++j) g.push_back(random_class(rng, rank, -4, 4));
        FgAbGroup base = coker_of(g, rank);
        auto p = g;
        std::shuffle(p.begin(), p.end(), rng);
        if (coker_of(p, rank) != base) ++failures;
        if (n >= 2) {
            auto q = g;
            q[0] = q[0] + Int(std::uniform_int_distribution<int>(-3, 3)(rng)) * q[1];
            if (coker_of(q, rank) != base) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("group formatting and canonical form") {
    CHECK(fg_group(0, {}).to_string() == "0");
    CHECK(fg_group(1, {}).to_string() == "Z");
    CHECK(fg_group(2, {3}).to_string() == "Z^2 ⊕ Z/3");
    CHECK(fg_group(0, {1, 2}).torsion == IntVec{2});
    CHECK_THROWS_AS(fg_group(0, {2, 3}), InputError);
}

TEST_CASE("solve_in_span and negative definiteness") {
    IntLattice L = cubic_lattice();
    std::vector<DivClass> chain{parse_class(L, "E1-E2"), parse_class(L, "E2-E3")};
    auto x = solve_in_span(chain, parse_class(L, "E1-E3"));
    REQUIRE(x);
    CHECK(*x == IntVec{1, 1});
    CHECK_FALSE(solve_in_span(chain, parse_class(L, "E1")));
    CHECK(negative_definite(L, chain));
    CHECK_FALSE(negative_definite(L, {parse_class(L, "H")}));
}
