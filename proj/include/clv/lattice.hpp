#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clv/errors.hpp"

namespace clv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

// Dense row-major integer matrix. Keeps its shape even when empty.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    IntVec row(std::size_t r) const;
    IntVec column(std::size_t c) const;

    IntMatrix operator*(const IntMatrix& other) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

struct DivClass {
    IntVec coeffs;

    DivClass() = default;
    explicit DivClass(IntVec c) : coeffs(std::move(c)) {}
    DivClass(std::initializer_list<long long> c);

    std::size_t size() const { return coeffs.size(); }
    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator-() const;
    friend DivClass operator*(const Int& k, const DivClass& d);
    bool operator==(const DivClass& o) const = default;
    std::strong_ordering operator<=>(const DivClass& o) const;
};

struct IntLattice {
    std::size_t rank = 0;
    IntMatrix gram;
    DivClass canonical_class;
    std::vector<std::string> basis_labels;
    // Pullback of the hyperplane class; its pairing with a curve is the degree.
    DivClass hyperplane_class;
    // "H,E1..E6" or "Sigma,f"; used to tag serialized classes.
    std::string basis_tag;
};

// Validates symmetry and vector lengths.
IntLattice make_lattice(IntMatrix gram, DivClass canonical, std::vector<std::string> labels,
                        DivClass hyperplane, std::string basis_tag);

// P^2 blown up at six points: basis H, E1..E6.
IntLattice cubic_lattice();
// Hirzebruch-type lattice with basis (Sigma, f), gram [[-d,1],[1,0]].
IntLattice hirzebruch_lattice(int d, const DivClass& canonical, const DivClass& hyperplane);
// Ruled surface over an elliptic curve resolving a cone over a plane cubic.
IntLattice elliptic_cone_lattice();
// Normalizations of the non-normal cubics: F3 for R1, R2 and F1 for R3, R4.
IntLattice nonnormal_f3_lattice();
IntLattice nonnormal_f1_lattice();

Int pair(const IntLattice& lat, const DivClass& a, const DivClass& b);
Int degree(const IntLattice& lat, const DivClass& d);
Int arithmetic_genus(const IntLattice& lat, const DivClass& d);

// Parses a class written as a combination of basis labels, e.g. "2H-E1-E2-E5" or "Sigma+3f".
DivClass parse_class(const IntLattice& lat, const std::string& text);
std::string format_class(const IntLattice& lat, const DivClass& d);

struct SmithResult {
    IntVec diagonal;  // nonzero invariant factors d1 | d2 | ... | dr
    std::size_t rank = 0;
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix V;  // cols x cols, unimodular
    IntMatrix D;  // U * m * V
};

SmithResult smith_normal_form(const IntMatrix& m);

struct FgAbGroup {
    std::size_t free_rank = 0;
    IntVec torsion;  // each > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FgAbGroup& o) const = default;
    // "0", "Z", "Z^2 ⊕ Z/3", ...
    std::string to_string() const;
};

FgAbGroup fg_group(std::size_t free_rank, IntVec torsion);
FgAbGroup coker_of(const std::vector<DivClass>& generators, std::size_t target_rank);

// Integer coefficients x with sum x_i * generators[i] == target, if any.
std::optional<IntVec> solve_in_span(const std::vector<DivClass>& generators, const DivClass& target);

// Sylvester's criterion on leading principal minors of the Gram restricted to the classes.
bool negative_definite(const IntLattice& lat, const std::vector<DivClass>& classes);

Int determinant(const IntMatrix& m);

std::string to_string(const Int& v);
long long to_ll(const Int& v);

}  // namespace clv
