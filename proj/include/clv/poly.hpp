#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "clv/lattice.hpp"

namespace clv {

using Exponent = std::array<int, 4>;

// Graded lexicographic order with x > y > z > t; larger monomials sort first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rat, GrlexGreater>;

    MultiPoly() = default;
    static MultiPoly constant(const Rat& c);
    // Variable with index 0..3 (x, y, z, t).
    static MultiPoly var(int index);
    static MultiPoly monomial(const Rat& c, const Exponent& e);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& c) const;
    MultiPoly pow(unsigned k) const;
    MultiPoly derivative(int index) const;
    bool operator==(const MultiPoly& o) const = default;

    Rat eval(const std::array<Rat, 4>& pt) const;
    // Replaces variable i by images[i].
    MultiPoly substitute(const std::array<MultiPoly, 4>& images) const;
    // Coefficients of a homogeneous linear form.
    std::array<Rat, 4> linear_coefficients() const;

    std::string to_string(const std::array<const char*, 4>& names = {"x", "y", "z", "t"}) const;

private:
    void add_term(const Exponent& e, const Rat& c);
    Terms terms_;
};

// Integer coefficients, variables x y z t, operators + - * ^, parentheses.
MultiPoly parse_poly(const std::string& text);

struct PointP3 {
    std::array<Rat, 4> coords;

    PointP3() = default;
    explicit PointP3(std::array<Rat, 4> c);
    PointP3(long long x, long long y, long long z, long long t);
    // Equality up to a nonzero scalar: all 2x2 minors vanish.
    bool operator==(const PointP3& o) const;
    std::string to_string() const;
};

struct LineP3 {
    std::array<MultiPoly, 2> forms;

    LineP3() = default;
    LineP3(MultiPoly a, MultiPoly b);
    // Two points spanning the line, from the reduced echelon kernel basis.
    std::array<PointP3, 2> spanning_points() const;
    bool contains(const PointP3& p) const;
    std::string to_string() const;
};

Rat poly_eval(const MultiPoly& p, const PointP3& pt);
// Polynomial in s (slot 0) and u (slot 1) obtained from s*P + u*Q.
MultiPoly restrict_to_line(const MultiPoly& p, const LineP3& line);
bool jacobian_vanishes(const MultiPoly& p, const PointP3& pt);
// Polynomial in three plane coordinates (slots 0..2) on the plane {form = 0}.
MultiPoly restrict_to_plane(const MultiPoly& p, const MultiPoly& form);

// Rank of a rational matrix given by rows.
std::size_t rational_rank(std::vector<std::vector<Rat>> rows);
// Basis of the kernel of the row space, in reduced echelon form (free variable set to 1).
std::vector<std::array<Rat, 4>> kernel_basis(const std::vector<std::array<Rat, 4>>& rows);

// Number of intersection points of two lines: 0, 1, or -1 when they coincide.
int line_intersection_count(const LineP3& a, const LineP3& b);
// True when two polynomials differ by a nonzero constant factor.
bool proportional(const MultiPoly& a, const MultiPoly& b);

std::string rat_to_string(const Rat& r);

}  // namespace clv
