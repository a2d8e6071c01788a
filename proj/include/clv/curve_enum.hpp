#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clv/lattice.hpp"
#include "clv/surface_models.hpp"

namespace clv {

// Linear condition sum(coeffs[i] * class[i]) >= 0 on raw coordinates.
struct LinearCondition {
    std::string label;
    DivClass coeffs;
};

struct ChainBudget {
    std::string label;
    std::vector<DivClass> members;
    Int max_member = 1;
    Int max_total = 1;
};

struct CurveConstraintSet {
    IntLattice lattice;
    int n = 1;
    int genus = 0;
    std::vector<DivClass> nonneg_neg2;   // pair(D, c) >= 0
    std::vector<DivClass> nonneg_neg1;   // pair(D, e) >= 0 unless D == e
    std::vector<ChainBudget> chain_budget;
    std::optional<std::vector<DivClass>> projection_chain;  // a = n - m, m summed over this chain
    std::vector<LinearCondition> extra_linear;
};

struct SearchBounds {
    int n = 0;
    Int a_min, a_max;
    Int b_box;
};

struct SolutionSet {
    std::vector<DivClass> classes;  // sorted, distinct
    std::vector<SearchBounds> search_bounds;
    std::optional<int> n_max;        // largest degree searched
    std::string n_bound_method;      // how the degree range was established
    std::vector<std::string> constraint_gaps;
    bool beyond_reference = false;   // degrees past the surface's documented limit were searched
};

struct CsBounds {
    Int a_min, a_max;
};

// Integer interval for a from 3(a-n)^2 <= 2(n^2-3n+6) - 12*genus; empty (a_min > a_max) when infeasible.
CsBounds bounds_from_cauchy_schwarz(int n, int genus = 0);

struct Tuple {
    int n;
    Int a;
    std::vector<Int> b;  // sorted descending
    bool operator==(const Tuple&) const = default;
    bool operator<(const Tuple& o) const {
        if (n != o.n) return n < o.n;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    std::string to_string() const;
};

// Solutions of 3a - sum b = n and a^2 - sum b^2 = n - 2 + 2*genus, up to permutation of b.
std::vector<Tuple> enumerate_tuples(int n, int genus = 0);

// Label of the first violated constraint, or nullopt when the class satisfies all of them.
std::optional<std::string> first_violation(const CurveConstraintSet& cs, const DivClass& d);

// All classes of the cubic lattice satisfying the degree and genus equations and the constraints.
std::vector<DivClass> enumerate_with_constraints(const CurveConstraintSet& cs, SearchBounds* bounds = nullptr);

// (-1)-classes: degree 1, genus 0, nonnegative against every (-2)-class of the surface.
std::vector<DivClass> minus_one_classes(const SurfaceModel& s);

CurveConstraintSet curve_constraints(const SurfaceModel& s, int n);

struct DegreeBound {
    std::optional<int> n_max;  // nullopt when no bound could be derived
    std::string method;
    std::vector<std::string> gaps;
};

// Bound on the degree of smooth rational curve classes from the orthogonal decomposition
// with respect to -K and the exceptional chains.
DegreeBound derive_degree_bound(const SurfaceModel& s, int genus = 0);

SolutionSet enumerate_curve_classes(const Catalog& c, const std::string& surface_id,
                                    std::optional<int> n = std::nullopt);

// Constraint set for the strict transform of a cuspidal hyperplane section on G1.
// The full smooth-curve family replaces the ordering conditions when `smooth_family` is set.
CurveConstraintSet cuspidal_constraints(const Catalog& c, bool smooth_family = false);
DivClass cuspidal_cubic_class_G1(const Catalog& c);

struct HirzebruchClass {
    DivClass cls;
    Int genus;
};

// model: ELLIPTIC_CONE, R12 or R34.
std::vector<HirzebruchClass> hirzebruch_degree_genus(const std::string& model, int degree);
IntLattice hirzebruch_model_lattice(const std::string& model);

struct BidegreeOptions {
    int sum_a = 4;
    int sum_b = 1;
    bool require_nonneg_a = true;
    int box = 10;
};

struct Bidegree {
    int a1, b1, a2, b2;
    bool operator==(const Bidegree&) const = default;
    auto operator<=>(const Bidegree&) const = default;
};

// a1*b2 - a2*b1 = +-1 with a1 + a2 = sum_a, b1 + b2 = sum_b, all values inside [-box, box].
std::vector<Bidegree> solve_blowup_bidegrees(const BidegreeOptions& opt = {});

Int isqrt(const Int& v);

}  // namespace clv
