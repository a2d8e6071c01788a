#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clv/lattice.hpp"
#include "clv/surface_models.hpp"

namespace clv {

struct EulerBudget {
    int eu_S2 = 0;
    int pa_C = 0;
    int N1 = 1, N2 = 0, N12 = 0;
    // Throws InputError unless N12 <= min(N1, N2), N1 >= 1 and all counts are nonnegative.
    void validate() const;
};

// eu(F) = eu(S2) + 2 p_a(C) + N1 + N2 - N12 - 2.
int euler_of_F(const EulerBudget& b);

struct Minimality {
    int value = 0;             // N1 + N2 - N12
    bool is_minimal = false;   // value == 1
    bool minimal_profile = false;  // (N1, N2, N12) is (1,0,0) or (1,1,1)
};

Minimality minimality_dichotomy(int N1, int N2, int N12);

struct PlaneCubicType {
    std::string label;  // CU, L1, QL, L2, L3, SMOOTH, NODAL, TRIANGLE, CONIC_TRANSVERSE_LINE
    std::string description;
    int eu = 0, b1 = 0, b2 = 0;
    bool admitted() const { return b1 == 0 && eu >= 2; }
};

std::vector<PlaneCubicType> plane_cubic_table();
const PlaneCubicType& plane_cubic(const std::string& label);  // throws InputError

struct FeasibleIntersection {
    std::string F_type;
    int sharp_C_cap_F = 0;
    bool operator==(const FeasibleIntersection&) const = default;
};

// Admitted plane cubics F with B2(F) = B2(S2) + #(C cap F) - 1 and #(C cap F) >= 1.
std::vector<FeasibleIntersection> feasible_intersections(int B2_S2);

struct WeightedClass {
    DivClass cls;
    int mult = 1;
};

// Cokernel of the span of the F components and the (-2)-classes inside the surface lattice.
// Throws InputError when the weighted components do not complete to the hyperplane class
// with nonnegative (-2)-curve coefficients.
FgAbGroup coker_theta(const Catalog& c, const std::string& surface_id, const std::vector<WeightedClass>& components);
std::vector<DivClass> theta_generators(const Catalog& c, const std::string& surface_id,
                                       const std::vector<WeightedClass>& components);

// Second homology of the non-normal cubic R3: basis [E], mu_*[f], with mu_*[Sigma] = 2[E] - mu_*[f].
struct H2ModelR3 {
    // Coordinates of mu_* of a class a*Sigma + b*f in the basis ([E], mu_*[f]).
    static IntVec pushforward(const DivClass& d);
    // Degree in the plane section (pairing with Sigma + 2f).
    static Int plane_degree(const DivClass& d);
};

struct XiResult {
    FgAbGroup coker;
    bool injective = true;
    std::vector<IntVec> images;  // xi of each component in Z (+) Z^2
};

// Cokernel of xi into H2(S1) (+) H2(S2) = Z (+) Z^2 for a decomposition of Sigma + 2f.
XiResult coker_xi_R3(const std::vector<WeightedClass>& decomposition);

}  // namespace clv
