#include "clv/homology.hpp"

#include <algorithm>

namespace clv {

void EulerBudget::validate() const {
    if (pa_C < 0 || N1 < 0 || N2 < 0 || N12 < 0) throw InputError("Euler budget entries must be nonnegative");
    if (N1 < 1) throw InputError("N1 must be at least 1");
    if (N12 > std::min(N1, N2)) throw InputError("N12 must not exceed min(N1, N2)");
}

int euler_of_F(const EulerBudget& b) {
    b.validate();
    return b.eu_S2 + 2 * b.pa_C + b.N1 + b.N2 - b.N12 - 2;
}

Minimality minimality_dichotomy(int N1, int N2, int N12) {
    EulerBudget{0, 0, N1, N2, N12}.validate();
    Minimality m;
    m.value = N1 + N2 - N12;
    m.is_minimal = m.value == 1;
    m.minimal_profile = (N1 == 1 && N2 == 0 && N12 == 0) || (N1 == 1 && N2 == 1 && N12 == 1);
    return m;
}

std::vector<PlaneCubicType> plane_cubic_table() {
    // Values agree with the CW-count oracle in the test suite.
    return {
        {"CU", "cuspidal cubic", 2, 0, 1},
        {"L1", "triple line", 2, 0, 1},
        {"QL", "conic with a tangent line", 3, 0, 2},
        {"L2", "line plus a double line", 3, 0, 2},
        {"L3", "three concurrent lines", 4, 0, 3},
        {"SMOOTH", "smooth cubic", 0, 2, 1},
        {"NODAL", "nodal cubic", 1, 1, 1},
        {"CONIC_TRANSVERSE_LINE", "conic with a transverse line", 2, 1, 2},
        {"TRIANGLE", "three non-concurrent lines", 3, 1, 3},
    };
}

const PlaneCubicType& plane_cubic(const std::string& label) {
    static const std::vector<PlaneCubicType> table = plane_cubic_table();
    for (const auto& t : table)
        if (t.label == label) return t;
    throw InputError("unknown plane cubic type: " + label);
}

std::vector<FeasibleIntersection> feasible_intersections(int B2_S2) {
    if (B2_S2 < 1 || B2_S2 > 3) throw InputError("B2(S2) must lie in [1, 3]");
    std::vector<FeasibleIntersection> out;
    for (const auto& t : plane_cubic_table()) {
        if (!t.admitted()) continue;
        int k = t.b2 - B2_S2 + 1;
        if (k >= 1) out.push_back({t.label, k});
    }
    return out;
}

namespace {

const SurfaceModel& theta_surface(const Catalog& c, const std::string& surface_id,
                                  const std::vector<WeightedClass>& components) {
    const SurfaceModel& s = c.get(surface_id);
    if (!s.lattice || s.lattice_model != "cubic")
        throw InputError("surface " + surface_id + " has no cubic lattice model");
    if (components.empty()) throw InputError("at least one F component is required");
    for (const auto& w : components) {
        if (w.cls.size() != s.lattice->rank) throw InputError("component class is not in the H,E1..E6 basis");
        if (w.mult < 1) throw InputError("component multiplicities must be positive");
    }
    HyperplaneChoice h;
    h.surface_id = surface_id;
    for (const auto& w : components) h.components.push_back({w.cls, w.mult, std::nullopt});
    auto res = configuration_residual(s, h);
    bool ok = res.has_value();
    if (ok)
        for (const auto& v : *res) ok = ok && v >= 0;
    if (!ok)
        throw InputError("components of F on " + surface_id +
                         " do not complete to the hyperplane class with exceptional curves");
    return s;
}

}  // namespace

std::vector<DivClass> theta_generators(const Catalog& c, const std::string& surface_id,
                                       const std::vector<WeightedClass>& components) {
    const SurfaceModel& s = theta_surface(c, surface_id, components);
    std::vector<DivClass> gens;
    for (const auto& w : components) gens.push_back(w.cls);
    for (const auto& r : s.neg2_classes) gens.push_back(r);
    return gens;
}

FgAbGroup coker_theta(const Catalog& c, const std::string& surface_id, const std::vector<WeightedClass>& components) {
    auto gens = theta_generators(c, surface_id, components);
    return coker_of(gens, c.get(surface_id).lattice->rank);
}

IntVec H2ModelR3::pushforward(const DivClass& d) {
    if (d.size() != 2) throw InputError("class is not in the Sigma,f basis");
    const Int& a = d.coeffs[0];
    const Int& b = d.coeffs[1];
    return {2 * a, b - a};
}

Int H2ModelR3::plane_degree(const DivClass& d) {
    if (d.size() != 2) throw InputError("class is not in the Sigma,f basis");
    return d.coeffs[0] + d.coeffs[1];
}

XiResult coker_xi_R3(const std::vector<WeightedClass>& decomposition) {
    if (decomposition.empty()) throw InputError("empty decomposition");
    DivClass total{0, 0};
    for (const auto& w : decomposition) {
        if (w.mult < 1) throw InputError("component multiplicities must be positive");
        if (w.cls.size() != 2) throw InputError("class is not in the Sigma,f basis");
        total = total + Int(w.mult) * w.cls;
    }
    if (total != DivClass{1, 2}) throw InputError("decomposition does not sum to Sigma+2f");
    XiResult r;
    std::vector<DivClass> gens;
    for (const auto& w : decomposition) {
        IntVec push = H2ModelR3::pushforward(w.cls);
        IntVec img{H2ModelR3::plane_degree(w.cls), push[0], push[1]};
        r.images.push_back(img);
        gens.emplace_back(img);
    }
    IntMatrix m = IntMatrix::from_columns(r.images, 3);
    r.injective = smith_normal_form(m).rank == gens.size();
    r.coker = coker_of(gens, 3);
    return r;
}

}  // namespace clv
