#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clv/lattice.hpp"
#include "clv/poly.hpp"

namespace clv {

struct SingularPoint {
    PointP3 point;
    std::string type;  // A1..An, Dn, E6, or NONNORMAL for a sample point of the double line
};

struct CatalogLine {
    LineP3 line;
    std::optional<DivClass> cls;  // only where the correspondence is known
};

struct ExceptionalChain {
    std::size_t point_index = 0;
    std::vector<DivClass> classes;
};

struct SurfaceModel {
    std::string id;
    std::optional<MultiPoly> equation;  // absent for the elliptic cone
    std::vector<MultiPoly> family_cubics;  // two base cubics for a one-parameter family
    std::array<Int, 2> family_parameter{1, 1};
    bool normal = true;
    bool cone = false;
    std::vector<SingularPoint> singular_points;
    std::vector<CatalogLine> lines;
    std::string lattice_model;  // cubic | elliptic_cone | nonnormal_f3 | nonnormal_f1 | ""
    std::optional<IntLattice> lattice;
    std::vector<DivClass> neg2_classes;
    std::vector<ExceptionalChain> exceptional_chains;
    std::optional<std::size_t> designated_chain;
    std::optional<int> enumeration_degree_limit;
    std::optional<int> euler_number;  // stored only when it cannot be computed from the chains
    std::vector<std::string> notes;

    std::optional<DivClass> line_class(const LineP3& l) const;
};

struct ConfigComponent {
    DivClass cls;
    int mult = 1;
    std::optional<MultiPoly> factor;  // ambient equation cutting the component inside the plane
};

struct HyperplaneChoice {
    std::string label;
    std::string surface_id;
    std::optional<MultiPoly> hyperplane;
    std::string F_type;  // CU, L1, QL, L2, L3, RULINGS, SMOOTH_ELLIPTIC
    std::vector<ConfigComponent> components;
};

struct Catalog {
    int schema = 1;
    std::vector<SurfaceModel> surfaces;
    std::vector<HyperplaneChoice> configurations;

    const SurfaceModel* find(const std::string& id) const;
    const SurfaceModel& get(const std::string& id) const;  // throws InputError
};

// Builds the catalog from JSON without checking invariants.
Catalog parse_catalog(const nlohmann::json& j, std::optional<std::array<Int, 2>> family_parameter = std::nullopt);
nlohmann::json serialize_catalog(const Catalog& c);

std::string default_catalog_path();  // CLV_CATALOG if set, else the shipped file
// Parses and verifies; throws InputError naming the surface and entry on any failure.
Catalog load_catalog(const std::string& path, std::optional<std::array<Int, 2>> family_parameter = std::nullopt);

struct SurfaceCheck {
    std::string id;
    std::size_t lines_checked = 0, lines_passed = 0;
    std::size_t points_checked = 0, points_passed = 0;
    std::size_t neg2_checked = 0, neg2_passed = 0;
    std::size_t line_pairs_checked = 0, line_pairs_passed = 0;
    std::size_t chain_checks = 0, chain_passed = 0;
    std::vector<std::string> failures;
    std::vector<std::string> flags;
    bool pass() const { return failures.empty(); }
};

struct CatalogReport {
    std::vector<SurfaceCheck> surfaces;
    std::vector<std::string> configuration_failures;
    std::size_t configurations_checked = 0;
    bool all_pass() const;
    // Totals restricted to the normal cubics G1..G15.
    std::size_t cubic_line_checks() const;
    std::size_t cubic_point_checks() const;
    nlohmann::json to_json() const;
};

CatalogReport verify_catalog(const Catalog& c);

struct ChainProfile {
    Int m;
    std::vector<Int> chain_hits;
};

ChainProfile exceptional_chain_profile(const Catalog& c, const std::string& surface_id, const DivClass& cls);

// Dynkin label of a (-2)-configuration read off its intersection graph, or "" if not ADE.
std::string dynkin_type(const IntLattice& lat, const std::vector<DivClass>& classes);
int dynkin_rank(const std::string& label);

// Euler number of a normal cubic: 9 minus the total rank of its singular points.
int euler_number(const SurfaceModel& s);
int second_betti(const SurfaceModel& s);

// Residual -K minus the weighted components, as coefficients on the (-2)-classes, if it lies in their span.
std::optional<IntVec> configuration_residual(const SurfaceModel& s, const HyperplaneChoice& h);

// Triples of listed lines lying in a common plane and passing through a common point.
struct ConcurrentTriple {
    std::array<std::size_t, 3> lines;
    MultiPoly plane;
    PointP3 point;
    bool point_is_singular = false;
};
std::vector<ConcurrentTriple> concurrent_coplanar_triples(const SurfaceModel& s);

// Minimal JSON helpers shared by the reports.
nlohmann::json class_to_json(const DivClass& d);
DivClass class_from_json(const nlohmann::json& j, std::size_t rank);

}  // namespace clv
