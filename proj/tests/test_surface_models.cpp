#include <doctest.h>

#include <fstream>
#include <sstream>

#include "clv/surface_models.hpp"

using namespace clv;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json catalog_json() { return json::parse(read_file(CLV_DEFAULT_CATALOG)); }

json& surface(json& j, const std::string& id) {
    for (auto& s : j["surfaces"])
        if (s["id"] == id) return s;
    throw std::runtime_error("no surface " + id);
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

const SurfaceCheck& check_of(const CatalogReport& r, const std::string& id) {
    for (const auto& s : r.surfaces)
        if (s.id == id) return s;
    throw std::runtime_error("no report for " + id);
}

// Two independent integer points on the line found by search, without the poly module's kernel routine.
std::vector<std::array<long long, 4>> brute_force_points(const LineP3& l) {
    auto f = l.forms[0].linear_coefficients(), g = l.forms[1].linear_coefficients();
    std::vector<std::array<long long, 4>> pts;
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (long long c = -2; c <= 2; ++c)
                for (long long d = -2; d <= 2; ++d) {
                    std::array<long long, 4> p{a, b, c, d};
                    Rat vf = 0, vg = 0;
                    for (int k = 0; k < 4; ++k) {
                        vf += f[k] * p[k];
                        vg += g[k] * p[k];
                    }
                    if (vf != 0 || vg != 0 || p == std::array<long long, 4>{0, 0, 0, 0}) continue;
                    bool independent = true;
                    for (const auto& q : pts) {
                        bool prop = true;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) prop = prop && p[i] * q[j] == p[j] * q[i];
                        independent = independent && !prop;
                    }
                    if (independent) pts.push_back(p);
                    if (pts.size() == 2) return pts;
                }
    return pts;
}

}  // namespace

TEST_CASE("catalog loads and rows match the published shapes") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    const SurfaceModel& g1 = c.get("G1");
    CHECK(g1.equation->to_string() == "x*y^2 + y*t^2 + z^3");
    REQUIRE(g1.singular_points.size() == 1);
    CHECK(g1.singular_points[0].type == "E6");
    CHECK(g1.singular_points[0].point == PointP3(1, 0, 0, 0));
    REQUIRE(g1.lines.size() == 1);
    CHECK(g1.lines[0].line.to_string() == "<y, z>");
    CHECK(c.get("G15").singular_points.size() == 4);
    CHECK(c.get("G15").lines.size() == 9);
    const SurfaceModel& r1 = c.get("R1");
    CHECK(r1.equation->to_string() == "x^2*z + y^3");
    CHECK_FALSE(r1.normal);
    CHECK(r1.cone);
    CHECK_THROWS_AS(c.get("G16"), InputError);
}

TEST_CASE("line and singular point counts per surface") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    const int lines[] = {1, 2, 3, 3, 3, 4, 5, 5, 6, 6, 6, 7, 7, 8, 9};
    const int points[] = {1, 2, 3, 1, 1, 2, 3, 3, 1, 1, 1, 2, 2, 3, 4};
    int total_lines = 0, total_points = 0;
    for (int i = 1; i <= 15; ++i) {
        const SurfaceModel& s = c.get("G" + std::to_string(i));
        CHECK(s.lines.size() == static_cast<std::size_t>(lines[i - 1]));
        CHECK(s.singular_points.size() == static_cast<std::size_t>(points[i - 1]));
        total_lines += lines[i - 1];
        total_points += points[i - 1];
    }
    CHECK(total_lines == 75);
    CHECK(total_points == 30);
    CatalogReport r = verify_catalog(c);
    CHECK(r.all_pass());
    CHECK(r.cubic_line_checks() == 75);
    CHECK(r.cubic_point_checks() == 30);
}

TEST_CASE("substitution oracle agrees with the line checks") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    int checked = 0;
    for (const auto& s : c.surfaces) {
        if (!s.equation) continue;
        for (const auto& l : s.lines) {
            auto pts = brute_force_points(l.line);
            REQUIRE(pts.size() == 2);
            for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, -3}}) {
                std::array<Rat, 4> p;
                for (int k = 0; k < 4; ++k) p[k] = a * pts[0][k] + b * pts[1][k];
                CHECK(s.equation->eval(p) == 0);
            }
            ++checked;
        }
    }
    CHECK(checked >= 75);
}

TEST_CASE("(-2)-class checks and chain profiles") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    const SurfaceModel& g5 = c.get("G5");
    DivClass r = parse_class(*g5.lattice, "H-E1-E2-E3");
    CHECK(pair(*g5.lattice, r, r) == -2);
    CHECK(pair(*g5.lattice, r, g5.lattice->canonical_class) == 0);
    const IntLattice& L = *c.get("G1").lattice;
    auto p = exceptional_chain_profile(c, "G1", parse_class(L, "E6"));
    CHECK(p.m == 1);
    CHECK(p.chain_hits == IntVec{0, 0, 0, 0, 1, 0});
    CHECK(exceptional_chain_profile(c, "G1", parse_class(L, "H-E1")).m == 1);
    CHECK(exceptional_chain_profile(c, "G2", parse_class(L, "2H-E1-E2-E5")).m == 1);
    CHECK_THROWS_AS(exceptional_chain_profile(c, "G7", parse_class(L, "E6")), InputError);
    CHECK_THROWS_AS(exceptional_chain_profile(c, "X9", parse_class(L, "E6")), InputError);
}

TEST_CASE("exceptional chain Dynkin types and (-2)-class counts") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    const IntLattice& L = *c.get("G1").lattice;
    CHECK(dynkin_type(L, c.get("G1").exceptional_chains[0].classes) == "E6");
    CHECK(dynkin_type(L, c.get("G2").exceptional_chains[0].classes) == "A5");
    CHECK(dynkin_type(L, c.get("G4").exceptional_chains[0].classes) == "A5");
    CHECK(dynkin_type(L, c.get("G5").exceptional_chains[0].classes) == "D5");
    CHECK(c.get("G1").neg2_classes.size() == 6);
    CHECK(c.get("G2").neg2_classes.size() == 6);
    CHECK(c.get("G4").neg2_classes.size() == 5);
    CHECK(c.get("G5").neg2_classes.size() == 5);
}

TEST_CASE("Euler numbers and Betti numbers of the normal cubics") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    for (int i = 1; i <= 15; ++i) {
        int expected = i <= 3 ? 1 : (i <= 8 ? 2 : 3);
        CHECK(second_betti(c.get("G" + std::to_string(i))) == expected);
    }
    CHECK(euler_number(c.get("ELLIPTIC_CONE")) == 1);
    CHECK_THROWS_AS(euler_number(c.get("R1")), InputError);
}

TEST_CASE("trailing separator row is flagged") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    CatalogReport r = verify_catalog(c);
    CHECK_FALSE(check_of(r, "G5").flags.empty());
    CHECK(check_of(r, "G5").pass());
}

TEST_CASE("catalog round trip is byte-stable") {
    std::string text = read_file(CLV_DEFAULT_CATALOG);
    Catalog c = parse_catalog(json::parse(text));
    CHECK(serialize_catalog(c).dump(2) + "\n" == text);
}

TEST_CASE("G13 family parameter") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    const SurfaceModel& g = c.get("G13");
    CHECK(g.family_parameter == std::array<Int, 2>{1, 1});
    CHECK(*g.equation == g.family_cubics[0] + g.family_cubics[1]);
    Catalog c2 = parse_catalog(catalog_json(), std::array<Int, 2>{2, 3});
    const SurfaceModel& g2 = c2.get("G13");
    CHECK(*g2.equation == g2.family_cubics[0].scaled(2) + g2.family_cubics[1].scaled(3));
    CHECK_THROWS_AS(parse_catalog(catalog_json(), std::array<Int, 2>{0, 0}), InputError);
}

TEST_CASE("negative controls: corrupted entries are caught") {
    SUBCASE("extra line <y,t> on G1") {
        json j = catalog_json();
        surface(j, "G1")["lines"].push_back({{"forms", {"y", "t"}}});
        CatalogReport r = verify_catalog(parse_catalog(j));
        CHECK_FALSE(r.all_pass());
        CHECK(mentions(check_of(r, "G1").failures, "<y, t>"));
    }
    SUBCASE("smooth point listed as singular") {
        json j = catalog_json();
        surface(j, "G1")["singular_points"][0]["point"] = {0, 1, 0, 0};
        CHECK_FALSE(check_of(verify_catalog(parse_catalog(j)), "G1").pass());
    }
    SUBCASE("(-2)-class with the wrong square") {
        json j = catalog_json();
        surface(j, "G5")["neg2_classes"][0] = {1, -1, -1, 0, 0, 0, 0};
        CHECK_FALSE(check_of(verify_catalog(parse_catalog(j)), "G5").pass());
    }
    SUBCASE("duplicated line") {
        json j = catalog_json();
        surface(j, "G4")["lines"].push_back({{"forms", {"z", "y"}}});
        CHECK_FALSE(check_of(verify_catalog(parse_catalog(j)), "G4").pass());
    }
    SUBCASE("chain label disagrees with the chain") {
        json j = catalog_json();
        surface(j, "G1")["singular_points"][0]["type"] = "A6";
        CHECK_FALSE(check_of(verify_catalog(parse_catalog(j)), "G1").pass());
    }
    SUBCASE("line class that is not a line") {
        json j = catalog_json();
        surface(j, "G5")["lines"][2]["class"] = {1, 0, 0, 0, 0, 0, 0};
        CHECK_FALSE(check_of(verify_catalog(parse_catalog(j)), "G5").pass());
    }
    SUBCASE("configuration factor not in the plane section") {
        json j = catalog_json();
        j["configurations"][1]["components"][0]["factor"] = "x";
        CHECK_FALSE(verify_catalog(parse_catalog(j)).configuration_failures.empty());
    }
    SUBCASE("configuration classes do not complete to -K") {
        json j = catalog_json();
        j["configurations"][1]["components"][0]["mult"] = 2;
        CHECK_FALSE(verify_catalog(parse_catalog(j)).configuration_failures.empty());
    }
    SUBCASE("load_catalog names the surface") {
        json j = catalog_json();
        surface(j, "G1")["lines"].push_back({{"forms", {"y", "t"}}});
        std::string path = "clv_corrupt_catalog.json";
        std::ofstream(path) << j.dump();
        try {
            load_catalog(path);
            FAIL("corrupted catalog loaded");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("G1") != std::string::npos);
        }
        std::remove(path.c_str());
    }
}

TEST_CASE("schema violations are input errors") {
    json j = catalog_json();
    surface(j, "G2").erase("normal");
    CHECK_THROWS_AS(parse_catalog(j), InputError);
    json k = catalog_json();
    surface(k, "G2")["colour"] = "red";
    CHECK_THROWS_AS(parse_catalog(k), InputError);
    json m = catalog_json();
    surface(m, "G2")["singular_points"][0]["point"] = "origin";
    CHECK_THROWS_AS(parse_catalog(m), InputError);
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), InputError);
}

TEST_CASE("concurrent coplanar line triples through singular points") {
    Catalog c = load_catalog(CLV_DEFAULT_CATALOG);
    auto has = [&](const std::string& id, const char* plane) {
        for (const auto& t : concurrent_coplanar_triples(c.get(id)))
            if (t.point_is_singular && proportional(t.plane, parse_poly(plane))) return true;
        return false;
    };
    CHECK(has("G4", "y"));
    CHECK(has("G9", "y"));
    CHECK(has("G10", "y"));
    CHECK(has("G11", "x-t"));
    CHECK_FALSE(has("G5", "y"));
}
