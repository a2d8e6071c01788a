#include "clv/surface_models.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#ifndef CLV_DEFAULT_CATALOG
#define CLV_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace clv {

using nlohmann::json;

json class_to_json(const DivClass& d) {
    json a = json::array();
    for (const auto& c : d.coeffs) a.push_back(to_ll(c));
    return a;
}

DivClass class_from_json(const json& j, std::size_t rank) {
    if (!j.is_array() || j.size() != rank)
        throw InputError("class must be an integer array of length " + std::to_string(rank) + ": " + j.dump());
    DivClass d;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("class entries must be integers: " + j.dump());
        d.coeffs.emplace_back(v.get<long long>());
    }
    return d;
}

namespace {

std::optional<IntLattice> lattice_for(const std::string& model) {
    if (model.empty()) return std::nullopt;
    if (model == "cubic") return cubic_lattice();
    if (model == "elliptic_cone") return elliptic_cone_lattice();
    if (model == "nonnormal_f3") return nonnormal_f3_lattice();
    if (model == "nonnormal_f1") return nonnormal_f1_lattice();
    throw InputError("unknown lattice model: " + model);
}

PointP3 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw InputError("point must be a 4-integer array: " + j.dump());
    std::array<Rat, 4> c;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_number_integer()) throw InputError("point coordinates must be integers: " + j.dump());
        c[i] = Rat(j[i].get<long long>());
    }
    return PointP3(c);
}

json point_to_json(const PointP3& p) {
    json a = json::array();
    for (const auto& c : p.coords) {
        if (denominator(c) != 1) throw InputError("catalog points must have integer coordinates");
        a.push_back(to_ll(numerator(c)));
    }
    return a;
}

template <typename T>
T require(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(where + ": field '" + key + "' has the wrong type");
    }
}

std::string canonical_poly(const MultiPoly& p) { return p.to_string(); }

}  // namespace

std::optional<DivClass> SurfaceModel::line_class(const LineP3& l) const {
    for (const auto& cl : lines)
        if (line_intersection_count(cl.line, l) == -1) return cl.cls;
    return std::nullopt;
}

const SurfaceModel* Catalog::find(const std::string& id) const {
    for (const auto& s : surfaces)
        if (s.id == id) return &s;
    return nullptr;
}

const SurfaceModel& Catalog::get(const std::string& id) const {
    const SurfaceModel* s = find(id);
    if (!s) throw InputError("unknown surface: " + id);
    return *s;
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) throw InputError(where + ": unknown field '" + k + "'");
}

Catalog parse_catalog_impl(const json& j, std::optional<std::array<Int, 2>> family_parameter) {
    if (!j.is_object()) throw InputError("catalog must be a JSON object");
    reject_unknown_keys(j, {"schema", "surfaces", "configurations"}, "catalog");
    Catalog c;
    c.schema = require<int>(j, "schema", "catalog");
    if (c.schema != 1) throw InputError("unsupported catalog schema version");
    for (const auto& sj : require<json>(j, "surfaces", "catalog")) {
        SurfaceModel s;
        s.id = require<std::string>(sj, "id", "surface");
        const std::string where = "surface " + s.id;
        reject_unknown_keys(sj,
                            {"id", "normal", "cone", "equation", "family", "singular_points", "lines", "lattice_model",
                             "basis", "neg2_classes", "exceptional_chains", "designated_chain",
                             "enumeration_degree_limit", "euler_number", "notes"},
                            where);
        s.normal = require<bool>(sj, "normal", where);
        s.cone = require<bool>(sj, "cone", where);
        s.lattice_model = sj.value("lattice_model", std::string{});
        s.lattice = lattice_for(s.lattice_model);
        if (s.lattice) {
            std::string tag = require<std::string>(sj, "basis", where);
            if (tag != s.lattice->basis_tag) throw InputError(where + ": basis tag does not match the lattice model");
        }
        const std::size_t rank = s.lattice ? s.lattice->rank : 0;
        if (sj.contains("equation")) {
            s.equation = parse_poly(require<std::string>(sj, "equation", where));
        } else if (sj.contains("family")) {
            const auto& fj = sj.at("family");
            for (const auto& cj : fj.at("cubics")) s.family_cubics.push_back(parse_poly(cj.get<std::string>()));
            if (s.family_cubics.size() != 2) throw InputError(where + ": a family needs exactly two base cubics");
            auto par = fj.at("parameter");
            s.family_parameter = {Int(par.at(0).get<long long>()), Int(par.at(1).get<long long>())};
            if (family_parameter) s.family_parameter = *family_parameter;
            if (s.family_parameter[0] == 0 && s.family_parameter[1] == 0)
                throw InputError(where + ": family parameter [0:0] is not a projective point");
            s.equation = s.family_cubics[0].scaled(Rat(s.family_parameter[0])) +
                         s.family_cubics[1].scaled(Rat(s.family_parameter[1]));
        }
        for (const auto& pj : sj.value("singular_points", json::array()))
            s.singular_points.push_back({point_from_json(pj.at("point")), pj.at("type").get<std::string>()});
        for (const auto& lj : sj.value("lines", json::array())) {
            const auto& f = lj.at("forms");
            if (f.size() != 2) throw InputError(where + ": a line needs two forms");
            CatalogLine cl{LineP3(parse_poly(f[0].get<std::string>()), parse_poly(f[1].get<std::string>())), {}};
            if (lj.contains("class")) {
                if (!s.lattice) throw InputError(where + ": line class given without a lattice model");
                cl.cls = class_from_json(lj.at("class"), rank);
            }
            s.lines.push_back(std::move(cl));
        }
        for (const auto& cj : sj.value("neg2_classes", json::array())) {
            if (!s.lattice) throw InputError(where + ": (-2)-classes given without a lattice model");
            s.neg2_classes.push_back(class_from_json(cj, rank));
        }
        for (const auto& ch : sj.value("exceptional_chains", json::array())) {
            ExceptionalChain e;
            e.point_index = ch.at("point").get<std::size_t>();
            for (const auto& cj : ch.at("classes")) e.classes.push_back(class_from_json(cj, rank));
            s.exceptional_chains.push_back(std::move(e));
        }
        if (sj.contains("designated_chain")) s.designated_chain = sj.at("designated_chain").get<std::size_t>();
        if (sj.contains("enumeration_degree_limit"))
            s.enumeration_degree_limit = sj.at("enumeration_degree_limit").get<int>();
        if (sj.contains("euler_number")) s.euler_number = sj.at("euler_number").get<int>();
        for (const auto& n : sj.value("notes", json::array())) s.notes.push_back(n.get<std::string>());
        if (c.find(s.id)) throw InputError("duplicate surface id: " + s.id);
        c.surfaces.push_back(std::move(s));
    }
    for (const auto& hj : j.value("configurations", json::array())) {
        HyperplaneChoice h;
        h.label = require<std::string>(hj, "label", "configuration");
        const std::string where = "configuration " + h.label;
        h.surface_id = require<std::string>(hj, "surface", where);
        const SurfaceModel* s = c.find(h.surface_id);
        if (!s) throw InputError(where + ": unknown surface " + h.surface_id);
        if (hj.contains("hyperplane")) h.hyperplane = parse_poly(hj.at("hyperplane").get<std::string>());
        h.F_type = require<std::string>(hj, "F_type", where);
        static const std::set<std::string> types{"CU", "L1", "QL", "L2", "L3", "RULINGS", "SMOOTH_ELLIPTIC"};
        if (!types.count(h.F_type)) throw InputError(where + ": unknown F_type " + h.F_type);
        for (const auto& cj : hj.at("components")) {
            if (!s->lattice) throw InputError(where + ": components need a lattice model");
            ConfigComponent comp;
            comp.cls = class_from_json(cj.at("class"), s->lattice->rank);
            comp.mult = cj.at("mult").get<int>();
            if (comp.mult < 1) throw InputError(where + ": multiplicity must be positive");
            if (cj.contains("factor")) comp.factor = parse_poly(cj.at("factor").get<std::string>());
            h.components.push_back(std::move(comp));
        }
        c.configurations.push_back(std::move(h));
    }
    return c;
}

}  // namespace

Catalog parse_catalog(const json& j, std::optional<std::array<Int, 2>> family_parameter) {
    try {
        return parse_catalog_impl(j, family_parameter);
    } catch (const json::exception& e) {
        throw InputError(std::string("catalog schema violation: ") + e.what());
    }
}

json serialize_catalog(const Catalog& c) {
    json j;
    j["schema"] = c.schema;
    json surfaces = json::array();
    for (const auto& s : c.surfaces) {
        json sj;
        sj["id"] = s.id;
        sj["normal"] = s.normal;
        sj["cone"] = s.cone;
        if (!s.lattice_model.empty()) {
            sj["lattice_model"] = s.lattice_model;
            sj["basis"] = s.lattice->basis_tag;
        }
        if (!s.family_cubics.empty()) {
            json fam;
            fam["cubics"] = json::array({canonical_poly(s.family_cubics[0]), canonical_poly(s.family_cubics[1])});
            fam["parameter"] = json::array({to_ll(s.family_parameter[0]), to_ll(s.family_parameter[1])});
            sj["family"] = fam;
        } else if (s.equation) {
            sj["equation"] = canonical_poly(*s.equation);
        }
        json pts = json::array();
        for (const auto& p : s.singular_points) pts.push_back({{"point", point_to_json(p.point)}, {"type", p.type}});
        sj["singular_points"] = pts;
        json lines = json::array();
        for (const auto& l : s.lines) {
            json lj;
            lj["forms"] = json::array({canonical_poly(l.line.forms[0]), canonical_poly(l.line.forms[1])});
            if (l.cls) lj["class"] = class_to_json(*l.cls);
            lines.push_back(lj);
        }
        sj["lines"] = lines;
        json neg2 = json::array();
        for (const auto& d : s.neg2_classes) neg2.push_back(class_to_json(d));
        sj["neg2_classes"] = neg2;
        json chains = json::array();
        for (const auto& ch : s.exceptional_chains) {
            json cl = json::array();
            for (const auto& d : ch.classes) cl.push_back(class_to_json(d));
            chains.push_back({{"point", ch.point_index}, {"classes", cl}});
        }
        sj["exceptional_chains"] = chains;
        if (s.designated_chain) sj["designated_chain"] = *s.designated_chain;
        if (s.enumeration_degree_limit) sj["enumeration_degree_limit"] = *s.enumeration_degree_limit;
        if (s.euler_number) sj["euler_number"] = *s.euler_number;
        sj["notes"] = s.notes;
        surfaces.push_back(sj);
    }
    j["surfaces"] = surfaces;
    json configs = json::array();
    for (const auto& h : c.configurations) {
        json hj;
        hj["label"] = h.label;
        hj["surface"] = h.surface_id;
        if (h.hyperplane) hj["hyperplane"] = canonical_poly(*h.hyperplane);
        hj["F_type"] = h.F_type;
        json comps = json::array();
        for (const auto& comp : h.components) {
            json cj;
            cj["class"] = class_to_json(comp.cls);
            cj["mult"] = comp.mult;
            if (comp.factor) cj["factor"] = canonical_poly(*comp.factor);
            comps.push_back(cj);
        }
        hj["components"] = comps;
        configs.push_back(hj);
    }
    j["configurations"] = configs;
    return j;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("CLV_CATALOG"); env && *env) return env;
    return CLV_DEFAULT_CATALOG;
}

Catalog load_catalog(const std::string& path, std::optional<std::array<Int, 2>> family_parameter) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open catalog file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("catalog is not valid JSON: " + std::string(e.what()));
    }
    Catalog c = parse_catalog(j, family_parameter);
    CatalogReport r = verify_catalog(c);
    for (const auto& s : r.surfaces)
        if (!s.pass()) throw InputError("catalog invariant failed for surface " + s.id + ": " + s.failures.front());
    if (!r.configuration_failures.empty())
        throw InputError("catalog configuration invalid: " + r.configuration_failures.front());
    return c;
}

int dynkin_rank(const std::string& label) {
    if (label.size() < 2) return 0;
    char k = label[0];
    if (k != 'A' && k != 'D' && k != 'E') return 0;
    try {
        return std::stoi(label.substr(1));
    } catch (...) {
        return 0;
    }
}

std::string dynkin_type(const IntLattice& lat, const std::vector<DivClass>& classes) {
    const std::size_t n = classes.size();
    if (n == 0) return "";
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pair(lat, classes[i], classes[i]) != -2) return "";
        for (std::size_t j = i + 1; j < n; ++j) {
            Int p = pair(lat, classes[i], classes[j]);
            if (p == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            } else if (p != 0) {
                return "";
            }
        }
    }
    if (edges + 1 != n) return "";
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) return "";
    std::size_t branch = n, branches = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() > 3) return "";
        if (adj[i].size() == 3) {
            branch = i;
            ++branches;
        }
    }
    const std::string N = std::to_string(n);
    if (branches == 0) return "A" + N;
    if (branches > 1) return "";
    std::vector<std::size_t> arms;
    for (auto start : adj[branch]) {
        std::size_t len = 1, prev = branch, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + N;
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + N;
    return "";
}

int euler_number(const SurfaceModel& s) {
    if (s.euler_number) return *s.euler_number;
    if (!s.normal || s.cone) throw InputError("no Euler number recorded for surface " + s.id);
    int total = 0;
    for (const auto& p : s.singular_points) {
        int r = dynkin_rank(p.type);
        if (r == 0) throw InputError("surface " + s.id + " has a singular point without an ADE label");
        total += r;
    }
    return 9 - total;
}

int second_betti(const SurfaceModel& s) { return euler_number(s) - 2; }

std::optional<IntVec> configuration_residual(const SurfaceModel& s, const HyperplaneChoice& h) {
    if (!s.lattice) return std::nullopt;
    DivClass residual = s.lattice->hyperplane_class;
    for (const auto& comp : h.components) residual = residual - Int(comp.mult) * comp.cls;
    if (s.neg2_classes.empty()) {
        for (const auto& c : residual.coeffs)
            if (c != 0) return std::nullopt;
        return IntVec{};
    }
    return solve_in_span(s.neg2_classes, residual);
}

std::vector<ConcurrentTriple> concurrent_coplanar_triples(const SurfaceModel& s) {
    std::vector<ConcurrentTriple> out;
    const auto& L = s.lines;
    auto coeffs = [](const LineP3& l) {
        return std::array<std::array<Rat, 4>, 2>{l.forms[0].linear_coefficients(), l.forms[1].linear_coefficients()};
    };
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            if (line_intersection_count(L[i].line, L[j].line) != 1) continue;
            auto a = coeffs(L[i].line), b = coeffs(L[j].line);
            // Common vector of the two form spans is the plane through both lines.
            std::vector<std::array<Rat, 4>> rows(4);
            for (std::size_t k = 0; k < 4; ++k) rows[k] = {a[0][k], a[1][k], -b[0][k], -b[1][k]};
            auto ker = kernel_basis(rows);
            if (ker.size() != 1) continue;
            std::array<Rat, 4> plane;
            for (std::size_t k = 0; k < 4; ++k) plane[k] = ker[0][0] * a[0][k] + ker[0][1] * a[1][k];
            for (std::size_t m = j + 1; m < L.size(); ++m) {
                auto c = coeffs(L[m].line);
                std::vector<std::vector<Rat>> span{{c[0].begin(), c[0].end()}, {c[1].begin(), c[1].end()},
                                                   {plane.begin(), plane.end()}};
                if (rational_rank(span) != 2) continue;
                auto pts = kernel_basis({a[0], a[1], b[0], b[1], c[0], c[1]});
                if (pts.size() != 1) continue;
                MultiPoly form;
                for (int k = 0; k < 4; ++k)
                    form = form + MultiPoly::var(k).scaled(plane[static_cast<std::size_t>(k)]);
                ConcurrentTriple t{{i, j, m}, form, PointP3(pts[0]), false};
                for (const auto& sp : s.singular_points)
                    if (sp.point == t.point) t.point_is_singular = true;
                out.push_back(std::move(t));
            }
        }
    return out;
}

bool CatalogReport::all_pass() const {
    for (const auto& s : surfaces)
        if (!s.pass()) return false;
    return configuration_failures.empty();
}

static bool is_normal_cubic_id(const std::string& id) { return id.size() >= 2 && id[0] == 'G'; }

std::size_t CatalogReport::cubic_line_checks() const {
    std::size_t n = 0;
    for (const auto& s : surfaces)
        if (is_normal_cubic_id(s.id)) n += s.lines_passed;
    return n;
}

std::size_t CatalogReport::cubic_point_checks() const {
    std::size_t n = 0;
    for (const auto& s : surfaces)
        if (is_normal_cubic_id(s.id)) n += s.points_passed;
    return n;
}

json CatalogReport::to_json() const {
    json j;
    j["schema"] = 1;
    json arr = json::array();
    for (const auto& s : surfaces) {
        arr.push_back({{"id", s.id},
                       {"pass", s.pass()},
                       {"lines", {{"checked", s.lines_checked}, {"passed", s.lines_passed}}},
                       {"singular_points", {{"checked", s.points_checked}, {"passed", s.points_passed}}},
                       {"neg2_classes", {{"checked", s.neg2_checked}, {"passed", s.neg2_passed}}},
                       {"line_pairs", {{"checked", s.line_pairs_checked}, {"passed", s.line_pairs_passed}}},
                       {"chains", {{"checked", s.chain_checks}, {"passed", s.chain_passed}}},
                       {"failures", s.failures},
                       {"flags", s.flags}});
    }
    j["surfaces"] = arr;
    j["configurations"] = {{"checked", configurations_checked}, {"failures", configuration_failures}};
    j["totals"] = {{"cubic_line_checks", cubic_line_checks()}, {"cubic_singular_point_checks", cubic_point_checks()}};
    j["pass"] = all_pass();
    return j;
}

static void check_surface(const SurfaceModel& s, SurfaceCheck& r) {
    auto fail = [&](const std::string& m) { r.failures.push_back(m); };
    if (s.equation) {
        if (!s.equation->is_homogeneous() || s.equation->total_degree() != 3) fail("equation is not a cubic form");
        for (std::size_t i = 0; i < s.lines.size(); ++i) {
            ++r.lines_checked;
            if (restrict_to_line(*s.equation, s.lines[i].line).is_zero())
                ++r.lines_passed;
            else
                fail("line " + s.lines[i].line.to_string() + " does not lie on the surface");
        }
        for (const auto& p : s.singular_points) {
            ++r.points_checked;
            if (jacobian_vanishes(*s.equation, p.point))
                ++r.points_passed;
            else
                fail("point " + p.point.to_string() + " (" + p.type + ") is not singular");
        }
    } else if (!s.lines.empty() || !s.singular_points.empty()) {
        fail("lines or singular points listed without an equation");
    }
    for (std::size_t i = 0; i < s.lines.size(); ++i)
        for (std::size_t j = i + 1; j < s.lines.size(); ++j) {
            ++r.line_pairs_checked;
            if (line_intersection_count(s.lines[i].line, s.lines[j].line) >= 0)
                ++r.line_pairs_passed;
            else
                fail("lines " + s.lines[i].line.to_string() + " and " + s.lines[j].line.to_string() + " coincide");
        }
    if (s.lattice) {
        const auto& lat = *s.lattice;
        for (const auto& c : s.neg2_classes) {
            ++r.neg2_checked;
            if (pair(lat, c, c) == -2 && pair(lat, c, lat.canonical_class) == 0)
                ++r.neg2_passed;
            else
                fail("(-2)-class " + format_class(lat, c) + " fails c^2=-2, c.K=0");
        }
        for (const auto& l : s.lines) {
            if (!l.cls) continue;
            if (pair(lat, *l.cls, *l.cls) != -1 || degree(lat, *l.cls) != 1)
                fail("line class " + format_class(lat, *l.cls) + " is not a (-1)-class of degree 1");
        }
        std::set<DivClass> in_chains;
        for (const auto& ch : s.exceptional_chains) {
            ++r.chain_checks;
            if (ch.point_index >= s.singular_points.size()) {
                fail("chain refers to a missing singular point");
                continue;
            }
            const std::string& label = s.singular_points[ch.point_index].type;
            std::string got = dynkin_type(lat, ch.classes);
            bool ok = got == label && negative_definite(lat, ch.classes);
            for (const auto& c : ch.classes) {
                in_chains.insert(c);
                if (std::find(s.neg2_classes.begin(), s.neg2_classes.end(), c) == s.neg2_classes.end()) {
                    ok = false;
                    fail("chain member " + format_class(lat, c) + " is not a listed (-2)-class");
                }
            }
            if (got != label) fail("chain over " + label + " point has intersection graph " + (got.empty() ? "non-ADE" : got));
            if (ok) ++r.chain_passed;
        }
        if (!s.exceptional_chains.empty() && in_chains.size() != s.neg2_classes.size())
            fail("(-2)-classes and chain members differ");
        if (s.designated_chain && *s.designated_chain >= s.exceptional_chains.size())
            fail("designated chain index out of range");
    }
    for (const auto& n : s.notes) r.flags.push_back(n);
}

CatalogReport verify_catalog(const Catalog& c) {
    CatalogReport rep;
    for (const auto& s : c.surfaces) {
        SurfaceCheck r;
        r.id = s.id;
        check_surface(s, r);
        rep.surfaces.push_back(std::move(r));
    }
    for (const auto& h : c.configurations) {
        ++rep.configurations_checked;
        const SurfaceModel* s = c.find(h.surface_id);
        const std::string where = "configuration " + h.label + ": ";
        if (!s) {
            rep.configuration_failures.push_back(where + "unknown surface");
            continue;
        }
        if (h.hyperplane) {
            if (h.hyperplane->total_degree() != 1 || !h.hyperplane->is_homogeneous()) {
                rep.configuration_failures.push_back(where + "hyperplane is not a linear form");
                continue;
            }
            bool have_factors = !h.components.empty();
            for (const auto& comp : h.components) have_factors = have_factors && comp.factor.has_value();
            if (have_factors && s->equation) {
                MultiPoly section = restrict_to_plane(*s->equation, *h.hyperplane);
                MultiPoly product = MultiPoly::constant(1);
                for (const auto& comp : h.components) {
                    MultiPoly f = restrict_to_plane(*comp.factor, *h.hyperplane);
                    if (f.total_degree() < 1) rep.configuration_failures.push_back(where + "factor is constant on the plane");
                    product = product * f.pow(static_cast<unsigned>(comp.mult));
                }
                if (!proportional(section, product))
                    rep.configuration_failures.push_back(where + "hyperplane section does not factor as listed");
            }
        }
        if (s->lattice && !h.components.empty()) {
            auto res = configuration_residual(*s, h);
            bool ok = res.has_value();
            if (ok)
                for (const auto& v : *res) ok = ok && v >= 0;
            if (!ok)
                rep.configuration_failures.push_back(where +
                                                     "components do not sum to the hyperplane class modulo exceptional curves");
        }
    }
    return rep;
}

ChainProfile exceptional_chain_profile(const Catalog& c, const std::string& surface_id, const DivClass& cls) {
    const SurfaceModel& s = c.get(surface_id);
    if (!s.lattice || s.lattice_model != "cubic" || s.exceptional_chains.empty())
        throw InputError("surface " + surface_id + " has no exceptional chain data");
    if (cls.size() != s.lattice->rank) throw InputError("class length differs from lattice rank");
    const auto& chain = s.exceptional_chains[s.designated_chain.value_or(0)];
    ChainProfile p;
    p.m = 0;
    for (const auto& r : chain.classes) {
        Int v = pair(*s.lattice, cls, r);
        p.chain_hits.push_back(v);
        p.m += v;
    }
    return p;
}

}  // namespace clv
