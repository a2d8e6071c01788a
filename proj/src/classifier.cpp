#include "clv/classifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "clv/curve_enum.hpp"
#include "clv/homology.hpp"

namespace clv {

using nlohmann::json;

namespace {

int json_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw InputError(std::string("descriptor field '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

std::array<Rat, 4> coeffs_of(const MultiPoly& p) { return p.linear_coefficients(); }

bool in_span(const std::vector<MultiPoly>& span, const MultiPoly& h) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : span) {
        auto c = coeffs_of(f);
        rows.emplace_back(c.begin(), c.end());
    }
    std::size_t r = rational_rank(rows);
    auto c = coeffs_of(h);
    rows.emplace_back(c.begin(), c.end());
    return rational_rank(rows) == r;
}

// gamma with h proportional to tail - gamma*head; nullopt means gamma = infinity.
std::optional<Rat> gamma_of(const MultiPoly& tail, const MultiPoly& head, const MultiPoly& h) {
    auto t = coeffs_of(tail), hd = coeffs_of(head), v = coeffs_of(h);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            Rat det = t[i] * hd[j] - t[j] * hd[i];
            if (det == 0) continue;
            Rat alpha = (v[i] * hd[j] - v[j] * hd[i]) / det;
            Rat beta = (t[i] * v[j] - t[j] * v[i]) / det;
            if (alpha == 0) return std::nullopt;
            return -beta / alpha;
        }
    throw StructuralError("degenerate hyperplane family");
}

Reason reason(std::string id, std::string detail, bool ok) { return {std::move(id), std::move(detail), ok}; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Degrees admitted by the curve-class data of the surface, or nullopt when no data constrains them.
struct DegreeCheck {
    bool known = false;
    bool feasible = true;
    std::string detail;
    std::optional<std::string> flag;
};

DegreeCheck degree_check(const TripleDescriptor& d, const SurfaceModel& s, const Catalog& c) {
    DegreeCheck out;
    std::string model;
    if (s.id == "ELLIPTIC_CONE") model = "ELLIPTIC_CONE";
    if (s.id == "R1" || s.id == "R2") model = "R12";
    if (s.id == "R3" || s.id == "R4") model = "R34";
    if (!model.empty()) {
        out.known = true;
        auto classes = hirzebruch_degree_genus(model, d.curve_degree);
        out.feasible = std::any_of(classes.begin(), classes.end(),
                                   [&](const HirzebruchClass& h) { return h.genus == d.curve_genus; });
        out.detail = model + " classes of degree " + std::to_string(d.curve_degree) + " with genus " +
                     std::to_string(d.curve_genus) + ": " + (out.feasible ? "present" : "none");
        return out;
    }
    if (s.lattice && s.lattice_model == "cubic" && !s.neg2_classes.empty() && d.curve_genus == 0) {
        if (s.enumeration_degree_limit && d.curve_degree > *s.enumeration_degree_limit) {
            out.flag = "degree " + std::to_string(d.curve_degree) + " on " + s.id +
                       " lies beyond the documented enumeration limit";
            return out;
        }
        out.known = true;
        auto sol = enumerate_curve_classes(c, s.id, d.curve_degree);
        out.feasible = !sol.classes.empty();
        if (d.curve_class) {
            bool listed = std::find(sol.classes.begin(), sol.classes.end(), *d.curve_class) != sol.classes.end();
            out.feasible = out.feasible && listed;
            out.detail = "class " + format_class(*s.lattice, *d.curve_class) +
                         (listed ? " is" : " is not") + " an enumerated smooth rational class of degree " +
                         std::to_string(d.curve_degree);
        } else {
            out.detail = std::to_string(sol.classes.size()) + " smooth rational classes of degree " +
                         std::to_string(d.curve_degree) + " on " + s.id;
        }
    }
    return out;
}

std::string gamma_text(const std::optional<Rat>& g) { return g ? "gamma = " + rat_to_string(*g) : "gamma = infinity"; }

}  // namespace

TripleDescriptor descriptor_from_json(const json& j, const Catalog& c) {
    if (!j.is_object()) throw InputError("descriptor must be a JSON object");
    TripleDescriptor d;
    d.curve_genus = json_int(j, "curve_genus");
    d.curve_degree = json_int(j, "curve_degree");
    if (!j.contains("surface_id") || !j.at("surface_id").is_string())
        throw InputError("descriptor field 'surface_id' must be a string");
    d.surface_id = j.at("surface_id").get<std::string>();
    const SurfaceModel& s = c.get(d.surface_id);
    if (j.contains("hyperplane") && !j.at("hyperplane").is_null()) {
        if (!j.at("hyperplane").is_string()) throw InputError("descriptor field 'hyperplane' must be a string");
        d.hyperplane = parse_poly(j.at("hyperplane").get<std::string>());
    }
    if (!j.contains("incidence") || !j.at("incidence").is_object())
        throw InputError("descriptor field 'incidence' must be an object with N1, N2, N12");
    const json& inc = j.at("incidence");
    d.N1 = json_int(inc, "N1");
    d.N2 = json_int(inc, "N2");
    d.N12 = json_int(inc, "N12");
    if (j.contains("delta_iso") && !j.at("delta_iso").is_null()) {
        if (!j.at("delta_iso").is_boolean()) throw InputError("descriptor field 'delta_iso' must be a boolean");
        d.delta_iso = j.at("delta_iso").get<bool>();
    }
    d.sharp_C_cap_S1 = j.contains("sharp_C_cap_S1") ? json_int(j, "sharp_C_cap_S1") : d.N1;
    d.B2_F = json_int(j, "B2_F");
    if (j.contains("curve_class") && !j.at("curve_class").is_null()) {
        if (!s.lattice) throw InputError("surface " + s.id + " has no lattice for 'curve_class'");
        const json& cc = j.at("curve_class");
        d.curve_class = cc.is_string() ? parse_class(*s.lattice, cc.get<std::string>())
                                       : class_from_json(cc, s.lattice->rank);
    }
    if (j.contains("vertex_on_S1")) {
        if (!j.at("vertex_on_S1").is_boolean()) throw InputError("descriptor field 'vertex_on_S1' must be a boolean");
        d.vertex_on_S1 = j.at("vertex_on_S1").get<bool>();
    }
    return d;
}

json descriptor_to_json(const TripleDescriptor& d, const Catalog& c) {
    json j;
    j["curve_genus"] = d.curve_genus;
    j["curve_degree"] = d.curve_degree;
    j["surface_id"] = d.surface_id;
    j["hyperplane"] = d.hyperplane ? json(d.hyperplane->to_string()) : json(nullptr);
    j["incidence"] = {{"N1", d.N1}, {"N2", d.N2}, {"N12", d.N12}};
    j["delta_iso"] = d.delta_iso ? json(*d.delta_iso) : json(nullptr);
    j["sharp_C_cap_S1"] = d.sharp_C_cap_S1;
    j["B2_F"] = d.B2_F;
    if (d.curve_class) j["curve_class"] = format_class(*c.get(d.surface_id).lattice, *d.curve_class);
    j["vertex_on_S1"] = d.vertex_on_S1;
    return j;
}

json CaseOutcome::to_json() const {
    json j;
    j["schema"] = 1;
    j["case"] = case_letter;
    j["iso_class"] = iso_class;
    j["matched_pair"] = matched_pair ? json(*matched_pair) : json(nullptr);
    j["parameter"] = parameter ? json(*parameter) : json(nullptr);
    j["reasons"] = json::array();
    for (const auto& r : reasons)
        j["reasons"].push_back({{"constraint", r.constraint}, {"detail", r.detail}, {"satisfied", r.satisfied}});
    j["flags"] = flags;
    return j;
}

namespace {

MultiPoly v(const char* s) { return parse_poly(s); }

// Families used by cases b, c and f in addition to the admitted (d)/(e) list.
struct FamilyEntry {
    std::string case_letter;
    std::string surface_id;
    std::string hyperplane;
    HyperplaneFamily family;
};

std::vector<FamilyEntry> all_families() {
    std::vector<FamilyEntry> out;
    for (const auto& p : admitted_pairs()) out.push_back({p.case_letter, p.surface_id, p.hyperplane, p.family});
    out.push_back({"b", "R1", "{y=gamma*x}", {"y - gamma*x, gamma in C", {v("y"), v("x")}, "C"}});
    out.push_back({"c", "R2", "{y=gamma*x}", {"y - gamma*x, gamma in P1", {v("y"), v("x")}, "P1"}});
    out.push_back({"f", "R1", "{z=0}", {"z", {v("z")}, ""}});
    return out;
}

bool family_contains(const HyperplaneFamily& f, const MultiPoly& h, std::optional<Rat>* gamma) {
    if (!in_span(f.span, h)) return false;
    if (f.span.size() == 1) return true;
    auto g = gamma_of(f.span[0], f.span[1], h);
    if (!g && f.gamma_domain == "C") return false;
    *gamma = g;
    return true;
}

CaseOutcome reject(CaseOutcome o) {
    o.case_letter = "REJECT";
    o.iso_class = "UNKNOWN";
    return o;
}

}  // namespace

std::vector<AdmittedPair> admitted_pairs() {
    auto fixed = [](const char* form) { return HyperplaneFamily{form, {v(form)}, ""}; };
    return {
        {"{y=0}", "G1", "d", fixed("y"), "cokernel G1-triple-line trivial"},
        {"{z=gamma*y}", "G5", "d", {"z - gamma*y, gamma in P1", {v("z"), v("y")}, "P1"},
         "cokernel G5-conic-tangent-line-z trivial"},
        {"{t=0}", "G6", "d", fixed("t"), "line plus double line <y,t>, <x,t> on G6"},
        {"{y=0}", "G9", "d", fixed("y"), "concurrent coplanar lines through the singular point of G9"},
        {"{y=0}", "G10", "d", fixed("y"), "concurrent coplanar lines through the singular point of G10"},
        {"{x=t}", "G11", "d", fixed("x-t"), "concurrent coplanar lines through the singular point of G11"},
        {"{x=0}", "R1", "d", fixed("x"), "R12 degree/genus table"},
        {"{y=gamma*x}", "R3", "d", {"y - gamma*x, gamma in P1", {v("y"), v("x")}, "P1"}, "xi cokernels on R3"},
        {"{x=0}", "R4", "d", fixed("x"), "R34 degree/genus table"},
        {"{y=0}", "G2", "e", fixed("y"), "cokernel G2-line-double-line trivial"},
        {"{y=0}", "G4", "e", fixed("y"), "cokernel G4-three-lines trivial"},
        {"{y=gamma*x}", "R4", "e", {"y - gamma*x, gamma in C", {v("y"), v("x")}, "C"}, "R34 degree/genus table"},
    };
}

CaseOutcome classify(const TripleDescriptor& d, const Catalog& c) {
    CaseOutcome o;
    o.iso_class = "UNKNOWN";
    const SurfaceModel& s = c.get(d.surface_id);
    if (d.curve_degree < 1) throw InputError("curve degree must be at least 1");
    if (d.curve_genus < 0) throw InputError("curve genus must be nonnegative");
    EulerBudget{0, d.curve_genus, d.N1, d.N2, d.N12}.validate();
    if (d.sharp_C_cap_S1 != d.N1) throw InputError("sharp_C_cap_S1 must equal N1");
    if (d.B2_F < 0) throw InputError("B2_F must be nonnegative");
    if (d.hyperplane && (!d.hyperplane->is_homogeneous() || d.hyperplane->total_degree() != 1))
        throw InputError("hyperplane must be a homogeneous linear form");
    if (!d.hyperplane && s.id != "ELLIPTIC_CONE") throw InputError("hyperplane is required for " + s.id);
    if (d.curve_class) {
        if (!s.lattice || d.curve_class->size() != s.lattice->rank)
            throw InputError("curve class does not match the lattice of " + s.id);
        Int deg = degree(*s.lattice, *d.curve_class);
        Int g = arithmetic_genus(*s.lattice, *d.curve_class);
        bool ok = deg == d.curve_degree && g == d.curve_genus;
        o.reasons.push_back(reason("curve class degree and genus",
                                   "degree " + deg.str() + ", genus " + g.str() + " for " +
                                       format_class(*s.lattice, *d.curve_class),
                                   ok));
        if (!ok) return reject(o);
    }

    bool genus_ok = d.curve_genus <= 1;
    o.reasons.push_back(reason("genus bound p_a(C) <= 1", "p_a(C) = " + std::to_string(d.curve_genus), genus_ok));
    if (!genus_ok) return reject(o);

    DegreeCheck dc = degree_check(d, s, c);
    if (dc.flag) o.flags.push_back(*dc.flag);
    if (dc.known) {
        o.reasons.push_back(reason("curve class exists for the degree", dc.detail, dc.feasible));
        if (!dc.feasible) return reject(o);
    }

    if (d.curve_genus == 1) {
        bool cone = s.id == "ELLIPTIC_CONE";
        o.reasons.push_back(reason("elliptic curve lies on the elliptic cone", "surface " + s.id, cone));
        if (!cone) return reject(o);
        bool deg_ok = d.curve_degree == 3 || d.curve_degree == 4;
        o.reasons.push_back(reason("elliptic curve degree in {3,4}", "degree " + std::to_string(d.curve_degree), deg_ok));
        if (!deg_ok) return reject(o);
        o.reasons.push_back(reason("S1 contains the cone vertex", yes_no(d.vertex_on_S1), d.vertex_on_S1));
        if (!d.vertex_on_S1) return reject(o);
        bool n_ok = d.N1 == d.B2_F;
        o.reasons.push_back(reason("#(C cap S1) = B2(F)",
                                   std::to_string(d.N1) + " vs " + std::to_string(d.B2_F), n_ok));
        if (!n_ok) return reject(o);
        o.case_letter = "a";
        o.iso_class = "A3";
        o.matched_pair = "elliptic cone with vertex on S1";
        return o;
    }

    if (s.id == "ELLIPTIC_CONE") {
        o.reasons.push_back(reason("pair in the admitted list", "rational curve on the elliptic cone", false));
        return reject(o);
    }

    std::optional<FamilyEntry> match;
    std::optional<Rat> gamma;
    for (const auto& f : all_families()) {
        if (f.surface_id != s.id) continue;
        std::optional<Rat> g;
        if (family_contains(f.family, *d.hyperplane, &g)) {
            match = f;
            gamma = g;
            if (f.family.span.size() > 1) o.parameter = gamma_text(g);
            break;
        }
    }
    if (!match) {
        o.reasons.push_back(reason("pair in the admitted list",
                                   "({" + d.hyperplane->to_string() + "=0}, " + s.id + ") matches no entry", false));
        return reject(o);
    }
    o.matched_pair = "(" + match->hyperplane + ", " + s.id + ")";
    o.reasons.push_back(reason("pair in the admitted list", *o.matched_pair + " case " + match->case_letter, true));
    if (match->family.span.size() > 1 && !gamma && s.id == "R3")
        o.flags.push_back("gamma = infinity on R3 accepted as in the theorem statement");

    const std::string& k = match->case_letter;
    auto accept = [&](const char* iso) {
        o.case_letter = k;
        o.iso_class = iso;
        return o;
    };
    if (k == "b" || k == "c") {
        bool deg_ok = d.curve_degree == 3 || d.curve_degree == 4;
        o.reasons.push_back(reason("rational curve degree in {3,4}", "degree " + std::to_string(d.curve_degree), deg_ok));
        if (!deg_ok) return reject(o);
        int want = k == "b" ? d.B2_F : d.B2_F + 1;
        bool n_ok = d.N1 == want;
        o.reasons.push_back(reason(k == "b" ? "#(C cap S1) = B2(F)" : "#(C cap S1) = B2(F) + 1",
                                   std::to_string(d.N1) + " vs " + std::to_string(want), n_ok));
        if (!n_ok) return reject(o);
        return accept("A3");
    }
    if (k == "d") {
        bool n_ok = d.N1 == 1;
        o.reasons.push_back(reason("#(C cap S1) = 1", "N1 = " + std::to_string(d.N1), n_ok));
        if (!n_ok) return reject(o);
        return accept("A3");
    }
    if (k == "e") {
        std::optional<bool> delta = d.delta_iso;
        if (d.curve_class && s.lattice && s.lattice_model == "cubic") {
            bool lattice_delta = pair(*s.lattice, *d.curve_class, parse_class(*s.lattice, "H-E1")) == 1;
            if (!delta) {
                delta = lattice_delta;
                o.reasons.push_back(reason("delta from C.(H-E1) = 1", yes_no(lattice_delta), lattice_delta));
            } else if (*delta != lattice_delta) {
                o.flags.push_back("supplied delta_iso differs from the lattice value C.(H-E1) = 1");
            }
        }
        bool delta_ok = delta.value_or(false);
        o.reasons.push_back(reason("H1 isomorphism delta", delta ? yes_no(*delta) : "not supplied", delta_ok));
        if (!delta_ok) return reject(o);
        bool n_ok = d.N1 == 2;
        o.reasons.push_back(reason("#(C cap S1) = 2 forced by delta", "N1 = " + std::to_string(d.N1), n_ok));
        if (!n_ok) return reject(o);
        return accept("A3");
    }
    // Case f: the non-A3 example triple.
    bool deg_ok = d.curve_degree == 1;
    o.reasons.push_back(reason("line through the vertex: degree 1", "degree " + std::to_string(d.curve_degree), deg_ok));
    if (!deg_ok) return reject(o);
    bool n_ok = d.N1 == 1;
    o.reasons.push_back(reason("#(C cap S1) = 1", "N1 = " + std::to_string(d.N1), n_ok));
    if (!n_ok) return reject(o);
    return accept("A1xW32");
}

TripleDescriptor canonical_descriptor(const AdmittedPair& p, const Catalog& c) {
    TripleDescriptor d;
    d.curve_genus = 0;
    d.surface_id = p.surface_id;
    d.hyperplane = p.family.span[0];
    d.curve_degree = 1;
    d.N1 = d.N2 = d.N12 = 1;
    d.sharp_C_cap_S1 = 1;
    d.B2_F = 1;
    const SurfaceModel& s = c.get(p.surface_id);
    if (p.surface_id == "G1") d.curve_class = parse_class(*s.lattice, "E6");
    if (p.surface_id == "G5") d.curve_class = parse_class(*s.lattice, "E5");
    if (p.case_letter == "e") {
        d.N1 = d.sharp_C_cap_S1 = 2;
        d.delta_iso = true;
        if (p.surface_id == "G2") {
            d.curve_degree = 3;
            d.curve_class = parse_class(*s.lattice, "2H-E1-E2-E5");
        }
        if (p.surface_id == "G4") {
            d.curve_degree = 2;
            d.curve_class = parse_class(*s.lattice, "H-E5");
        }
    }
    return d;
}

bool ExampleReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

json ExampleReport::to_json() const {
    json j;
    j["schema"] = 1;
    j["w32_polynomial"] = w32_polynomial;
    j["checks"] = json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["all_pass"] = all_pass();
    return j;
}

ExampleReport example_nonA3_checks(const Catalog& c) {
    ExampleReport r;
    r.w32_polynomial = "(zx+1)^2-(zy+1)^3-y";
    const SurfaceModel& s = c.get("R1");
    const MultiPoly& eq = *s.equation;
    LineP3 C(v("x-y"), v("x+z"));
    MultiPoly S1 = v("z");

    MultiPoly on_s2 = restrict_to_line(eq, C);
    r.checks.push_back({"C lies on S2", on_s2.is_zero(), "restriction = " + on_s2.to_string()});
    MultiPoly on_s1 = restrict_to_line(S1, C);
    r.checks.push_back({"S1 does not contain C", !on_s1.is_zero(), "restriction = " + on_s1.to_string()});

    std::vector<std::array<Rat, 4>> rows{coeffs_of(C.forms[0]), coeffs_of(C.forms[1]), coeffs_of(S1)};
    auto ker = kernel_basis(rows);
    bool single = ker.size() == 1 && PointP3(ker[0]) == PointP3(0, 0, 0, 1);
    r.checks.push_back({"C meets S1 in exactly [0:0:0:1]", single,
                        ker.size() == 1 ? PointP3(ker[0]).to_string() : std::to_string(ker.size()) + "-dim kernel"});

    // f^*(x) = x, f^*(y) = y/a, f^*(z) = z/a^3, f^*(t) = t with a = 2.
    const Rat a = 2;
    std::array<MultiPoly, 4> pull{v("x"), v("y").scaled(1 / a), v("z").scaled(1 / (a * a * a)), v("t")};
    bool preserves_s2 = proportional(eq.substitute(pull), eq);
    bool preserves_s1 = proportional(S1.substitute(pull), S1);
    r.checks.push_back({"coordinate change preserves S1 and S2", preserves_s1 && preserves_s2,
                        "f^*(S2) = " + eq.substitute(pull).to_string()});
    // C_a = {y = a x, z = -a^2 y}; f(C_a) = C iff f^* of the forms of C vanish on C_a.
    LineP3 Ca(v("y-2*x"), v("z+4*y"));
    bool on = restrict_to_line(eq, Ca).is_zero();
    bool maps = restrict_to_line(C.forms[0].substitute(pull), Ca).is_zero() &&
                restrict_to_line(C.forms[1].substitute(pull), Ca).is_zero();
    r.checks.push_back({"{y=2x, z=-4y} lies on S2 and maps to C", on && maps, Ca.to_string()});

    MultiPoly w = parse_poly("(z*x+1)^2-(z*y+1)^3-y");
    bool nonconstant = w.total_degree() == 6;
    r.checks.push_back({"W(3,2) expression parses", nonconstant, w.to_string()});
    return r;
}

ExampleReport verify_example_nonA3(const Catalog& c) {
    ExampleReport r = example_nonA3_checks(c);
    for (const auto& ch : r.checks)
        if (!ch.pass) throw StructuralError("example check failed: " + ch.name);
    return r;
}

std::size_t LemmaReport::failures() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const LemmaEntry& e) { return !e.pass; }));
}

json LemmaReport::to_json() const {
    json j;
    j["schema"] = 1;
    j["entries"] = json::array();
    for (const auto& e : entries)
        j["entries"].push_back({{"id", e.id},
                                {"description", e.description},
                                {"expected", e.expected},
                                {"computed", e.computed},
                                {"status", e.pass ? "PASS" : "FAIL"}});
    j["total"] = entries.size();
    j["failures"] = failures();
    return j;
}

std::string LemmaReport::to_markdown() const {
    std::ostringstream os;
    os << "| id | status | expected | computed |\n|---|---|---|---|\n";
    for (const auto& e : entries)
        os << "| " << e.id << " | " << (e.pass ? "PASS" : "FAIL") << " | " << e.expected << " | " << e.computed << " |\n";
    os << "\n" << entries.size() - failures() << "/" << entries.size() << " entries pass\n";
    return os.str();
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string class_set(const IntLattice& lat, std::vector<DivClass> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::string> s;
    for (const auto& d : v) s.push_back(format_class(lat, d));
    return "{" + join(s) + "}";
}

std::vector<DivClass> parse_classes(const IntLattice& lat, const std::vector<std::string>& v) {
    std::vector<DivClass> out;
    for (const auto& s : v) out.push_back(parse_class(lat, s));
    return out;
}

class Replay {
public:
    explicit Replay(const Catalog& c) : c_(c) {}

    template <class F>
    void add(const std::string& id, const std::string& description, const std::string& expected, F&& compute) {
        LemmaEntry e{id, description, expected, "", false};
        try {
            e.computed = compute();
            e.pass = e.computed == expected;
        } catch (const std::exception& ex) {
            e.computed = std::string("error: ") + ex.what();
        }
        report.entries.push_back(std::move(e));
    }

    LemmaReport report;

private:
    const Catalog& c_;
};

std::vector<WeightedClass> config_components(const Catalog& c, const std::string& label) {
    for (const auto& h : c.configurations)
        if (h.label == label) {
            std::vector<WeightedClass> out;
            for (const auto& comp : h.components) out.push_back({comp.cls, comp.mult});
            return out;
        }
    throw InputError("no configuration labelled " + label);
}

std::string tuples_text(int n) {
    std::vector<std::string> s;
    for (const auto& t : enumerate_tuples(n)) s.push_back(t.to_string());
    return join(s);
}

}  // namespace

LemmaReport run_all_lemmas(const Catalog& c) {
    Replay r(c);
    const IntLattice cub = cubic_lattice();

    r.add("lattice.pairing-degree", "2H-E1-E2-E5 paired with -K", "3", [&] {
        return pair(cub, parse_class(cub, "2H-E1-E2-E5"), -cub.canonical_class).str();
    });
    r.add("lattice.genus-elliptic-cone", "p_a(2Sigma+6f) on the elliptic cone model", "4", [&] {
        return arithmetic_genus(elliptic_cone_lattice(), DivClass{2, 6}).str();
    });
    r.add("lattice.genus-nonnormal-f3", "p_a(2Sigma+6f) on the non-normal F3 model", "2", [&] {
        return arithmetic_genus(nonnormal_f3_lattice(), DivClass{2, 6}).str();
    });
    r.add("lattice.snf-cuspidal-theta", "invariant factors of the G1 cuspidal generator matrix", "1,1,1,1,1,1,3", [&] {
        auto gens = parse_classes(cub, {"H", "H-E1-E2-E3", "E1-E2", "E2-E3", "E3-E4", "E4-E5", "E5-E6"});
        std::vector<IntVec> cols;
        for (const auto& g : gens) cols.push_back(g.coeffs);
        auto snf = smith_normal_form(IntMatrix::from_columns(cols, 7));
        std::vector<std::string> d;
        for (const auto& x : snf.diagonal) d.push_back(x.str());
        return join(d, ",");
    });
    r.add("diophantine.bidegrees", "a1 b2 - a2 b1 = +-1, a1 + a2 = 4, b1 + b2 = 1, a_i >= 0", "(1,0,3,1) (3,1,1,0)", [&] {
        std::vector<std::string> s;
        for (const auto& b : solve_blowup_bidegrees())
            s.push_back("(" + std::to_string(b.a1) + "," + std::to_string(b.b1) + "," + std::to_string(b.a2) + "," +
                        std::to_string(b.b2) + ")");
        return join(s, " ");
    });
    r.add("euler.budget", "eu(F) for (3,0,1,1,1), (1,1,1,1,1), (1,2,1,1,1)", "2,2,4", [&] {
        return std::to_string(euler_of_F({3, 0, 1, 1, 1})) + "," + std::to_string(euler_of_F({1, 1, 1, 1, 1})) + "," +
               std::to_string(euler_of_F({1, 2, 1, 1, 1}));
    });
    r.add("euler.minimality-dichotomy", "value 1 exactly on (1,0,0) and (1,1,1) for entries <= 6", "0 mismatches", [&] {
        int bad = 0;
        for (int a = 1; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                for (int k = 0; k <= std::min(a, b); ++k) {
                    auto m = minimality_dichotomy(a, b, k);
                    if (m.is_minimal != m.minimal_profile) ++bad;
                }
        return std::to_string(bad) + " mismatches";
    });
    r.add("euler.plane-cubics", "admitted plane cubic types (eu, b1, b2)",
          "CU(2,0,1) L1(2,0,1) QL(3,0,2) L2(3,0,2) L3(4,0,3)", [&] {
              std::vector<std::string> s;
              for (const auto& t : plane_cubic_table())
                  if (t.admitted())
                      s.push_back(t.label + "(" + std::to_string(t.eu) + "," + std::to_string(t.b1) + "," +
                                  std::to_string(t.b2) + ")");
              return join(s, " ");
          });
    for (int b2 = 1; b2 <= 3; ++b2) {
        static const char* expected[] = {"", "CU:1 L1:1 QL:2 L2:2 L3:3", "QL:1 L2:1 L3:2", "L3:1"};
        r.add("euler.feasible-intersections-B2-" + std::to_string(b2), "admitted (F type, #(C cap F))", expected[b2], [&] {
            std::vector<std::string> s;
            for (const auto& f : feasible_intersections(b2)) s.push_back(f.F_type + ":" + std::to_string(f.sharp_C_cap_F));
            return join(s, " ");
        });
    }

    CatalogReport cat = verify_catalog(c);
    r.add("catalog.lines", "line-on-surface substitutions across G1..G15", "75/75", [&] {
        std::size_t pass = 0;
        for (const auto& s : cat.surfaces)
            if (s.id.size() > 1 && s.id[0] == 'G') pass += s.lines_passed;
        return std::to_string(pass) + "/" + std::to_string(cat.cubic_line_checks());
    });
    r.add("catalog.singular-points", "Jacobian checks at listed singular points of G1..G15", "30/30", [&] {
        std::size_t pass = 0;
        for (const auto& s : cat.surfaces)
            if (s.id.size() > 1 && s.id[0] == 'G') pass += s.points_passed;
        return std::to_string(pass) + "/" + std::to_string(cat.cubic_point_checks());
    });
    r.add("catalog.neg2-classes", "(-2)-classes satisfy c^2 = -2 and c.K = 0", "all pass", [&] {
        std::size_t checked = 0, passed = 0;
        for (const auto& s : cat.surfaces) {
            checked += s.neg2_checked;
            passed += s.neg2_passed;
        }
        return checked > 0 && checked == passed ? std::string("all pass")
                                                : std::to_string(passed) + "/" + std::to_string(checked);
    });
    r.add("catalog.all", "every catalog invariant and configuration check", "pass", [&] {
        return cat.all_pass() ? std::string("pass") : std::string("fail");
    });

    r.add("chain.profile", "m for (G1,E6), (G1,H-E1), (G2,2H-E1-E2-E5)", "1,1,1", [&] {
        return exceptional_chain_profile(c, "G1", parse_class(cub, "E6")).m.str() + "," +
               exceptional_chain_profile(c, "G1", parse_class(cub, "H-E1")).m.str() + "," +
               exceptional_chain_profile(c, "G2", parse_class(cub, "2H-E1-E2-E5")).m.str();
    });
    r.add("tuples.n1", "degree 1 tuples", "(1,0; 0^5,-1), (1,1; 1^2,0^4), (1,2; 1^5,0)", [&] { return tuples_text(1); });
    r.add("tuples.n2", "degree 2 tuples", "(2,1; 1,0^5), (2,2; 1^4,0^2), (2,3; 2,1^5)", [&] { return tuples_text(2); });
    r.add("tuples.n3-cuspidal", "degree 3 tuples for the cuspidal strict transform",
          "(3,1; 0^6), (3,2; 1^3,0^3), (3,3; 2,1^4,0), (3,4; 2^3,1^3), (3,5; 2^6)", [&] { return tuples_text(3); });

    const std::vector<std::pair<std::string, std::vector<std::string>>> curve_lists = {
        {"G1", {"E6", "H-E1"}},
        {"G2", {"E4", "E6", "H-E1", "H-E5", "2H-E1-E2-E5"}},
        {"G4",
         {"E4", "E5", "E6", "H-E1", "H-E5", "H-E6", "2H-E1-E2-E5", "2H-E1-E2-E6", "3H-E1-E2-E3-E4-2E5",
          "3H-E1-E2-E3-E4-2E6", "3H-E1-E2-E3-2E5", "3H-E1-E2-E3-2E6", "4H-E1-E2-E3-E4-3E5", "4H-E1-E2-E3-E4-3E6",
          "6H-2E1-2E2-2E3-2E4-4E5", "6H-2E1-2E2-2E3-2E4-4E6"}},
        {"G5", {"E5", "E6", "H-E1-E6", "H-E1", "H-E6", "3H-E1-E2-E3-E4-E5-2E6"}},
    };
    for (const auto& [id, list] : curve_lists) {
        r.add("curves." + id, "smooth rational curve classes on " + id + (id == "G5" ? " with n <= 2" : ""),
              class_set(cub, parse_classes(cub, list)),
              [&, id = id] { return class_set(cub, enumerate_curve_classes(c, id).classes); });
    }
    r.add("curves.G1-cuspidal", "strict transform of the cuspidal section on G1", "H",
          [&] { return format_class(cub, cuspidal_cubic_class_G1(c)); });
    r.add("curves.G1-cuspidal-smooth-family", "cuspidal search with the smooth-curve bounds enabled", "{}", [&] {
        return class_set(cub, enumerate_with_constraints(cuspidal_constraints(c, true)));
    });

    auto hirz = [](const std::string& model) {
        std::vector<std::string> s;
        for (int d = 1; d <= 8; ++d) {
            std::vector<std::string> g;
            for (const auto& h : hirzebruch_degree_genus(model, d)) g.push_back(h.genus.str());
            s.push_back(std::to_string(d) + ":[" + join(g, ",") + "]");
        }
        return join(s, " ");
    };
    r.add("hirzebruch.elliptic-cone", "genera by degree 1..8 on the elliptic cone",
          "1:[0] 2:[] 3:[1] 4:[1] 5:[] 6:[4] 7:[5] 8:[]", [&] { return hirz("ELLIPTIC_CONE"); });
    r.add("hirzebruch.R12", "genera by degree 1..8 on the non-normal F3 model",
          "1:[0] 2:[] 3:[0] 4:[0] 5:[] 6:[2] 7:[3] 8:[]", [&] { return hirz("R12"); });
    r.add("hirzebruch.R34-degree-one", "degree 1 classes on the F1 model",
          class_set(nonnormal_f1_lattice(), parse_classes(nonnormal_f1_lattice(), {"Sigma", "f"})), [&] {
        std::vector<DivClass> v;
        for (const auto& h : hirzebruch_degree_genus("R34", 1)) v.push_back(h.cls);
        return class_set(nonnormal_f1_lattice(), v);
    });
    r.add("hirzebruch.R34-degree-sum", "degree equals a + b for every listed class up to degree 8", "true", [&] {
        bool ok = true;
        for (int d = 1; d <= 8; ++d)
            for (const auto& h : hirzebruch_degree_genus("R34", d)) ok = ok && h.cls.coeffs[0] + h.cls.coeffs[1] == d;
        return yes_no(ok);
    });

    const std::vector<std::tuple<std::string, std::string, std::string>> theta = {
        {"G1-cuspidal", "G1", "Z/3"},
        {"G4-conic-tangent-line", "G4", "Z"},
        {"G4-conic-tangent-line-E5", "G4", "Z/3"},
        {"G4-conic-tangent-line-E6", "G4", "Z/3"},
        {"G5-conic-tangent-line-x", "G5", "Z/2"},
        {"G5-line-double-line", "G5", "Z/2"},
        {"G1-triple-line", "G1", "0"},
        {"G2-line-double-line", "G2", "0"},
        {"G4-three-lines", "G4", "0"},
        {"G5-conic-tangent-line-z", "G5", "0"},
    };
    for (const auto& [label, sid, expected] : theta)
        r.add("coker.theta." + label, "cokernel of theta for " + label, expected,
              [&, label = label, sid = sid] { return coker_theta(c, sid, config_components(c, label)).to_string(); });
    const IntLattice f1 = nonnormal_f1_lattice();
    auto xi = [&](const std::vector<std::pair<std::string, int>>& parts) {
        std::vector<WeightedClass> w;
        for (const auto& [cls, m] : parts) w.push_back({parse_class(f1, cls), m});
        return coker_xi_R3(w);
    };
    r.add("coker.xi.R3-line-double-line", "xi cokernel for Sigma + 2f", "Z ⊕ Z/2",
          [&] { return xi({{"Sigma", 1}, {"f", 2}}).coker.to_string(); });
    r.add("coker.xi.R3-conic-line", "xi cokernel for f + (Sigma+f)", "Z ⊕ Z/2",
          [&] { return xi({{"f", 1}, {"Sigma+f", 1}}).coker.to_string(); });
    r.add("coker.xi.R3-three-lines", "xi on f + f + Sigma", "non-injective",
          [&] { return xi({{"f", 1}, {"f", 1}, {"Sigma", 1}}).injective ? std::string("injective") : std::string("non-injective"); });

    for (const auto& [sid, form] : std::vector<std::pair<std::string, std::string>>{
             {"G4", "y"}, {"G9", "y"}, {"G10", "y"}, {"G11", "x-t"}}) {
        r.add("lines.concurrent." + sid, "three lines of " + sid + " in {" + form + "=0} through a singular point",
              "true", [&, sid = sid, form = form] {
                  bool found = false;
                  for (const auto& t : concurrent_coplanar_triples(c.get(sid)))
                      found = found || (t.point_is_singular && proportional(t.plane, parse_poly(form)));
                  return yes_no(found);
              });
    }

    auto pairs = admitted_pairs();
    r.add("classifier.admitted-pairs", "entries of the admitted (d)/(e) list", "9 d, 3 e", [&] {
        int d = 0, e = 0;
        for (const auto& p : pairs) (p.case_letter == "d" ? d : e)++;
        return std::to_string(d) + " d, " + std::to_string(e) + " e";
    });
    r.add("classifier.canonical-descriptors", "every admitted pair accepts its canonical descriptor", "12/12", [&] {
        int ok = 0;
        for (const auto& p : pairs) ok += classify(canonical_descriptor(p, c), c).case_letter == p.case_letter;
        return std::to_string(ok) + "/" + std::to_string(pairs.size());
    });
    r.add("classifier.elliptic-cone", "genus 1, degree 3, vertex on S1, N1 = B2(F) = 3", "a/A3", [&] {
        TripleDescriptor d;
        d.curve_genus = 1;
        d.curve_degree = 3;
        d.surface_id = "ELLIPTIC_CONE";
        d.N1 = d.sharp_C_cap_S1 = 3;
        d.N2 = d.N12 = 1;
        d.B2_F = 3;
        d.vertex_on_S1 = true;
        auto o = classify(d, c);
        return o.case_letter + "/" + o.iso_class;
    });
    r.add("classifier.example-triple", "C = {x=y=-z}, S1 = {z=0}, S2 = R1", "f/A1xW32", [&] {
        TripleDescriptor d;
        d.surface_id = "R1";
        d.hyperplane = parse_poly("z");
        d.N2 = d.N12 = 1;
        auto o = classify(d, c);
        return o.case_letter + "/" + o.iso_class;
    });
    r.add("classifier.G2-without-delta", "G2 with {y=0} and no H1 isomorphism", "REJECT", [&] {
        auto d = canonical_descriptor(pairs[9], c);
        d.delta_iso = false;
        return classify(d, c).case_letter;
    });
    r.add("classifier.genus-two", "genus 2 curve", "REJECT", [&] {
        auto d = canonical_descriptor(pairs[0], c);
        d.curve_genus = 2;
        d.curve_class.reset();
        return classify(d, c).case_letter;
    });
    r.add("example.nonA3", "containment, intersection and coordinate-change checks", "all pass", [&] {
        auto rep = example_nonA3_checks(c);
        std::vector<std::string> bad;
        for (const auto& ch : rep.checks)
            if (!ch.pass) bad.push_back(ch.name);
        return bad.empty() ? std::string("all pass") : "failed: " + join(bad);
    });
    return r.report;
}

}  // namespace clv
