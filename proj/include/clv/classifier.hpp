#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "clv/lattice.hpp"
#include "clv/poly.hpp"
#include "clv/surface_models.hpp"

namespace clv {

struct TripleDescriptor {
    int curve_genus = 0;
    int curve_degree = 1;
    std::string surface_id;
    std::optional<MultiPoly> hyperplane;  // linear form defining S1; optional only for the elliptic cone
    int N1 = 1, N2 = 0, N12 = 0;
    std::optional<bool> delta_iso;
    int sharp_C_cap_S1 = 1;
    int B2_F = 1;
    std::optional<DivClass> curve_class;
    bool vertex_on_S1 = false;  // elliptic cone only
};

// Throws InputError on missing or malformed fields.
TripleDescriptor descriptor_from_json(const nlohmann::json& j, const Catalog& c);
nlohmann::json descriptor_to_json(const TripleDescriptor& d, const Catalog& c);

struct Reason {
    std::string constraint;  // stable identifier of the checked condition
    std::string detail;      // computed values
    bool satisfied = false;
};

struct CaseOutcome {
    std::string case_letter;  // a..f or REJECT
    std::string iso_class;    // A3, A1xW32 or UNKNOWN
    std::optional<std::string> matched_pair;  // admitted family the pair was matched to
    std::optional<std::string> parameter;     // gamma value when the family has one
    std::vector<Reason> reasons;
    std::vector<std::string> flags;
    nlohmann::json to_json() const;
};

// Total on valid descriptors; throws InputError for unknown surfaces or malformed hyperplanes.
CaseOutcome classify(const TripleDescriptor& d, const Catalog& c);

// Family of hyperplanes spanned by two linear forms: {tail - gamma * head = 0}, gamma = infinity gives {head = 0}.
struct HyperplaneFamily {
    std::string description;
    std::vector<MultiPoly> span;  // one form for a fixed plane, two for a pencil
    std::string gamma_domain;     // "", "C" (infinity excluded) or "P1"
};

struct AdmittedPair {
    std::string hyperplane;  // e.g. "{z=gamma*y}"
    std::string surface_id;
    std::string case_letter;
    HyperplaneFamily family;
    std::string evidence;  // check in the replay report supporting the entry
};

// The nine entries of case (d) followed by the three of case (e).
std::vector<AdmittedPair> admitted_pairs();

// Canonical descriptor accepted into the given admitted pair.
TripleDescriptor canonical_descriptor(const AdmittedPair& p, const Catalog& c);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::vector<CheckLine> checks;
    std::string w32_polynomial;  // verbatim defining expression of W(3,2)
    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Throws StructuralError when any check fails.
ExampleReport verify_example_nonA3(const Catalog& c);
// Same checks without throwing.
ExampleReport example_nonA3_checks(const Catalog& c);

struct LemmaEntry {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct LemmaReport {
    std::vector<LemmaEntry> entries;
    std::size_t failures() const;
    nlohmann::json to_json() const;
    std::string to_markdown() const;
};

LemmaReport run_all_lemmas(const Catalog& c);

}  // namespace clv
