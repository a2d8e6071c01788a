#include "clv/curve_enum.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace clv {

Int isqrt(const Int& v) {
    if (v < 0) throw InputError("square root of a negative integer");
    return boost::multiprecision::sqrt(v);
}

CsBounds bounds_from_cauchy_schwarz(int n, int genus) {
    if (n < 1) throw InputError("degree must be at least 1");
    Int rhs = 2 * (Int(n) * n - 3 * n + 6) - 12 * Int(genus);
    if (rhs < 0) return {Int(n), Int(n - 1)};
    Int d = isqrt(rhs / 3);
    return {n - d, n + d};
}

std::string Tuple::to_string() const {
    std::string s = "(" + std::to_string(n) + "," + a.str() + ";";
    std::size_t i = 0;
    bool first = true;
    while (i < b.size()) {
        std::size_t j = i;
        while (j < b.size() && b[j] == b[i]) ++j;
        s += first ? " " : ",";
        first = false;
        s += b[i].str();
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + ")";
}

std::vector<Tuple> enumerate_tuples(int n, int genus) {
    if (n < 1) throw InputError("degree must be at least 1");
    if (genus < 0) throw InputError("genus must be nonnegative");
    std::vector<Tuple> out;
    CsBounds cb = bounds_from_cauchy_schwarz(n, genus);
    for (Int a = cb.a_min; a <= cb.a_max; ++a) {
        Int q = a * a - n + 2 - 2 * Int(genus);
        if (q < 0) continue;
        Int s = 3 * a - n;
        Int B = isqrt(q);
        std::vector<Int> b(6);
        // Nonincreasing b so each multiset is produced once.
        std::function<void(std::size_t, Int, Int, Int)> rec = [&](std::size_t i, Int cap, Int ps, Int psq) {
            if (i == 6) {
                if (ps == s && psq == q) out.push_back({n, a, b});
                return;
            }
            for (Int v = cap; v >= -B; --v) {
                Int nsq = psq + v * v;
                if (nsq > q) {
                    if (v < 0) break;
                    continue;
                }
                // Remaining entries are <= v, so the sum can only fall by at most (5-i)*B.
                Int rem = 5 - static_cast<long>(i);
                Int ns = ps + v;
                if (ns + rem * v < s) break;
                if (ns - rem * B > s) continue;
                b[i] = v;
                rec(i + 1, v, ns, nsq);
            }
        };
        rec(0, B, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Raw coordinates of a class interpreted as a row vector against the gram matrix.
IntVec pairing_row(const IntLattice& lat, const DivClass& c) {
    IntVec w(lat.rank);
    for (std::size_t i = 0; i < lat.rank; ++i)
        for (std::size_t j = 0; j < lat.rank; ++j) w[i] += lat.gram.at(i, j) * c.coeffs[j];
    return w;
}

bool is_cubic_lattice(const IntLattice& lat) {
    if (lat.rank != 7) return false;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            Int expect = i != j ? 0 : (i == 0 ? 1 : -1);
            if (lat.gram.at(i, j) != expect) return false;
        }
    return lat.hyperplane_class == -lat.canonical_class;
}

}  // namespace

std::optional<std::string> first_violation(const CurveConstraintSet& cs, const DivClass& d) {
    const auto& lat = cs.lattice;
    for (const auto& c : cs.nonneg_neg2)
        if (pair(lat, d, c) < 0) return "(-2)-nonnegativity against " + format_class(lat, c);
    for (const auto& e : cs.nonneg_neg1)
        if (d != e && pair(lat, d, e) < 0) return "(-1)-nonnegativity against " + format_class(lat, e);
    for (const auto& ch : cs.chain_budget) {
        Int total = 0;
        for (const auto& r : ch.members) {
            Int p = pair(lat, d, r);
            if (p > ch.max_member) return "chain member bound on " + format_class(lat, r);
            total += p;
        }
        if (total > ch.max_total) return "chain total bound on " + ch.label;
    }
    if (cs.projection_chain) {
        Int m = 0;
        for (const auto& r : *cs.projection_chain) m += pair(lat, d, r);
        if (d.coeffs[0] != cs.n - m) return "projection rule a = n - m";
    }
    for (const auto& lc : cs.extra_linear) {
        Int v = 0;
        for (std::size_t i = 0; i < d.size(); ++i) v += lc.coeffs.coeffs[i] * d.coeffs[i];
        if (v < 0) return lc.label;
    }
    return std::nullopt;
}

std::vector<DivClass> enumerate_with_constraints(const CurveConstraintSet& cs, SearchBounds* bounds) {
    const auto& lat = cs.lattice;
    if (!is_cubic_lattice(lat)) throw InputError("class enumeration requires the cubic blow-up lattice");
    if (cs.n < 1) throw InputError("degree must be at least 1");
    if (cs.genus < 0) throw InputError("genus must be nonnegative");

    // Single-class conditions usable for pruning once their support is assigned.
    struct Check {
        std::vector<long long> w;
        std::size_t last;
        long long lo, hi;
    };
    std::vector<Check> checks;
    auto add_check = [&](const IntVec& w, long long lo, long long hi) {
        Check c{{}, 0, lo, hi};
        for (std::size_t i = 0; i < w.size(); ++i) {
            c.w.push_back(to_ll(w[i]));
            if (w[i] != 0) c.last = i;
        }
        checks.push_back(std::move(c));
    };
    constexpr long long kInf = std::numeric_limits<long long>::max();
    std::set<DivClass> bounded_members;
    for (const auto& ch : cs.chain_budget)
        for (const auto& r : ch.members) bounded_members.insert(r);
    for (const auto& c : cs.nonneg_neg2) add_check(pairing_row(lat, c), 0, kInf);
    for (const auto& ch : cs.chain_budget)
        for (const auto& r : ch.members) add_check(pairing_row(lat, r), -kInf, to_ll(ch.max_member));
    for (const auto& lc : cs.extra_linear) add_check(lc.coeffs.coeffs, 0, kInf);

    CsBounds cb = bounds_from_cauchy_schwarz(cs.n, cs.genus);
    std::vector<DivClass> out;
    Int box_max = 0;
    const long long n = cs.n, g = cs.genus;
    for (long long a = to_ll(cb.a_min); a <= to_ll(cb.a_max); ++a) {
        long long q = a * a - n + 2 - 2 * g;
        if (q < 0) continue;
        long long s = 3 * a - n;
        long long B = to_ll(isqrt(Int(q)));
        box_max = std::max(box_max, Int(B));
        std::array<long long, 7> D{};
        D[0] = a;
        auto passes = [&](std::size_t level) {
            for (const auto& c : checks) {
                if (c.last != level) continue;
                long long v = 0;
                for (std::size_t i = 0; i <= level; ++i) v += c.w[i] * D[i];
                if (v < c.lo || v > c.hi) return false;
            }
            return true;
        };
        if (!passes(0)) continue;
        std::function<void(std::size_t, long long, long long)> rec = [&](std::size_t i, long long ps, long long psq) {
            for (long long v = -B; v <= B; ++v) {
                long long nsq = psq + v * v;
                if (nsq > q) continue;
                long long ns = ps + v;
                long long rem = 6 - static_cast<long long>(i);
                long long gap = s - ns;
                if (gap * gap > rem * (q - nsq)) continue;
                D[i] = -v;
                if (!passes(i)) continue;
                if (i == 5) {
                    long long b6 = gap;
                    if (b6 * b6 != q - nsq) continue;
                    D[6] = -b6;
                    if (!passes(6)) continue;
                    DivClass d;
                    for (auto x : D) d.coeffs.emplace_back(x);
                    if (!first_violation(cs, d)) out.push_back(std::move(d));
                } else {
                    rec(i + 1, ns, nsq);
                }
            }
        };
        rec(1, 0, 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (bounds) *bounds = {cs.n, cb.a_min, cb.a_max, box_max};
    return out;
}

std::vector<DivClass> minus_one_classes(const SurfaceModel& s) {
    if (!s.lattice) throw InputError("surface " + s.id + " has no lattice model");
    CurveConstraintSet cs{*s.lattice, 1, 0, s.neg2_classes, {}, {}, std::nullopt, {}};
    return enumerate_with_constraints(cs);
}

CurveConstraintSet curve_constraints(const SurfaceModel& s, int n) {
    if (!s.lattice || s.lattice_model != "cubic" || s.neg2_classes.empty())
        throw InputError("surface " + s.id + " has no (-2)-class data for curve enumeration");
    CurveConstraintSet cs;
    cs.lattice = *s.lattice;
    cs.n = n;
    cs.genus = 0;
    cs.nonneg_neg2 = s.neg2_classes;
    cs.nonneg_neg1 = minus_one_classes(s);
    for (std::size_t k = 0; k < s.exceptional_chains.size(); ++k) {
        const auto& ch = s.exceptional_chains[k];
        std::string label = "chain over " + s.singular_points.at(ch.point_index).type + " point " +
                            s.singular_points.at(ch.point_index).point.to_string();
        cs.chain_budget.push_back({label, ch.classes, 1, 1});
    }
    if (s.designated_chain) cs.projection_chain = s.exceptional_chains.at(*s.designated_chain).classes;
    return cs;
}

namespace {

using RatVec = std::vector<Rat>;

Rat rpair(const IntLattice& lat, const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < lat.rank; ++i)
        for (std::size_t j = 0; j < lat.rank; ++j)
            if (lat.gram.at(i, j) != 0) s += a[i] * Rat(lat.gram.at(i, j)) * b[j];
    return s;
}

RatVec to_rat(const DivClass& d) {
    RatVec v;
    for (const auto& c : d.coeffs) v.emplace_back(c);
    return v;
}

// Solves M x = rhs for square nonsingular rational M; nullopt if singular.
std::optional<RatVec> solve_square(std::vector<RatVec> M, RatVec rhs) {
    const std::size_t n = M.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(M[p], M[c]);
        std::swap(rhs[p], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rat f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
    return x;
}

// Kernel of the rows (each of length cols), reduced echelon basis.
std::vector<RatVec> rational_kernel(std::vector<RatVec> rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Rat lead = rows[rank][c];
        for (auto& v : rows[rank]) v /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rat f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(v);
    }
    return basis;
}

struct Quadratic {
    Rat c2, c1, c0;
    Rat at(long long n) const { return c2 * n * n + c1 * n + c0; }
    // Integer beyond which the polynomial is positive (requires c2 > 0).
    long long cauchy_bound() const {
        Rat m = abs(c1 / c2);
        Rat m0 = abs(c0 / c2);
        if (m0 > m) m = m0;
        Rat b = 1 + m;
        Int fl = numerator(b) / denominator(b);
        return to_ll(fl) + 1;
    }
};

}  // namespace

DegreeBound derive_degree_bound(const SurfaceModel& s, int genus) {
    DegreeBound out;
    if (!s.lattice || s.lattice_model != "cubic") {
        out.gaps.push_back("no cubic lattice model");
        return out;
    }
    const IntLattice& lat = *s.lattice;
    std::vector<RatVec> V{to_rat(lat.canonical_class)};
    std::vector<std::size_t> chain_of;
    std::vector<std::size_t> chain_start;
    for (std::size_t k = 0; k < s.exceptional_chains.size(); ++k) {
        chain_start.push_back(V.size());
        for (const auto& r : s.exceptional_chains[k].classes) V.push_back(to_rat(r));
    }
    const std::size_t m = V.size();
    std::vector<RatVec> gv(m, RatVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gv[i][j] = rpair(lat, V[i], V[j]);
    std::vector<RatVec> rows;
    for (const auto& v : V) {
        RatVec row(lat.rank, Rat(0));
        for (std::size_t i = 0; i < lat.rank; ++i)
            for (std::size_t j = 0; j < lat.rank; ++j) row[i] += Rat(lat.gram.at(i, j)) * v[j];
        rows.push_back(row);
    }
    auto W = rational_kernel(rows, lat.rank);
    const std::size_t R = W.size();

    auto combine = [&](const RatVec& coeffs) {
        RatVec d(lat.rank, Rat(0));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < lat.rank; ++i) d[i] += coeffs[j] * V[j][i];
        return d;
    };
    RatVec e0(m, Rat(0));
    e0[0] = -1;  // D.K = -n
    auto alpha = solve_square(gv, e0);
    if (!alpha) {
        out.gaps.push_back("canonical class and chain classes are linearly dependent");
        return out;
    }
    RatVec avec = combine(*alpha);

    // Every chain contributes either nothing or a single member with pairing 1.
    std::vector<std::vector<std::size_t>> patterns{{}};
    for (std::size_t k = 0; k < s.exceptional_chains.size(); ++k) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& p : patterns)
            for (std::size_t choice = 0; choice <= s.exceptional_chains[k].classes.size(); ++choice) {
                auto q = p;
                q.push_back(choice);
                next.push_back(q);
            }
        patterns = std::move(next);
    }

    auto minus_one = minus_one_classes(s);
    long long best = 1;
    bool ok = true;
    if (R >= 2) {
        out.gaps.push_back("orthogonal complement of the canonical class and chains has rank " + std::to_string(R));
        return out;
    }
    for (const auto& p : patterns) {
        RatVec rhs(m, Rat(0));
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] > 0) rhs[chain_start[k] + p[k] - 1] = 1;
        RatVec bvec = combine(*solve_square(gv, rhs));
        Quadratic P{rpair(lat, avec, avec), 2 * rpair(lat, avec, bvec) - 1,
                    rpair(lat, bvec, bvec) + 2 - 2 * Rat(genus)};
        if (P.c2 <= 0) {
            out.gaps.push_back("leading coefficient of the degree equation is not positive");
            ok = false;
            continue;
        }
        if (R == 0) {
            long long top = 0;
            for (long long n = 1; n <= P.cauchy_bound(); ++n)
                if (P.at(n) == 0) top = n;
            best = std::max(best, top);
            continue;
        }
        const RatVec& v = W[0];
        Rat v2 = -rpair(lat, v, v);  // positive
        std::vector<std::pair<Rat, Rat>> lows, highs;  // bound(n) = p*n + q
        for (const auto& e : minus_one) {
            RatVec ev = to_rat(e);
            Rat ve = rpair(lat, v, ev);
            Rat la = rpair(lat, avec, ev), lb = rpair(lat, bvec, ev);
            if (ve > 0) lows.push_back({-la / ve, -lb / ve});
            if (ve < 0) highs.push_back({la / (-ve), lb / (-ve)});
        }
        std::optional<long long> pattern_best;
        for (const auto& lo : lows)
            for (const auto& hi : highs) {
                auto sub = [&](const std::pair<Rat, Rat>& bd) {
                    return Quadratic{P.c2 - v2 * bd.first * bd.first, P.c1 - 2 * v2 * bd.first * bd.second,
                                     P.c0 - v2 * bd.second * bd.second};
                };
                Quadratic ql = sub(lo), qh = sub(hi);
                if (ql.c2 <= 0 || qh.c2 <= 0) continue;
                long long cap = std::max(ql.cauchy_bound(), qh.cauchy_bound());
                long long top = 1;
                for (long long n = 2; n <= cap; ++n)
                    if (ql.at(n) <= 0 || qh.at(n) <= 0) top = n;
                if (!pattern_best || top < *pattern_best) pattern_best = top;
            }
        if (!pattern_best) {
            out.gaps.push_back("no two-sided (-1)-class bound on the complementary direction");
            ok = false;
            continue;
        }
        best = std::max(best, *pattern_best);
    }
    if (!ok) return out;
    out.n_max = static_cast<int>(best);
    out.method = R == 0 ? "degree equation on the span of -K and the chains"
                        : "degree equation with (-1)-class bounds on the rank-one complement";
    return out;
}

SolutionSet enumerate_curve_classes(const Catalog& c, const std::string& surface_id, std::optional<int> n) {
    const SurfaceModel& s = c.get(surface_id);
    if (!s.lattice || s.lattice_model != "cubic" || s.neg2_classes.empty())
        throw InputError("curve-class enumeration is available for surfaces with (-2)-class data, not " + surface_id);
    SolutionSet out;
    std::vector<int> degrees;
    if (n) {
        if (*n < 1) throw InputError("degree must be at least 1");
        degrees.push_back(*n);
        out.n_max = *n;
        out.n_bound_method = "requested degree";
        if (s.enumeration_degree_limit && *n > *s.enumeration_degree_limit) out.beyond_reference = true;
    } else {
        DegreeBound db = derive_degree_bound(s);
        int top = 0;
        if (s.enumeration_degree_limit) {
            top = *s.enumeration_degree_limit;
            out.n_bound_method = "documented degree limit";
            for (const auto& gmsg : db.gaps) out.constraint_gaps.push_back(gmsg);
            if (db.n_max && *db.n_max < top) top = *db.n_max;
        } else if (db.n_max) {
            top = *db.n_max;
            out.n_bound_method = db.method;
        } else {
            out.constraint_gaps = db.gaps;
            out.n_bound_method = "none";
        }
        for (int k = 1; k <= top; ++k) degrees.push_back(k);
        if (top > 0) out.n_max = top;
    }
    for (int k : degrees) {
        SearchBounds sb;
        auto cls = enumerate_with_constraints(curve_constraints(s, k), &sb);
        out.search_bounds.push_back(sb);
        for (auto& d : cls) {
            if (degree(*s.lattice, d) != k || arithmetic_genus(*s.lattice, d) != 0)
                throw StructuralError("enumerated class " + format_class(*s.lattice, d) + " fails the degree/genus recheck");
            out.classes.push_back(std::move(d));
        }
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

CurveConstraintSet cuspidal_constraints(const Catalog& c, bool smooth_family) {
    const SurfaceModel& s = c.get("G1");
    if (smooth_family) return curve_constraints(s, 3);
    return CurveConstraintSet{*s.lattice, 3, 0, s.neg2_classes, {}, {}, std::nullopt, {}};
}

DivClass cuspidal_cubic_class_G1(const Catalog& c) {
    auto sols = enumerate_with_constraints(cuspidal_constraints(c));
    if (sols.size() != 1)
        throw StructuralError("cuspidal strict transform enumeration returned " + std::to_string(sols.size()) +
                              " classes instead of one");
    return sols.front();
}

IntLattice hirzebruch_model_lattice(const std::string& model) {
    if (model == "ELLIPTIC_CONE") return elliptic_cone_lattice();
    if (model == "R12") return nonnormal_f3_lattice();
    if (model == "R34") return nonnormal_f1_lattice();
    throw InputError("unknown Hirzebruch model: " + model);
}

std::vector<HirzebruchClass> hirzebruch_degree_genus(const std::string& model, int deg) {
    IntLattice lat = hirzebruch_model_lattice(model);
    if (deg < 1) throw InputError("degree must be at least 1");
    const DivClass sigma{1, 0};
    std::vector<HirzebruchClass> out;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; b <= 3 * deg + 1; ++b) {
            DivClass d{a, b};
            if (a == 0 && b == 0) continue;
            if (degree(lat, d) != deg) continue;
            Int ds = pair(lat, d, sigma);
            bool admissible;
            if (model == "R34")
                // Irreducible curves on F1: the section, a fiber, or classes meeting the section nonnegatively.
                admissible = d == sigma || d == DivClass{0, 1} || (a >= 1 && b >= a);
            else
                admissible = ds == 0 || ds == 1;
            if (!admissible) continue;
            out.push_back({d, arithmetic_genus(lat, d)});
        }
    return out;
}

std::vector<Bidegree> solve_blowup_bidegrees(const BidegreeOptions& opt) {
    std::vector<Bidegree> out;
    for (int a1 = -opt.box; a1 <= opt.box; ++a1) {
        int a2 = opt.sum_a - a1;
        if (a2 < -opt.box || a2 > opt.box) continue;
        if (opt.require_nonneg_a && (a1 < 0 || a2 < 0)) continue;
        for (int b1 = -opt.box; b1 <= opt.box; ++b1) {
            int b2 = opt.sum_b - b1;
            if (b2 < -opt.box || b2 > opt.box) continue;
            int det = a1 * b2 - a2 * b1;
            if (det == 1 || det == -1) out.push_back({a1, b1, a2, b2});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace clv
