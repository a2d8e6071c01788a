#include "clv/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace clv {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("matrix row has wrong length");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw InputError("matrix column has wrong length");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntVec IntMatrix::row(std::size_t r) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) out[i] += at(i, k) * v[k];
    return out;
}

DivClass::DivClass(std::initializer_list<long long> c) {
    for (long long v : c) coeffs.emplace_back(v);
}

static void require_same_size(const DivClass& a, const DivClass& b) {
    if (a.size() != b.size()) throw InputError("class length mismatch");
}

DivClass DivClass::operator+(const DivClass& o) const {
    require_same_size(*this, o);
    DivClass r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

DivClass DivClass::operator-(const DivClass& o) const {
    require_same_size(*this, o);
    DivClass r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

DivClass DivClass::operator-() const {
    DivClass r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

DivClass operator*(const Int& k, const DivClass& d) {
    DivClass r = d;
    for (auto& c : r.coeffs) c *= k;
    return r;
}

std::strong_ordering DivClass::operator<=>(const DivClass& o) const {
    if (size() != o.size()) return size() <=> o.size();
    for (std::size_t i = 0; i < size(); ++i) {
        if (coeffs[i] < o.coeffs[i]) return std::strong_ordering::less;
        if (coeffs[i] > o.coeffs[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntLattice make_lattice(IntMatrix gram, DivClass canonical, std::vector<std::string> labels,
                        DivClass hyperplane, std::string basis_tag) {
    const std::size_t n = gram.rows();
    if (n == 0 || gram.cols() != n) throw InputError("gram must be a nonempty square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram.at(i, j) != gram.at(j, i)) throw InputError("gram is not symmetric");
    if (canonical.size() != n) throw InputError("canonical class length differs from rank");
    if (hyperplane.size() != n) throw InputError("hyperplane class length differs from rank");
    if (labels.size() != n) throw InputError("basis labels length differs from rank");
    return IntLattice{n, std::move(gram), std::move(canonical), std::move(labels), std::move(hyperplane),
                      std::move(basis_tag)};
}

IntLattice cubic_lattice() {
    IntMatrix g(7, 7);
    g.at(0, 0) = 1;
    for (std::size_t i = 1; i < 7; ++i) g.at(i, i) = -1;
    DivClass K{-3, 1, 1, 1, 1, 1, 1};
    return make_lattice(std::move(g), K, {"H", "E1", "E2", "E3", "E4", "E5", "E6"}, -K, "H,E1..E6");
}

IntLattice hirzebruch_lattice(int d, const DivClass& canonical, const DivClass& hyperplane) {
    IntMatrix g(2, 2);
    g.at(0, 0) = -d;
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    return make_lattice(std::move(g), canonical, {"Sigma", "f"}, hyperplane, "Sigma,f");
}

IntLattice elliptic_cone_lattice() { return hirzebruch_lattice(3, DivClass{-2, -3}, DivClass{1, 3}); }
IntLattice nonnormal_f3_lattice() { return hirzebruch_lattice(3, DivClass{-2, -5}, DivClass{1, 3}); }
IntLattice nonnormal_f1_lattice() { return hirzebruch_lattice(1, DivClass{-2, -3}, DivClass{1, 2}); }

Int pair(const IntLattice& lat, const DivClass& a, const DivClass& b) {
    if (a.size() != lat.rank || b.size() != lat.rank) throw InputError("class length differs from lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < lat.rank; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < lat.rank; ++j) s += a.coeffs[i] * lat.gram.at(i, j) * b.coeffs[j];
    }
    return s;
}

Int degree(const IntLattice& lat, const DivClass& d) { return pair(lat, d, lat.hyperplane_class); }

Int arithmetic_genus(const IntLattice& lat, const DivClass& d) {
    Int twice = pair(lat, d, d) + pair(lat, d, lat.canonical_class);
    if (twice % 2 != 0) throw StructuralError("non-curve class: D^2 + D.K is odd");
    return 1 + twice / 2;
}

DivClass parse_class(const IntLattice& lat, const std::string& text) {
    DivClass out(IntVec(lat.rank));
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (text.substr(i) == "0") return out;
    bool any = false;
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (any) {
            throw InputError("expected '+' or '-' in class expression: " + text);
        }
        Int coef = 1;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) coef = Int(text.substr(start, i - start));
        if (i < text.size() && text[i] == '*') ++i;
        std::size_t best = lat.rank, best_len = 0;
        for (std::size_t k = 0; k < lat.rank; ++k) {
            const auto& lab = lat.basis_labels[k];
            if (lab.size() > best_len && text.compare(i, lab.size(), lab) == 0) {
                best = k;
                best_len = lab.size();
            }
        }
        if (best == lat.rank) throw InputError("unknown basis label in class expression: " + text);
        i += best_len;
        out.coeffs[best] += sign * coef;
        any = true;
    }
    if (!any) throw InputError("empty class expression");
    return out;
}

std::string format_class(const IntLattice& lat, const DivClass& d) {
    if (d.size() != lat.rank) throw InputError("class length differs from lattice rank");
    std::string s;
    for (std::size_t k = 0; k < lat.rank; ++k) {
        const Int& c = d.coeffs[k];
        if (c == 0) continue;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        Int a = abs(c);
        if (a != 1) s += a.str();
        s += lat.basis_labels[k];
    }
    return s.empty() ? "0" : s;
}

namespace {

struct SnfState {
    IntMatrix D, U, V;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    // row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(dst, j) += q * D.at(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(dst, j) += q * U.at(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < D.rows(); ++i) D.at(i, dst) += q * D.at(i, src);
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, dst) += q * V.at(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(r, j) = -D.at(r, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    SnfState st{m, IntMatrix::identity(R), IntMatrix::identity(C)};
    auto& D = st.D;
    std::size_t t = 0;
    for (; t < std::min(R, C); ++t) {
        // Smallest nonzero entry of the trailing block, first in row-major order.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        Int best;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (D.at(i, j) != 0 && (!found || abs(D.at(i, j)) < best)) {
                    found = true;
                    best = abs(D.at(i, j));
                    pr = i;
                    pc = j;
                }
        if (!found) break;
        st.swap_rows(t, pr);
        st.swap_cols(t, pc);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                if (q != 0) st.add_row(i, t, -q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                if (q != 0) st.add_col(j, t, -q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; move it into the pivot slot.
                std::size_t br = t, bc = t;
                Int bv = abs(D.at(t, t));
                for (std::size_t i = t + 1; i < R; ++i)
                    if (D.at(i, t) != 0 && abs(D.at(i, t)) < bv) {
                        bv = abs(D.at(i, t));
                        br = i;
                        bc = t;
                    }
                for (std::size_t j = t + 1; j < C; ++j)
                    if (D.at(t, j) != 0 && abs(D.at(t, j)) < bv) {
                        bv = abs(D.at(t, j));
                        br = t;
                        bc = j;
                    }
                st.swap_rows(t, br);
                st.swap_cols(t, bc);
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < R && !fixed; ++i)
                for (std::size_t j = t + 1; j < C && !fixed; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        st.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (D.at(t, t) < 0) st.negate_row(t);
    }
    SmithResult res;
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.diagonal.push_back(D.at(i, i));
    res.U = std::move(st.U);
    res.V = std::move(st.V);
    res.D = std::move(st.D);
    return res;
}

FgAbGroup fg_group(std::size_t free_rank, IntVec torsion) {
    FgAbGroup g;
    g.free_rank = free_rank;
    for (auto& t : torsion) {
        if (t < 0) t = -t;
        if (t > 1) g.torsion.push_back(t);
    }
    for (std::size_t k = 0; k + 1 < g.torsion.size(); ++k)
        if (g.torsion[k + 1] % g.torsion[k] != 0) throw InputError("torsion list violates the divisibility chain");
    return g;
}

std::string FgAbGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

FgAbGroup coker_of(const std::vector<DivClass>& generators, std::size_t target_rank) {
    std::vector<IntVec> cols;
    for (const auto& g : generators) {
        if (g.size() != target_rank) throw InputError("generator length differs from target rank");
        cols.push_back(g.coeffs);
    }
    SmithResult s = smith_normal_form(IntMatrix::from_columns(cols, target_rank));
    return fg_group(target_rank - s.rank, s.diagonal);
}

std::optional<IntVec> solve_in_span(const std::vector<DivClass>& generators, const DivClass& target) {
    const std::size_t n = target.size();
    std::vector<IntVec> cols;
    for (const auto& g : generators) {
        if (g.size() != n) throw InputError("generator length differs from target length");
        cols.push_back(g.coeffs);
    }
    IntMatrix M = IntMatrix::from_columns(cols, n);
    SmithResult s = smith_normal_form(M);
    IntVec ut = s.U * target.coeffs;
    IntVec y(generators.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i < s.rank) {
            if (ut[i] % s.diagonal[i] != 0) return std::nullopt;
            y[i] = ut[i] / s.diagonal[i];
        } else if (ut[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

Int determinant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InputError("determinant of a non-square matrix");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool negative_definite(const IntLattice& lat, const std::vector<DivClass>& classes) {
    const std::size_t k = classes.size();
    for (std::size_t m = 1; m <= k; ++m) {
        IntMatrix g(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) g.at(i, j) = -pair(lat, classes[i], classes[j]);
        if (determinant(g) <= 0) return false;
    }
    return true;
}

std::string to_string(const Int& v) { return v.str(); }

long long to_ll(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) || v < Int(std::numeric_limits<long long>::min()))
        throw StructuralError("integer exceeds 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace clv
