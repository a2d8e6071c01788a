#include "clv/poly.hpp"

#include <algorithm>
#include <cctype>

namespace clv {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    int da = a[0] + a[1] + a[2] + a[3];
    int db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::constant(const Rat& c) { return monomial(c, {0, 0, 0, 0}); }

MultiPoly MultiPoly::var(int index) {
    if (index < 0 || index > 3) throw InputError("variable index out of range");
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const Rat& c, const Exponent& e) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return e[0] + e[1] + e[2] + e[3];
}

bool MultiPoly::is_homogeneous() const {
    int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (e[0] + e[1] + e[2] + e[3] != d) return false;
    return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(1), base = *this;
    while (k > 0) {
        if (k & 1U) r = r * base;
        base = base * base;
        k >>= 1U;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int index) const {
    if (index < 0 || index > 3) throw InputError("variable index out of range");
    const auto i = static_cast<std::size_t>(index);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        f[i] -= 1;
        r.add_term(f, c * e[i]);
    }
    return r;
}

Rat MultiPoly::eval(const std::array<Rat, 4>& pt) const {
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) v *= pt[i];
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, 4>& images) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly m = constant(c);
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] > 0) m = m * images[i].pow(static_cast<unsigned>(e[i]));
        r = r + m;
    }
    return r;
}

std::array<Rat, 4> MultiPoly::linear_coefficients() const {
    if (is_zero() || total_degree() != 1 || !is_homogeneous()) throw InputError("not a homogeneous linear form");
    std::array<Rat, 4> out{0, 0, 0, 0};
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] == 1) out[i] = c;
    return out;
}

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string MultiPoly::to_string(const std::array<const char*, 4>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += rat_to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += rat_to_string(a) + "*" + mono;
    }
    return s;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial parse error at offset " + std::to_string(i_) + " (" + what + "): " + s_);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    MultiPoly expr() {
        MultiPoly acc;
        bool neg = false;
        skip();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        MultiPoly t = term();
        acc = neg ? -t : t;
        while (true) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }
    MultiPoly term() {
        MultiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }
    MultiPoly factor() {
        MultiPoly base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ == start) fail("expected exponent");
            unsigned long k = std::stoul(s_.substr(start, i_ - start));
            if (k > 64) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(k));
        }
        return base;
    }
    MultiPoly primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return MultiPoly::constant(Rat(Int(s_.substr(start, i_ - start))));
        }
        static const std::string vars = "xyzt";
        auto pos = vars.find(c);
        if (pos == std::string::npos) fail("unknown symbol");
        ++i_;
        return MultiPoly::var(static_cast<int>(pos));
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

PointP3::PointP3(std::array<Rat, 4> c) : coords(std::move(c)) {
    if (coords[0] == 0 && coords[1] == 0 && coords[2] == 0 && coords[3] == 0)
        throw InputError("projective point must be nonzero");
}

PointP3::PointP3(long long x, long long y, long long z, long long t)
    : PointP3(std::array<Rat, 4>{Rat(x), Rat(y), Rat(z), Rat(t)}) {}

bool PointP3::operator==(const PointP3& o) const {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (coords[i] * o.coords[j] - coords[j] * o.coords[i] != 0) return false;
    return true;
}

std::string PointP3::to_string() const {
    return "[" + rat_to_string(coords[0]) + ":" + rat_to_string(coords[1]) + ":" + rat_to_string(coords[2]) + ":" +
           rat_to_string(coords[3]) + "]";
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rat f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::array<Rat, 4>> kernel_basis(const std::vector<std::array<Rat, 4>>& input) {
    std::vector<std::array<Rat, 4>> rows = input;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < 4 && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Rat lead = rows[rank][c];
        for (auto& v : rows[rank]) v /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rat f = rows[r][c];
            for (std::size_t k = 0; k < 4; ++k) rows[r][k] -= f * rows[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::array<Rat, 4>> basis;
    for (std::size_t f = 0; f < 4; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::array<Rat, 4> v{0, 0, 0, 0};
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(v);
    }
    return basis;
}

LineP3::LineP3(MultiPoly a, MultiPoly b) : forms{std::move(a), std::move(b)} {
    auto ca = forms[0].linear_coefficients();
    auto cb = forms[1].linear_coefficients();
    if (rational_rank({{ca.begin(), ca.end()}, {cb.begin(), cb.end()}}) != 2)
        throw InputError("line forms are linearly dependent");
}

std::array<PointP3, 2> LineP3::spanning_points() const {
    auto k = kernel_basis({forms[0].linear_coefficients(), forms[1].linear_coefficients()});
    if (k.size() != 2) throw InputError("degenerate line parametrization");
    return {PointP3(k[0]), PointP3(k[1])};
}

bool LineP3::contains(const PointP3& p) const {
    return poly_eval(forms[0], p) == 0 && poly_eval(forms[1], p) == 0;
}

std::string LineP3::to_string() const { return "<" + forms[0].to_string() + ", " + forms[1].to_string() + ">"; }

Rat poly_eval(const MultiPoly& p, const PointP3& pt) { return p.eval(pt.coords); }

MultiPoly restrict_to_line(const MultiPoly& p, const LineP3& line) {
    auto [P, Q] = line.spanning_points();
    MultiPoly s = MultiPoly::var(0), u = MultiPoly::var(1);
    std::array<MultiPoly, 4> images;
    for (std::size_t i = 0; i < 4; ++i) images[i] = s.scaled(P.coords[i]) + u.scaled(Q.coords[i]);
    return p.substitute(images);
}

bool jacobian_vanishes(const MultiPoly& p, const PointP3& pt) {
    for (int i = 0; i < 4; ++i)
        if (poly_eval(p.derivative(i), pt) != 0) return false;
    return true;
}

MultiPoly restrict_to_plane(const MultiPoly& p, const MultiPoly& form) {
    auto k = kernel_basis({form.linear_coefficients()});
    std::array<MultiPoly, 4> images;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) images[i] = images[i] + MultiPoly::var(static_cast<int>(j)).scaled(k[j][i]);
    return p.substitute(images);
}

int line_intersection_count(const LineP3& a, const LineP3& b) {
    std::vector<std::vector<Rat>> rows;
    for (const auto* l : {&a, &b})
        for (const auto& f : l->forms) {
            auto c = f.linear_coefficients();
            rows.emplace_back(c.begin(), c.end());
        }
    std::size_t r = rational_rank(rows);
    if (r == 4) return 0;
    if (r == 3) return 1;
    return -1;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [ea, ca] = *a.terms().begin();
    const auto& [eb, cb] = *b.terms().begin();
    if (ea != eb) return false;
    return a.scaled(cb) == b.scaled(ca);
}

}  // namespace clv
