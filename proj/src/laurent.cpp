#include "zetamill/laurent.hpp"

#include "zetamill/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zetamill {

namespace {

class Parser {
public:
    Parser(const std::string& s, int n, const FieldDesc& F, const std::vector<std::string>& extra)
        : s_(s), n_(n), F_(F), extra_(extra) {}

    LaurentPoly run() {
        LaurentPoly f;
        f.n = n_ + static_cast<int>(extra_.size());
        f.field = F_;
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [coef, u] = term(f.n);
            coef = sign < 0 ? neg(coef, F_) : coef;
            f = add_term(std::move(f), u, coef);
            skip();
        }
        return f;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::int64_t integer(bool allow_sign) {
        skip();
        std::size_t start = pos_;
        bool negative = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
            skip();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", pos_);
        BigInt v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
            if (v > BigInt(INT64_MAX / 2)) throw ParseError("integer too large", start);
        }
        auto r = static_cast<std::int64_t>(v);
        return negative ? -r : r;
    }

    std::pair<FieldElem, Exponent> term(int nv) {
        FieldElem coef = one(F_);
        Exponent u(nv, 0);
        bool any = false;
        while (true) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::int64_t c = integer(false);
                std::int64_t p = static_cast<std::int64_t>(F_.p);
                coef = mul(coef, constant(((c % p) + p) % p, F_), F_);
            } else {
                factor(u);
            }
            any = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term", pos_);
        return {coef, u};
    }

    void factor(Exponent& u) {
        std::size_t start = pos_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += s_[pos_++];
        if (name.empty()) throw ParseError("expected a variable or coefficient", start);
        int idx = -1;
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            long j = std::stol(name.substr(1));
            if (j < 1 || j > n_) throw ParseError("variable index out of range: " + name, start);
            idx = static_cast<int>(j - 1);
        } else {
            for (std::size_t e = 0; e < extra_.size(); ++e)
                if (extra_[e] == name) idx = n_ + static_cast<int>(e);
            if (idx < 0) throw ParseError("unknown symbol '" + name + "'", start);
        }
        std::int64_t e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            std::size_t epos = pos_;
            e = integer(true);
            if (std::llabs(e) > limits().exponent_bound) throw ParseError("exponent out of bounds", epos);
        }
        u[idx] += e;
        if (std::llabs(u[idx]) > limits().exponent_bound) throw ParseError("exponent out of bounds", start);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int n_;
    FieldDesc F_;
    std::vector<std::string> extra_;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, int n, const FieldDesc& F,
                          const std::vector<std::string>& extra_symbols) {
    if (n < 0) throw UsageError("negative variable count");
    return Parser(text, n, F, extra_symbols).run();
}

LaurentPoly add_term(LaurentPoly f, const Exponent& u, const FieldElem& c) {
    if (static_cast<int>(u.size()) != f.n) throw UsageError("exponent length mismatch");
    if (is_zero(c)) return f;
    auto it = f.terms.find(u);
    if (it == f.terms.end()) {
        f.terms.emplace(u, c);
    } else {
        it->second = add(it->second, c, f.field);
        if (is_zero(it->second)) f.terms.erase(it);
    }
    return f;
}

LaurentPoly scale(const LaurentPoly& f, const FieldElem& c) {
    LaurentPoly g{f.n, {}, f.field};
    if (is_zero(c)) return g;
    for (const auto& [u, a] : f.terms) g.terms.emplace(u, mul(a, c, f.field));
    return g;
}

std::vector<Exponent> exponents(const LaurentPoly& f) {
    std::vector<Exponent> out;
    for (const auto& t : f.terms) out.push_back(t.first);
    return out;
}

LaurentPoly extend_scalars(const LaurentPoly& f, const FieldDesc& E) {
    LaurentPoly g{f.n, {}, E};
    for (const auto& [u, a] : f.terms) g.terms.emplace(u, embed(a, f.field, E));
    return g;
}

FieldElem evaluate(const LaurentPoly& f, const std::vector<FieldElem>& point, const FieldDesc& E) {
    if (static_cast<int>(point.size()) != f.n) throw UsageError("point has the wrong number of coordinates");
    std::vector<FieldElem> inv(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (is_zero(point[i])) throw UsageError("zero coordinate outside the torus");
        inv[i] = invert(point[i], E);
    }
    FieldElem s = zero(E);
    for (const auto& [u, a] : f.terms) {
        FieldElem t = embed(a, f.field, E);
        for (int i = 0; i < f.n; ++i) {
            if (u[i] > 0) t = mul(t, pow(point[i], BigInt(u[i]), E), E);
            if (u[i] < 0) t = mul(t, pow(inv[i], BigInt(-u[i]), E), E);
        }
        s = add(s, t, E);
    }
    return s;
}

LatticePolytope newton_polytope(const LaurentPoly& f) {
    if (f.is_zero()) throw UsageError("Newton polytope of the zero polynomial");
    return convex_hull(exponents(f));
}

LaurentPoly face_restrict(const LaurentPoly& f, const LatticePolytope& P, const Face& face) {
    if (P.n != f.n) throw UsageError("face from a polytope of another dimension");
    for (int v : face.vertices)
        if (v < 0 || v >= static_cast<int>(P.vertices.size()) || !f.terms.count(P.vertices[v]))
            throw UsageError("face does not belong to the Newton polytope");
    LaurentPoly g{f.n, {}, f.field};
    for (const auto& [u, a] : f.terms)
        if (on_face(P, face, u)) g.terms.emplace(u, a);
    return g;
}

LaurentPoly toric_partial(const LaurentPoly& f, int i) {
    if (i < 1 || i > f.n) throw UsageError("variable index out of range");
    LaurentPoly g{f.n, {}, f.field};
    const auto p = static_cast<std::int64_t>(f.field.p);
    for (const auto& [u, a] : f.terms) {
        std::int64_t c = ((u[i - 1] % p) + p) % p;
        if (c == 0) continue;
        g.terms.emplace(u, mul(a, constant(c, f.field), f.field));
    }
    return g;
}

LaurentPoly substitute(const LaurentPoly& f, int var, const FieldElem& value, const FieldDesc& E) {
    if (var < 0 || var >= f.n) throw UsageError("variable index out of range");
    LaurentPoly g{f.n - 1, {}, E};
    FieldElem inv;
    bool have_inv = false;
    for (const auto& [u, a] : f.terms) {
        FieldElem c = embed(a, f.field, E);
        std::int64_t e = u[var];
        if (e > 0) c = mul(c, pow(value, BigInt(e), E), E);
        if (e < 0) {
            if (is_zero(value)) throw UsageError("negative power of a zero value");
            if (!have_inv) inv = invert(value, E), have_inv = true;
            c = mul(c, pow(inv, BigInt(-e), E), E);
        }
        Exponent v;
        for (int j = 0; j < f.n; ++j)
            if (j != var) v.push_back(u[j]);
        g = add_term(std::move(g), v, c);
    }
    return g;
}

std::string to_string(const LaurentPoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, a] : f.terms) {
        if (!first) os << " + ";
        first = false;
        bool unit = a == one(f.field);
        bool monomial = std::any_of(u.begin(), u.end(), [](std::int64_t e) { return e != 0; });
        if (!unit || !monomial) {
            if (f.field.k == 1)
                os << a.coeffs[0];
            else
                os << '(' << to_string(a) << ')';
        }
        bool need_star = !unit || !monomial;
        for (int i = 0; i < f.n; ++i) {
            if (u[i] == 0) continue;
            if (need_star) os << '*';
            need_star = true;
            os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
            if (u[i] != 1) os << '^' << u[i];
        }
    }
    return os.str();
}

}  // namespace zetamill
