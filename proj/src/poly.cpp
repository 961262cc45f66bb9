#include "valtree/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace valtree {

PrimeBase::PrimeBase(Int p) : p_(std::move(p)) {
    if (p_ < 2) throw invalid_input("prime base must be >= 2");
    for (Int d = 2; d * d <= p_; ++d)
        if (p_ % d == 0) throw invalid_input("prime base " + p_.get_str() + " is composite");
}

ExtValue vp(const Rat& r, const PrimeBase& base) {
    if (r == 0) return ExtValue::infinity();
    long v = int_valuation(r.get_num(), base.p()) - int_valuation(r.get_den(), base.p());
    return ExtValue(Rat(v));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, size_t deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_shifted(const Rat& c) { return Poly({-c, Rat(1)}); }

const Rat& Poly::coeff(size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw invalid_input("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rat> v(c_);
    for (auto& q : v) q = -q;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> v(c_);
    for (auto& q : v) q *= s;
    return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& f) { return f * s; }

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::one();
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rat Poly::eval(const Rat& point) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly Poly::shifted(const Rat& c) const {
    // Horner: f(x+c) folded from the top coefficient down.
    Poly acc;
    Poly xc({c, Rat(1)});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * xc + Poly::constant(c_[i]);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw invalid_input("division by zero polynomial");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    std::vector<Rat> q(rem.degree() - divisor.degree() + 1, Rat(0));
    const Rat& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        size_t shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() / lead;
        q[shift] = factor;
        rem = rem - Poly::monomial(factor, shift) * divisor;
    }
    return {Poly(std::move(q)), rem};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (i == 0) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

struct TermParser {
    const std::string& s;
    size_t pos = 0;

    explicit TermParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    Rat parse_number() {
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) throw invalid_input("expected number at '" + s.substr(start) + "'");
        return rat_from_string(s.substr(start, pos - start));
    }

    // term := number ['*' x-part] | x-part ; x-part := 'x' ['^' k]
    std::pair<size_t, Rat> parse_term() {
        skip_ws();
        Rat coef(1);
        bool saw_number = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            coef = parse_number();
            saw_number = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            size_t deg = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws();
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (start == pos) throw invalid_input("expected exponent in polynomial");
                deg = std::stoul(s.substr(start, pos - start));
            }
            return {deg, coef};
        }
        if (!saw_number) throw invalid_input("expected term in polynomial '" + s + "'");
        return {0, coef};
    }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
    TermParser p(text);
    std::map<size_t, Rat> terms;
    bool first = true;
    while (!p.done()) {
        int sign = 1;
        p.skip_ws();
        if (p.peek() == '+' || p.peek() == '-') {
            sign = p.peek() == '-' ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            throw invalid_input("expected +/- between terms in '" + text + "'");
        }
        auto [deg, coef] = p.parse_term();
        if (terms.count(deg))
            throw invalid_input("duplicate degree " + std::to_string(deg) + " term in '" + text +
                                "'");
        terms[deg] = sign < 0 ? Rat(-coef) : coef;
        first = false;
    }
    if (first) throw invalid_input("empty polynomial text");
    std::vector<Rat> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, Rat(0));
    for (auto& [d, c] : terms) coeffs[d] = c;
    return Poly(std::move(coeffs));
}

Poly hasse_derivative(const Poly& f, unsigned b) {
    int n = f.degree();
    if (static_cast<int>(b) > n) return Poly();
    std::vector<Rat> v(n - b + 1, Rat(0));
    for (int k = b; k <= n; ++k) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), k, b);
        v[k - b] = f.coeff(k) * Rat(binom);
    }
    return Poly(std::move(v));
}

std::vector<Poly> hasse_derivatives(const Poly& f) {
    std::vector<Poly> out;
    int n = std::max(f.degree(), 0);
    out.reserve(n + 1);
    for (int b = 0; b <= n; ++b) out.push_back(hasse_derivative(f, b));
    return out;
}

std::vector<Poly> phi_expansion(const Poly& f, const Poly& phi) {
    if (!phi.is_monic() || phi.degree() < 1)
        throw invalid_input("phi_expansion needs a monic divisor of degree >= 1");
    std::vector<Poly> out;
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = rest.divmod(phi);
        out.push_back(r);
        rest = q;
    }
    return out;
}

Rat resultant(const Poly& f, const Poly& g) {
    // Res(f,g) = lc(f)^deg(g) ∏ g(α) over roots α of f. Euclidean recursion:
    // Res(f,g) = (-1)^(deg f · deg g) lc(g)^(deg f - deg r) Res(g, r) with
    // r = f mod g.
    int df = f.degree(), dg = g.degree();
    if (df < 0 || dg < 0) return Rat(0);
    if (df == 0 && dg == 0) return Rat(1);
    if (df == 0) {
        Rat r = 1;
        for (int i = 0; i < dg; ++i) r *= f.coeff(0);
        return r;
    }
    if (dg == 0) {
        Rat r = 1;
        for (int i = 0; i < df; ++i) r *= g.coeff(0);
        return r;
    }
    auto [q, rem] = f.divmod(g);
    (void)q;
    Rat sign = (static_cast<long>(df) * dg) % 2 == 0 ? Rat(1) : Rat(-1);
    if (rem.is_zero()) return Rat(0);
    int dr = rem.degree();
    Rat lead_pow = 1;
    for (int i = 0; i < df - dr; ++i) lead_pow *= g.leading();
    return sign * lead_pow * resultant(g, rem);
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading());
}

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

namespace {

// Integer monic model of a monic rational polynomial: substitute x = y/λ and
// scale so the result is monic with integer coefficients.
std::vector<Int> monic_integral_model(const Poly& f) {
    int n = f.degree();
    Int lambda = 1;
    for (int i = 0; i < n; ++i) lambda = lcm(lambda, f.coeff(i).get_den());
    // y^n + Σ c_i λ^(n-i) y^i
    std::vector<Int> out(n + 1);
    out[n] = 1;
    for (int i = 0; i < n; ++i) {
        Rat scaled = f.coeff(i) * Rat(pow_int(lambda, n - i));
        if (scaled.get_den() != 1) {
            // λ was an lcm of denominators, so powers of it clear every one
            throw error("internal: integral model not integral");
        }
        out[i] = scaled.get_num();
    }
    return out;
}

bool has_integer_root(const std::vector<Int>& c) {
    // Monic: integer roots divide the constant term.
    const Int& a0 = c[0];
    if (a0 == 0) return true;
    std::vector<Int> divisors;
    for (Int d = 1; d * d <= abs(a0); ++d) {
        if (abs(a0) % d == 0) {
            divisors.push_back(d);
            divisors.push_back(abs(a0) / d);
        }
    }
    auto value_at = [&](const Int& t) {
        Int acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
        return acc;
    };
    for (const Int& d : divisors) {
        if (value_at(d) == 0 || value_at(-d) == 0) return true;
    }
    return false;
}

// Monic integer quartic: test for a split into two monic integer quadratics.
bool quartic_has_quadratic_split(const std::vector<Int>& c) {
    const Int &e = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3];
    if (e == 0) return true;
    std::vector<Int> bs;
    for (Int d = 1; d * d <= abs(e); ++d) {
        if (abs(e) % d == 0) {
            bs.push_back(d);
            bs.push_back(-d);
            bs.push_back(abs(e) / d);
            bs.push_back(-abs(e) / d);
        }
    }
    for (const Int& b : bs) {
        if (b == 0) continue;
        if (e % b != 0) continue;
        Int d = e / b;
        // (x²+ax+b)(x²+cx+d): a+c = c3, ac = c2-b-d, ad+bc = c1
        Int s = c3;
        Int prod = c2 - b - d;
        Int disc = s * s - 4 * prod;
        if (disc < 0) continue;
        Int root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        if (root * root != disc) continue;
        for (int pick = 0; pick < 2; ++pick) {
            Int twice_a = pick == 0 ? s + root : s - root;
            if (twice_a % 2 != 0) continue;
            Int a = twice_a / 2;
            Int cc = s - a;
            if (a * d + b * cc == c1) return true;
        }
    }
    return false;
}

}  // namespace

Irreducibility irreducibility_over_Q(const Poly& f) {
    int n = f.degree();
    if (n <= 0) return Irreducibility::Reducible;  // units/zero are not irreducible
    if (n == 1) return Irreducibility::Irreducible;
    if (!f.is_monic()) {
        Poly monic = f * (Rat(1) / f.leading());
        return irreducibility_over_Q(monic);
    }
    if (n > 4) return Irreducibility::NeedsCertificate;
    std::vector<Int> c = monic_integral_model(f);
    if (has_integer_root(c)) return Irreducibility::Reducible;
    if (n <= 3) return Irreducibility::Irreducible;
    return quartic_has_quadratic_split(c) ? Irreducibility::Reducible
                                          : Irreducibility::Irreducible;
}

bool check_irreducible(const Poly& f, bool assume_irreducible_if_unknown) {
    switch (irreducibility_over_Q(f)) {
        case Irreducibility::Irreducible: return true;
        case Irreducibility::Reducible: return false;
        case Irreducibility::NeedsCertificate: return assume_irreducible_if_unknown;
    }
    return false;
}

}  // namespace valtree
