#ifndef VALTREE_POLY_HPP
#define VALTREE_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valtree/ext_value.hpp"
#include "valtree/rational.hpp"

namespace valtree {

// The base valued field is (ℚ, v_p). Primality is checked at construction by
// trial division; desk-scale primes only.
class PrimeBase {
  public:
    explicit PrimeBase(Int p);
    explicit PrimeBase(long p) : PrimeBase(Int(p)) {}
    const Int& p() const { return p_; }
    bool operator==(const PrimeBase& o) const { return p_ == o.p_; }

  private:
    Int p_;
};

// v_p on ℚ, valued in Λ∞ with zero ε part; vp(0) = ∞.
ExtValue vp(const Rat& r, const PrimeBase& base);

// Dense univariate polynomial over ℚ, ascending coefficients, no trailing
// zeros; the zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly x();
    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, size_t deg);
    // x - c
    static Poly linear_shifted(const Rat& c);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly pow(unsigned e) const;
    Rat eval(const Rat& point) const;
    Poly derivative() const;
    // f(x + c)
    Poly shifted(const Rat& c) const;

    // Euclidean division by a nonzero divisor; returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    std::string str() const;
    // Grammar: terms c*x^k | x^k | x | c joined by +/-; duplicate degrees are
    // rejected as non-canonical.
    static Poly parse(const std::string& text);

  private:
    void trim();
    std::vector<Rat> c_;
};

Poly operator*(const Rat& s, const Poly& f);

// ∂_b from Taylor's formula f(x+y) = Σ_b (∂_b f)(x) y^b. In characteristic
// zero ∂_b f = f^(b)/b!.
Poly hasse_derivative(const Poly& f, unsigned b);
// All of ∂_0 f, ..., ∂_deg(f) f.
std::vector<Poly> hasse_derivatives(const Poly& f);

// Coefficients a_s of f = Σ a_s φ^s with deg a_s < deg φ. Pre: φ monic,
// deg φ >= 1. The zero polynomial expands to an empty sequence.
std::vector<Poly> phi_expansion(const Poly& f, const Poly& phi);

// Res(f, g); for monic f this is ∏ g(α) over the roots α of f.
Rat resultant(const Poly& f, const Poly& g);

// Monic gcd over ℚ (zero polynomial when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

bool is_squarefree(const Poly& f);

enum class Irreducibility { Irreducible, Reducible, NeedsCertificate };

// Exact for deg <= 4 (rational-root test plus quadratic-split search on the
// integral model); higher degrees report NeedsCertificate.
Irreducibility irreducibility_over_Q(const Poly& f);

// Convenience used by validators: true when the test proves irreducibility or
// the caller vouches for it.
bool check_irreducible(const Poly& f, bool assume_irreducible_if_unknown);

}  // namespace valtree

#endif
