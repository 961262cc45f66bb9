#ifndef VALTREE_PADIC_HPP
#define VALTREE_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "valtree/poly.hpp"
#include "valtree/rational.hpp"

namespace valtree {

// Integer polynomial, ascending coefficients. The p-adic kernels work on
// these; conversions to/from Poly clear denominators explicitly.
using ZPoly = std::vector<Int>;

ZPoly zpoly_from_poly(const Poly& f);             // rejects non-integral input
Poly poly_from_zpoly(const ZPoly& f);
Int zpoly_eval(const ZPoly& f, const Int& x);
Int zpoly_eval_mod(const ZPoly& f, const Int& x, const Int& modulus);
ZPoly zpoly_derivative(const ZPoly& f);
ZPoly zpoly_mod(const ZPoly& f, const Int& modulus);
int zpoly_degree(const ZPoly& f);                 // -1 for zero

// Element of ℚ_p at finite precision: p^offset · unit with unit known
// mod p^prec. The offset may be a non-integer rational when the element
// arises from a ramified evaluation (denominator divides the working
// ramification index). Arithmetic tracks precision loss explicitly;
// comparisons below the certified precision throw rather than guess.
class PadicElement {
  public:
    // zero at precision N: "vp >= N, digits unknown"
    static PadicElement zero(const PrimeBase& base, long known_up_to);
    static PadicElement from_integer(const PrimeBase& base, const Int& n, long prec);
    static PadicElement from_rational(const PrimeBase& base, const Rat& q, long prec);
    // p^offset * unit directly
    PadicElement(const PrimeBase& base, Rat offset, Int unit, long prec);

    const PrimeBase& base() const { return base_; }
    bool is_zero_at_precision() const { return zero_; }
    // valuation as an ExtValue; throws precision_exhausted if only a lower
    // bound is known
    ExtValue valuation() const;
    const Rat& offset() const;
    const Int& unit() const;  // mod p^prec
    long precision() const { return prec_; }

    PadicElement operator+(const PadicElement& o) const;
    PadicElement operator-(const PadicElement& o) const;
    PadicElement operator*(const PadicElement& o) const;
    bool congruent(const PadicElement& o, long up_to) const;

    std::string str() const;

  private:
    void normalize();
    PrimeBase base_;
    Rat offset_;   // rational valuation offset
    Int unit_;     // unit part, reduced mod p^prec_
    long prec_;    // relative precision of the unit part
    bool zero_;    // true: nothing known beyond vp >= offset_
};

// Hensel data for an approximate simple root: F(c) ≡ 0 mod p^k with
// 2·vp(F'(c)) < k.
bool hensel_simple_root(const ZPoly& F, const Int& p, const Int& c, long k);

// Newton-lift c to a root approximation modulo p^target. Pre:
// hensel_simple_root(F, p, c, k).
Int hensel_lift_root(const ZPoly& F, const Int& p, Int c, long k, long target);

// All simple roots of F mod p (scan; desk-scale primes).
std::vector<Int> roots_mod_p(const ZPoly& F, const Int& p);

}  // namespace valtree

#endif
