#ifndef VALTREE_EXT_VALUE_HPP
#define VALTREE_EXT_VALUE_HPP

#include <compare>
#include <optional>
#include <string>

#include "valtree/rational.hpp"

namespace valtree {

// Element of Λ∞ = (ℚ ⊕ ℚ·ε, lex) ∪ {∞}, with ε a positive infinitesimal.
// Λ is the smallest divisible ordered extension of ℚ that exhibits
// incommensurable augmentations; all valuation outputs live here.
class ExtValue {
  public:
    ExtValue() : a_(0), b_(0), inf_(false) {}
    /*implicit*/ ExtValue(const Rat& a) : a_(a), b_(0), inf_(false) {}
    ExtValue(const Rat& a, const Rat& b) : a_(a), b_(b), inf_(false) {}
    ExtValue(long a, long b) : a_(a), b_(b), inf_(false) {}

    static ExtValue infinity() {
        ExtValue v;
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }
    bool is_finite() const { return !inf_; }
    // Lies in Γ_ℚ (the divisible hull of v(K*)) rather than in Λ \ Γ_ℚ.
    bool is_commensurable() const { return inf_ || b_ == 0; }

    const Rat& rational_part() const {
        require_finite("rational_part");
        return a_;
    }
    const Rat& infinitesimal_part() const {
        require_finite("infinitesimal_part");
        return b_;
    }

    ExtValue operator+(const ExtValue& o) const {
        if (inf_ || o.inf_) return infinity();
        return ExtValue(a_ + o.a_, b_ + o.b_);
    }
    ExtValue operator-(const ExtValue& o) const {
        if (o.inf_) throw invalid_input("cannot subtract infinity");
        if (inf_) return infinity();
        return ExtValue(a_ - o.a_, b_ - o.b_);
    }
    ExtValue operator-() const {
        if (inf_) throw invalid_input("cannot negate infinity");
        return ExtValue(-a_, -b_);
    }

    // Scaling by a rational r; r·∞ = ∞ for r > 0, rejected otherwise.
    ExtValue scaled(const Rat& r) const {
        if (inf_) {
            if (r <= 0) throw invalid_input("scaling infinity by r <= 0 is rejected");
            return infinity();
        }
        return ExtValue(a_ * r, b_ * r);
    }

    bool operator==(const ExtValue& o) const {
        if (inf_ != o.inf_) return false;
        if (inf_) return true;
        return a_ == o.a_ && b_ == o.b_;
    }
    // Lexicographic on (a, b); every finite value < ∞.
    std::strong_ordering operator<=>(const ExtValue& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        int c = cmp(a_, o.a_);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        c = cmp(b_, o.b_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "3/2", "3/2+1*eps", "3/2-1/4*eps", "inf"
    std::string str() const;
    static ExtValue parse(const std::string& text);

  private:
    void require_finite(const char* what) const {
        if (inf_) throw invalid_input(std::string(what) + " of infinity");
    }
    Rat a_;
    Rat b_;
    bool inf_;
};

inline ExtValue ev_of_long(long a) { return ExtValue(Rat(a)); }

// Value of ε_μ: {−∞} ∪ Λ ∪ {∞}. The −∞ case (constants) is kept out of
// ExtValue arithmetic on purpose.
class EpsValue {
  public:
    static EpsValue minus_infinity() { return EpsValue(true, ExtValue()); }
    /*implicit*/ EpsValue(const ExtValue& v) : minus_inf_(false), v_(v) {}

    bool is_minus_infinity() const { return minus_inf_; }
    const ExtValue& value() const {
        if (minus_inf_) throw invalid_input("no ExtValue behind -infinity");
        return v_;
    }

    bool operator==(const EpsValue& o) const {
        if (minus_inf_ != o.minus_inf_) return false;
        return minus_inf_ || v_ == o.v_;
    }
    std::strong_ordering operator<=>(const EpsValue& o) const {
        if (minus_inf_ && o.minus_inf_) return std::strong_ordering::equal;
        if (minus_inf_) return std::strong_ordering::less;
        if (o.minus_inf_) return std::strong_ordering::greater;
        return v_ <=> o.v_;
    }

    std::string str() const { return minus_inf_ ? "-inf" : v_.str(); }

  private:
    EpsValue(bool mi, const ExtValue& v) : minus_inf_(mi), v_(v) {}
    bool minus_inf_;
    ExtValue v_;
};

// Quasi-cut induced in Γ_ℚ = ℚ by an element of Λ∞. Two elements are
// ∼_qcut-equivalent exactly when their classes coincide; on Γ_ℚ∞ itself this
// collapses to equality.
enum class QuasiCutKind { RationalPoint, PlusSide, MinusSide, Infinity };

struct QuasiCutClass {
    QuasiCutKind kind;
    Rat at;  // meaningful unless kind == Infinity

    bool operator==(const QuasiCutClass& o) const {
        if (kind != o.kind) return false;
        if (kind == QuasiCutKind::Infinity) return true;
        return at == o.at;
    }
    std::string str() const;
};

QuasiCutClass qcut_classify(const ExtValue& v);
bool qcut_equiv(const ExtValue& x, const ExtValue& y);

// For lo <= hi and not qcut_equiv(lo, hi): a rational α with lo ≤ (α,0) ≤ hi.
// Returns nullopt when the two are equivalent (no separating rational exists).
std::optional<Rat> qcut_separating_rational(const ExtValue& lo, const ExtValue& hi);

}  // namespace valtree

#endif
