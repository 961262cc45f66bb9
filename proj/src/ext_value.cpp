#include "valtree/ext_value.hpp"

namespace valtree {

std::string ExtValue::str() const {
    if (inf_) return "inf";
    if (b_ == 0) return rat_to_string(a_);
    std::string s = rat_to_string(a_);
    if (b_ > 0) s += "+";
    s += rat_to_string(b_);
    s += "*eps";
    return s;
}

ExtValue ExtValue::parse(const std::string& text) {
    if (text == "inf") return infinity();
    // Split at the '+'/'-' that starts the ε term, if any. A leading sign
    // belongs to the rational part.
    size_t star = text.find("*eps");
    if (star == std::string::npos) {
        if (text.find("eps") != std::string::npos)
            throw invalid_input("malformed value '" + text + "' (use c*eps)");
        return ExtValue(rat_from_string(text));
    }
    if (star + 4 != text.size())
        throw invalid_input("trailing characters after eps in '" + text + "'");
    // Walk back from '*eps' to the sign separating the two terms.
    size_t split = std::string::npos;
    for (size_t i = star; i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            char prev = text[i - 1];
            if (prev == '/' || prev == '+' || prev == '-') continue;
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw invalid_input("missing rational part in '" + text + "'");
    Rat a = rat_from_string(text.substr(0, split));
    std::string bpart = text.substr(split, star - split);
    if (bpart == "+") bpart = "1";
    else if (bpart == "-") bpart = "-1";
    Rat b = rat_from_string(bpart);
    return ExtValue(a, b);
}

std::string QuasiCutClass::str() const {
    switch (kind) {
        case QuasiCutKind::RationalPoint: return rat_to_string(at);
        case QuasiCutKind::PlusSide: return rat_to_string(at) + "+";
        case QuasiCutKind::MinusSide: return rat_to_string(at) + "-";
        case QuasiCutKind::Infinity: return "inf";
    }
    return "?";
}

QuasiCutClass qcut_classify(const ExtValue& v) {
    if (v.is_infinity()) return {QuasiCutKind::Infinity, Rat(0)};
    const Rat& b = v.infinitesimal_part();
    if (b == 0) return {QuasiCutKind::RationalPoint, v.rational_part()};
    if (b > 0) return {QuasiCutKind::PlusSide, v.rational_part()};
    return {QuasiCutKind::MinusSide, v.rational_part()};
}

bool qcut_equiv(const ExtValue& x, const ExtValue& y) {
    return qcut_classify(x) == qcut_classify(y);
}

std::optional<Rat> qcut_separating_rational(const ExtValue& lo, const ExtValue& hi) {
    if (qcut_equiv(lo, hi)) return std::nullopt;
    if (lo > hi) throw invalid_input("qcut_separating_rational expects lo <= hi");
    // hi = ∞: any rational above lo works.
    if (hi.is_infinity()) {
        Rat a = lo.is_infinity() ? Rat(0) : lo.rational_part() + 1;
        return a;
    }
    const Rat &la = lo.rational_part(), &lb = lo.infinitesimal_part();
    const Rat &ha = hi.rational_part(), &hb = hi.infinitesimal_part();
    // (α,0) with lo ≤ α ≤ hi: α = la works unless lb > 0; α = ha works
    // unless hb < 0; otherwise any rational strictly between la and ha.
    if (lb <= 0) return la;
    if (hb >= 0) return ha;
    return (la + ha) / 2;  // lb > 0 and hb < 0 force la < ha here
}

}  // namespace valtree
