#include "surgery/rational.hpp"

#include <cctype>
#include <ostream>

namespace surgery {

std::string Rational::to_string() const {
    // Always render an explicit denominator so output round-trips and
    // downstream consumers never have to special-case integers.
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!looks_like_integer(num_part) || !looks_like_integer(den_part)) {
        fail(ErrorKind::ParseError, "malformed rational '" + text + "'");
    }
    // mpz rejects a leading '+', so strip it.
    Integer n(num_part[0] == '+' ? num_part.substr(1) : num_part);
    Integer d(den_part[0] == '+' ? den_part.substr(1) : den_part);
    if (d == 0) fail(ErrorKind::ZeroDenominator, "rational with denominator 0: '" + text + "'");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Mod3Residue mod3_residue(const Rational& r) {
    const Integer den = r.denominator();
    const Mod3Residue den_res = Mod3Residue::of(den);
    if (den_res.value() == 0) {
        fail(ErrorKind::DenominatorNotInvertible,
             "denominator " + den.get_str() + " is divisible by 3");
    }
    // Inverse of the denominator in Z/3: 1 and 2 are each self-inverse.
    const Mod3Residue num_res = Mod3Residue::of(r.numerator());
    return num_res * den_res;
}

}  // namespace surgery
