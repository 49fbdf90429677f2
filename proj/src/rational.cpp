#include "arrangeops/rational.hpp"

#include <cctype>
#include <ostream>

#include "arrangeops/error.hpp"

namespace arrangeops {

Rat::Rat(int num, int den) {
    require(den != 0, ErrorCode::Domain, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
    require(!b.is_zero(), ErrorCode::Domain, "division by zero rational");
    return Rat(mpq_class(a.v_ / b.v_));
}

static bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    auto digits = [&](std::size_t& k) {
        std::size_t start = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        return k > start;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    if (!digits(i)) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (!digits(i)) return false;
    return i == s.size();
}

Rat Rat::parse(const std::string& text) {
    require(looks_like_rational(text), ErrorCode::Parse,
            "not a rational: \"" + text + "\"");
    auto strip_plus = [](std::string s) {
        return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(mpq_class(mpz_class(strip_plus(text))));
    mpz_class num(strip_plus(text.substr(0, slash)));
    mpz_class den(strip_plus(text.substr(slash + 1)));
    require(den != 0, ErrorCode::Parse, "zero denominator in \"" + text + "\"");
    return Rat(mpq_class(num, den));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace arrangeops
