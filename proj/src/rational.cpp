#include "modtens/rational.hpp"

namespace modtens {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(mpq_class(mpz_class(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace modtens
