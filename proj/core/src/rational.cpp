#include "revar/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace revar {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto check_int = [](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("Rational::parse: empty integer part");
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("Rational::parse: lone sign");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("Rational::parse: bad character in '" + part + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(mpq_class(mpz_class(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace revar
