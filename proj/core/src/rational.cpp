#include "opcalc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace opcalc {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q.get_si();
}

long Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q.get_si();
}

}  // namespace opcalc
