#include "conelab/rational.hpp"

#include <ostream>

namespace conelab {

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
    }
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) throw bad();
    mpq_class v(num + "/" + den);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

long Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return mpz_get_si(q.get_mpz_t());
}

long Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return mpz_get_si(q.get_mpz_t());
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace conelab
