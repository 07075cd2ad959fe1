#include "starcalc/rational.hpp"

#include <cctype>

namespace starcalc {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text, bool allow_negative) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = (text[pos] == '-');
        ++pos;
    }
    if (negative && !allow_negative)
        throw std::invalid_argument("negative rational not allowed here: '" + text + "'");

    const size_t slash = text.find('/', pos);
    std::string num_str, den_str = "1";
    if (slash == std::string::npos) {
        if (!all_digits(text, pos, text.size()))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        num_str = text.substr(pos);
    } else {
        if (!all_digits(text, pos, slash) || !all_digits(text, slash + 1, text.size()))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        num_str = text.substr(pos, slash - pos);
        den_str = text.substr(slash + 1);
    }
    mpz_class num(num_str, 10), den(den_str, 10);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    if (negative) num = -num;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

Rat pow_rat(const Rat& q, unsigned e) {
    Rat out(1);
    Rat base = q;
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

long ceil_to_long(const Rat& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) throw std::overflow_error("ceil_to_long: value out of range");
    return z.get_si();
}

}  // namespace starcalc
