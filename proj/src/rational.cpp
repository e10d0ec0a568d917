#include "dqs/rational.hpp"

#include "dqs/error.hpp"

#include <cctype>

namespace dqs {

Rat mod1(const Rat& x) {
    Rat r = x;
    r.canonicalize();
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); // floor division
    Rat out = r - Rat(q);
    out.canonicalize();
    return out;
}

Rat parse_rational(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational", 0);
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(text))
            throw parse_error("malformed rational '" + text + "'", 0);
        return Rat(mpz_class(text));
    }
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q))
        throw parse_error("malformed rational '" + text + "'", slash);
    mpz_class den(q);
    if (den == 0)
        throw parse_error("zero denominator in '" + text + "'", slash + 1);
    Rat r(mpz_class(p), den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& x) {
    Rat r = x;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& q, long n) {
    if (n == 0)
        return Rat(1);
    bool inv = n < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -n : n);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
    out.canonicalize();
    return inv ? Rat(1) / out : out;
}

int compare(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c;
    }
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace dqs
