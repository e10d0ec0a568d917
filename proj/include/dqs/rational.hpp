#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dqs {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; long is 64-bit on every target we build
inline Rat to_rat(long long n) { return Rat(static_cast<long>(n)); }
inline Rat to_rat(long long n, long long d) {
    Rat r(static_cast<long>(n), static_cast<long>(d));
    r.canonicalize();
    return r;
}

// Reduce into [0, 1).
Rat mod1(const Rat& x);

// Parse "p/q" or "p" (q > 0 after reduction). Throws parse_error on junk.
Rat parse_rational(const std::string& text);

// Canonical form "p/q" with q >= 1, always including the denominator.
std::string format_rational(const Rat& x);

// q^n for n in Z (q != 0 for negative n).
Rat rat_pow(const Rat& q, long n);

// Lexicographic comparison of rational vectors.
int compare(const std::vector<Rat>& a, const std::vector<Rat>& b);

} // namespace dqs
