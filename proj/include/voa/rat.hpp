#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace voa {

// Exact rational scalar. Always canonical (lowest terms, positive
// denominator); there is no floating point anywhere in this project.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q" (base 10).
inline std::optional<Rat> parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Generalized binomial coefficient C(a, i) = a(a-1)...(a-i+1)/i! for any
// integer a (negative upper arguments expand as in residue calculus).
inline Rat binom(long a, long i) {
    if (i < 0) return 0;
    mpz_class z;
    mpz_bin_ui(z.get_mpz_t(), mpz_class(a).get_mpz_t(),
               static_cast<unsigned long>(i));
    return Rat(z);
}

inline Rat factorial(long n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(z);
}

}  // namespace voa
