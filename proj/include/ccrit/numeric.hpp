#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ccrit {

// All weights, distances and crossing counts are arbitrary-precision
// integers; intermediate vertex positions and claim-point coordinates are
// exact rationals. No floating point anywhere in the pipeline.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return Int(s, 10);
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// "p/q" with q omitted when 1; fractions are kept canonical by mpq_class.
inline std::string to_fraction(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str(10);
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

inline Rat rat_from_fraction(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// LCM of the (canonical) denominators of a set of rationals.
inline Int denominator_lcm(const std::vector<Rat>& values) {
    Int l = 1;
    for (const Rat& v : values) l = lcm(l, Int(v.get_den()));
    return l;
}

}  // namespace ccrit
