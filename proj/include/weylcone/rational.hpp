#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace weylcone {

/// Exact arbitrary-precision rational; every computation in this library is
/// carried out over this type or over plain machine integers.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;

inline std::string num_str(const Rat& q) { return numerator(q).str(); }
inline std::string den_str(const Rat& q) { return denominator(q).str(); }

inline RatVec to_rat(const IntVec& v)
{
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

inline Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline long dot(const IntVec& a, const IntVec& b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += long(a[i]) * b[i];
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b)
{
    IntVec s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

inline IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
    return s;
}

inline bool is_zero(const IntVec& a)
{
    for (int x : a)
        if (x != 0) return false;
    return true;
}

} // namespace weylcone
