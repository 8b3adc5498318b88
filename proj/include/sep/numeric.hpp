#ifndef SEP_NUMERIC_HPP
#define SEP_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sep {

// All face/h/gamma counts are exact: 2^l * C(m,l) and the gamma recursion
// intermediates overflow 64 bits well inside desk scale.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(long long n, long long k);

inline BigInt pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    BigInt one = 1;
    return one << static_cast<unsigned>(e);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

std::vector<std::string> to_decimal(const std::vector<BigInt>& xs);

// splitmix64 step; used to derive independent per-trial seeds.
std::uint64_t mix64(std::uint64_t x);

} // namespace sep

#endif
