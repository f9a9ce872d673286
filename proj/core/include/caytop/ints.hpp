#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace caytop {

// Arbitrary-precision signed integer. Smith normal form intermediates can blow
// up well past 64 bits even for small inputs, so everything math-facing uses
// this type.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Thrown when a structural invariant the library itself is responsible for
// turns out broken. The CLI maps this to exit code 4.
class internal_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Quotient rounded toward negative infinity (operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// Representative of a mod n in [0, n); requires n > 0.
inline Int pos_mod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

inline bool fits_int64(const Int& a) {
    return a >= std::numeric_limits<long long>::min() &&
           a <= std::numeric_limits<long long>::max();
}

inline long long to_int64(const Int& a) {
    if (!fits_int64(a)) throw std::overflow_error("integer too large for int64: " + a.str());
    return a.convert_to<long long>();
}

} // namespace caytop
