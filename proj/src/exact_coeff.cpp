#include "spinflat/exact_coeff.hpp"

#include <cmath>
#include <sstream>

namespace spinflat {

double ExactCoeff::value() const {
    return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(2.0)) /
           std::ldexp(1.0, k);
}

std::string ExactCoeff::str() const {
    std::ostringstream os;
    if (b == 0 && k == 0) {
        os << a;
        return os.str();
    }
    os << '(' << a;
    if (b >= 0)
        os << '+' << b;
    else
        os << b;
    os << "*sqrt2)";
    if (k > 0) os << "/2^" << k;
    return os.str();
}

} // namespace spinflat
