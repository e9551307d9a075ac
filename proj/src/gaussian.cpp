#include "circim/gaussian.hpp"

#include <ostream>

namespace circim {

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational base = *this, acc(1);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = im.str() + "*i";
    if (re.is_zero()) return imag;
    return re.str() + (im.sign() < 0 ? "" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational circle_point(const BigRational& t) {
    BigRational t2 = t * t;
    BigRational den = BigRational(1) + t2;
    return {(BigRational(1) - t2) / den, (BigRational(2) * t) / den};
}

}  // namespace circim
