#include "spinlab/scalar.hpp"

namespace spinlab {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& z) {
    if (sgn(z.im) == 0)
        return to_string(z.re);
    std::string out;
    if (sgn(z.re) != 0)
        out = to_string(z.re) + (sgn(z.im) > 0 ? "+" : "");
    return out + to_string(z.im) + "i";
}

}  // namespace spinlab
