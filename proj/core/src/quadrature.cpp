#include "dielrec/quadrature.hpp"

namespace dielrec {

double ww_pole_value(int power, double center, double width) {
    if (!(width > 0.0)) {
        throw InvalidParameter("ww_pole_value needs a positive line width");
    }
    switch (power) {
        case 0: return 1.0;
        case 1: return center;
        case 2: return center * center;
        case 3: return center * center * center;
        default:
            throw InvalidParameter("ww_pole_value supports moment powers 0..3");
    }
}

} // namespace dielrec
