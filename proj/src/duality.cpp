#include "iho/duality.hpp"

#include <cmath>

#include "iho/errors.hpp"

namespace iho {

void MetricDerivatives::validate() const {
    if (!(fprime > 0) || !(gprime > 0))
        throw InvalidInputError(
            "metric: horizon derivatives must both be positive");
}

MetricDerivatives schwarzschild_horizon(double r0) {
    if (!(r0 > 0)) throw InvalidInputError("metric: horizon radius must be positive");
    return {1.0 / r0, 1.0 / r0, r0};
}

double surface_gravity(const MetricDerivatives& md) {
    md.validate();
    return 0.5 * std::sqrt(md.fprime * md.gprime);
}

double hawking_temperature(const MetricDerivatives& md) {
    return surface_gravity(md) / (2.0 * M_PI);
}

double tunneling_rate(double eps, double t) {
    if (!(t > 0)) throw InvalidInputError("tunneling: temperature must be positive");
    return std::exp(-eps / t);
}

}  // namespace iho
