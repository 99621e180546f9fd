#include "cvd/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace cvd {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void check_diffusion(double diffusion) {
    if (!(diffusion > 0.0) || !std::isfinite(diffusion)) {
        throw std::invalid_argument("diffusion coefficient must be positive");
    }
}
}  // namespace

double concentration(double r, double t, double diffusion, int dim) {
    check_diffusion(diffusion);
    if (dim < 1 || dim > 3) {
        throw std::invalid_argument("dimension must be 1, 2 or 3");
    }
    if (!(t > 0.0)) {
        throw std::domain_error("concentration requires t > 0");
    }
    const double four_dt = 4.0 * diffusion * t;
    return std::pow(kPi * four_dt, -0.5 * dim) * std::exp(-r * r / four_dt);
}

double first_hit_pdf_1d(double r0, double t, double diffusion) {
    check_diffusion(diffusion);
    if (!(r0 > 0.0)) throw std::domain_error("first_hit_pdf_1d requires r0 > 0");
    if (!(t > 0.0)) throw std::domain_error("first_hit_pdf_1d requires t > 0");
    const double four_d = 4.0 * diffusion;
    return r0 / std::sqrt(kPi * four_d * t * t * t) *
           std::exp(-r0 * r0 / (four_d * t));
}

double first_hit_cdf_1d(double r0, double t, double diffusion) {
    check_diffusion(diffusion);
    if (!(r0 > 0.0)) throw std::domain_error("first_hit_cdf_1d requires r0 > 0");
    if (t <= 0.0) return 0.0;
    return std::erfc(r0 / std::sqrt(4.0 * diffusion * t));
}

double step_sigma(double diffusion, double dt) {
    if (!(diffusion > 0.0) || !std::isfinite(diffusion)) {
        throw std::invalid_argument("diffusion coefficient must be positive");
    }
    if (!(dt >= 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("step time must be non-negative");
    }
    return std::sqrt(2.0 * diffusion * dt);
}

}  // namespace cvd
