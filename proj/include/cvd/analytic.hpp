#pragma once

namespace cvd {

/// Free-space point-source Green's function C(r,t) = (4*pi*D*t)^(-n/2) *
/// exp(-r^2/(4*D*t)). Unit initial mass; callers scale by the number of
/// released molecules. Throws std::domain_error for t <= 0, and
/// std::invalid_argument for bad D or n.
double concentration(double r, double t, double diffusion, int dim);

/// First-passage density of a 1-D walker released a distance r0 from a
/// point absorber: F_h(r0,t) = r0 / sqrt(4*pi*D*t^3) * exp(-r0^2/(4*D*t)).
double first_hit_pdf_1d(double r0, double t, double diffusion);

/// Cumulative form of first_hit_pdf_1d: erfc(r0 / sqrt(4*D*t)).
double first_hit_cdf_1d(double r0, double t, double diffusion);

/// Per-axis displacement standard deviation for one diffusion step,
/// sqrt(2*D*dt).
double step_sigma(double diffusion, double dt);

}  // namespace cvd
