#pragma once

namespace fillplan {

// Standard-normal kernel. All functions reject non-finite arguments with
// std::domain_error and are pure, so they are safe to call concurrently.

/// Density phi(z) = exp(-z^2/2) / sqrt(2*pi).
double std_normal_pdf(double z);

/// Distribution function Phi(z), absolute error below 1e-12 on [-8, 8].
double std_normal_cdf(double z);

/// First-order loss function L(z) = E[(X - z)+] = phi(z) - z * (1 - Phi(z)).
/// Strictly decreasing and convex, with L(z) >= max(0, -z).
double std_normal_loss(double z);

/// Unique z with std_normal_loss(z) == target, for target > 0.
/// Residual |L(z) - target| <= 1e-10 * max(1, target).
double inv_std_normal_loss(double target);

}  // namespace fillplan
