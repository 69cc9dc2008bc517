#pragma once

namespace testsupport {

// Reference complementary error function in long double, independent of the
// library's rational-polynomial kernel: Maclaurin series for small
// arguments, the asymptotic continued fraction (modified Lentz) for large.
// Absolute error well under 1e-17 for |x| <= 6.
long double erfc_reference(long double x);

// Standard normal CDF built on erfc_reference.
long double phi_reference(long double z);

}  // namespace testsupport
