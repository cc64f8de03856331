#pragma once

namespace mcb {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
/// [0, 1]. Continued-fraction evaluation, absolute accuracy ~1e-14.
double incomplete_beta(double a, double b, double x);

/// Upper tail P(F >= f) of the F distribution with d1 and d2 degrees of
/// freedom.
double f_survival(double d1, double d2, double f);

}  // namespace mcb
