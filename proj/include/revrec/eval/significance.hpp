#pragma once

#include <vector>

namespace revrec::eval {

struct WelchResult {
    double t = 0.0;  // sign follows mean(a) - mean(b)
    double df = 0.0; // Welch-Satterthwaite degrees of freedom
    double p = 1.0;  // two-sided
};

// Unequal-variance t-test. Both samples need at least two values. Sample
// variances are floored at 1e-12 so that two constant samples with different
// means still produce a finite statistic; two identical constant samples give
// t = 0 and p = 1.
WelchResult welch_t_test(const std::vector<double>& sample_a, const std::vector<double>& sample_b);

// I_x(a, b), evaluated by continued fraction to better than 1e-10.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of a t statistic at df degrees of freedom.
double student_t_two_sided_p(double t, double df);

double mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v); // n-1 denominator

} // namespace revrec::eval
