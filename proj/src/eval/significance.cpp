#include "revrec/eval/significance.hpp"

#include <cmath>
#include <stdexcept>

#include "revrec/errors.hpp"

namespace revrec::eval {

double mean(const std::vector<double>& v) {
    double sum = 0.0;
    for (const double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
    const double m = mean(v);
    double ss = 0.0;
    for (const double x : v) ss += (x - m) * (x - m);
    return ss / static_cast<double>(v.size() - 1);
}

namespace {

// continued fraction for the incomplete beta (Lentz's method)
double beta_cf(double a, double b, double x) {
    constexpr int max_iterations = 300;
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("incomplete beta did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (df <= 0.0) return 1.0;
    if (std::isinf(t)) return 0.0;
    const double x = df / (df + t * t);
    return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

WelchResult welch_t_test(const std::vector<double>& sample_a, const std::vector<double>& sample_b) {
    if (sample_a.size() < 2 || sample_b.size() < 2)
        throw ValidationError("each sample needs at least two values");

    constexpr double variance_floor = 1e-12;
    const double na = static_cast<double>(sample_a.size());
    const double nb = static_cast<double>(sample_b.size());
    const double va = std::max(sample_variance(sample_a), variance_floor);
    const double vb = std::max(sample_variance(sample_b), variance_floor);

    const double se_a = va / na;
    const double se_b = vb / nb;
    WelchResult result;
    result.t = (mean(sample_a) - mean(sample_b)) / std::sqrt(se_a + se_b);
    result.df = (se_a + se_b) * (se_a + se_b) /
                (se_a * se_a / (na - 1.0) + se_b * se_b / (nb - 1.0));
    result.p = student_t_two_sided_p(result.t, result.df);
    return result;
}

} // namespace revrec::eval
