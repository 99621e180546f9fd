#include "cvd/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cvd::stats {

namespace {

// Series expansion of P(a,x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Lentz continued fraction for the incomplete beta function.
double betacf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
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
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return h;
}

double betai(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                               std::lgamma(b) + a * std::log(x) +
                               b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * betacf(a, b, x) / a;
    }
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double simpson(double (*f)(double, const void*), const void* ctx, double a,
               double fa, double m, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double integrate_rec(double (*f)(double, const void*), const void* ctx,
                     double a, double fa, double b, double fb, double m,
                     double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm, ctx);
    const double frm = f(rm, ctx);
    const double left = simpson(f, ctx, a, fa, lm, flm, m, fm);
    const double right = simpson(f, ctx, m, fm, rm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return integrate_rec(f, ctx, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                         depth - 1) +
           integrate_rec(f, ctx, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                         depth - 1);
}

}  // namespace

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_p domain");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double chi2_sf(double x, int dof) {
    if (dof < 1) throw std::domain_error("chi2_sf needs dof >= 1");
    if (x <= 0.0) return 1.0;
    return 1.0 - gamma_p(0.5 * dof, 0.5 * x);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double student_t_sf(double t, int dof) {
    if (dof < 1) throw std::domain_error("student_t_sf needs dof >= 1");
    const double x = dof / (dof + t * t);
    const double half_tail = 0.5 * betai(0.5 * dof, 0.5, x);
    return t >= 0.0 ? half_tail : 1.0 - half_tail;
}

Chi2Result chi2_gof(const std::vector<double>& observed,
                    const std::vector<double>& expected, double min_expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw std::invalid_argument("chi2_gof: mismatched histogram sizes");
    }
    // Pool low-expectation bins left to right so every term is well scaled.
    std::vector<double> obs, exp;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= min_expected) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 && !exp.empty()) {
        obs.back() += o_acc;
        exp.back() += e_acc;
    }
    if (exp.size() < 2) {
        throw std::invalid_argument("chi2_gof: fewer than 2 usable bins");
    }
    Chi2Result r;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        const double d = obs[i] - exp[i];
        r.statistic += d * d / exp[i];
    }
    r.dof = static_cast<int>(exp.size()) - 1;
    r.p_value = chi2_sf(r.statistic, r.dof);
    return r;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("ls_slope needs >= 2 points");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

double paired_t_less(const std::vector<double>& a,
                     const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw std::invalid_argument("paired_t_less needs >= 2 pairs");
    }
    const int n = static_cast<int>(a.size());
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += a[i] - b[i];
    mean /= n;
    double var = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = a[i] - b[i] - mean;
        var += d * d;
    }
    var /= (n - 1);
    if (var == 0.0) {
        return mean < 0.0 ? 0.0 : 1.0;
    }
    const double t = mean / std::sqrt(var / n);
    // P(T <= t) under H0.
    return 1.0 - student_t_sf(t, n - 1);
}

double integrate(double (*f)(double, const void*), const void* ctx, double a,
                 double b, double tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a, ctx);
    const double fb = f(b, ctx);
    const double fm = f(m, ctx);
    const double whole = simpson(f, ctx, a, fa, m, fm, b, fb);
    return integrate_rec(f, ctx, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace cvd::stats
