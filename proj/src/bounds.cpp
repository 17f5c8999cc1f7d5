#include "gencover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "gencover/words.hpp"

namespace gencover {

namespace {

// x*log(x) with the limit value 0 at x=0, never left to floating point.
double xlogx(double x) {
    if (x == 0.0) return 0.0;
    return x * std::log(x);
}

}  // namespace

double entropy(int q, double x) {
    if (q < 2) throw std::domain_error("entropy base must be at least 2");
    if (x < 0.0 || x > 1.0) throw std::domain_error("entropy argument must be in [0,1]");
    if (x == 0.0) return 0.0;
    double lq = std::log(static_cast<double>(q));
    return (x * std::log(static_cast<double>(q - 1)) - xlogx(x) - xlogx(1.0 - x)) / lq;
}

double kappa1(double rho, int q) {
    if (rho < 0.0 || rho > 1.0) throw std::domain_error("rho must be in [0,1]");
    double threshold = 1.0 - 1.0 / q;
    if (rho >= threshold) return 0.0;
    return 1.0 - entropy(q, rho);
}

double kappa2(double rho, int q) { return kappa1(rho, q * q); }

double upper_trivial(double rho) {
    if (rho < 0.0 || rho > 1.0) throw std::domain_error("rho must be in [0,1]");
    return 1.0 - entropy(2, rho / 2.0);
}

double s_func(double rho) {
    if (rho < 0.0 || rho >= 0.75) throw std::domain_error("s is defined on [0, 3/4)");
    return (1.0 + 8.0 * rho - std::sqrt(1.0 + 16.0 * rho - 16.0 * rho * rho)) / 10.0;
}

double f_func(double rho) {
    double s = s_func(rho);
    double tail = (rho == s) ? 0.0 : entropy(2, (rho - s) / (1.0 - s));
    return entropy(2, s) + 2.0 * s + 2.0 * (1.0 - s) * tail;
}

double upper_better(double rho) {
    if (rho < 0.0 || rho > 1.0) throw std::domain_error("rho must be in [0,1]");
    if (rho >= 0.75) return 0.0;
    return 1.0 - (4.0 * entropy(4, rho) - f_func(rho));
}

double overlap_exponent(double mu, double rho, int q) {
    if (mu < 0.0 || mu > rho) throw std::domain_error("mu must be in [0, rho]");
    if (rho >= 1.0 - 1.0 / (static_cast<double>(q) * q))
        throw std::domain_error("rho must be below 1 - 1/q^2");
    if (mu <= 1.0 - q * (1.0 - rho)) return 1.0;
    if (mu == rho) return rho;
    return mu + (1.0 - mu) * entropy(q, (rho - mu) / (1.0 - mu));
}

double entropy_identity_residual(double rho, int q) {
    double mu = q * rho / (q + 1.0);
    double lhs = entropy(q, mu) + mu + (1.0 - mu) * entropy(q, (rho - mu) / (1.0 - mu));
    return std::abs(lhs - 2.0 * entropy(q * q, rho));
}

double entropy_gap(double rho, int q) {
    return entropy(q, q * rho / (q + 1.0)) - entropy(q * q, rho);
}

double inverse_binomial_moment(long long m, double p) {
    if (m < 0) throw std::domain_error("m must be non-negative");
    if (p <= 0.0 || p > 1.0) throw std::domain_error("p must be in (0,1]");
    double mp1 = static_cast<double>(m) + 1.0;
    return (1.0 - std::pow(1.0 - p, mp1)) / (p * mp1);
}

double binomial_tail_bound(double n, double p, double a) {
    if (a <= 0.0) throw std::domain_error("a must be positive");
    double np = n * p;
    if (np <= 0.0) throw std::domain_error("n*p must be positive");
    return std::exp(-(a * a) / (2.0 * np) * (1.0 - a / (3.0 * np)));
}

double binomial_tail_bound_gamma(double np, double gamma) {
    if (np <= 0.0) throw std::domain_error("n*p must be positive");
    if (gamma <= 0.0) throw std::domain_error("gamma must be positive");
    return std::exp(-0.5 * gamma * gamma * np * (1.0 - gamma / 3.0));
}

double log2_bigint(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log of non-positive value");
    std::size_t bits = msb(v);  // index of highest set bit
    if (bits < 63) return std::log2(static_cast<double>(v.convert_to<std::uint64_t>()));
    // take the top 63 bits and account for the shift
    BigInt top = v >> (bits - 62);
    return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
           static_cast<double>(bits - 62);
}

bool ball_entropy_check(int t, int n, int q, double rho) {
    double limit = 1.0 - std::pow(static_cast<double>(q), -t);
    if (rho < 0.0 || rho > limit + 1e-12)
        throw std::domain_error("rho must be in [0, 1-1/q^t]");
    int qt = 1;
    for (int i = 0; i < t; ++i) qt *= q;
    int r = static_cast<int>(floor_index(rho * n));
    BigInt v = ball_size(t, r, n, q);
    double lhs = log2_bigint(v) / std::log2(static_cast<double>(q));
    double rhs = static_cast<double>(t) * n * entropy(qt, std::min(rho, 1.0));
    // 1e-9 absorbs float error in the transcendental side; the inequality is
    // exact-vs-exact only at rho = 0 where both sides are 0.
    return lhs <= rhs + 1e-9;
}

std::vector<BoundPoint> rate_curves(int q, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("need at least 2 grid points");
    std::vector<BoundPoint> rows;
    rows.reserve(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        double rho = static_cast<double>(i) / (grid_points - 1);
        BoundPoint p;
        p.rho = rho;
        p.kappa2 = kappa2(rho, q);
        p.lower = p.kappa2;  // the ball-covering bound and the exact rate coincide
        if (q == 2) {
            p.upper_trivial = upper_trivial(rho);
            p.upper_better = upper_better(rho);
        }
        rows.push_back(p);
    }
    return rows;
}

void write_rate_curves_csv(std::ostream& out, const std::vector<BoundPoint>& rows) {
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    out << "rho,lower,kappa2,upper_trivial,upper_better\n";
    for (const BoundPoint& p : rows) {
        out << fmt(p.rho) << ',' << fmt(p.lower) << ',' << fmt(p.kappa2) << ',';
        if (p.upper_trivial) out << fmt(*p.upper_trivial);
        out << ',';
        if (p.upper_better) out << fmt(*p.upper_better);
        out << '\n';
    }
}

}  // namespace gencover
