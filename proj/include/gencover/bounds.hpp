#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "gencover/base.hpp"

namespace gencover {

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x),
/// with H_q(0) = 0 and H_q(1) = log_q(q-1) by explicit branch.
double entropy(int q, double x);

/// Optimal rate of first-order covering codes at normalized radius rho:
/// 1 - H_q(rho) below 1 - 1/q, zero beyond.
double kappa1(double rho, int q);

/// Optimal rate of second-order covering codes: 1 - H_{q^2}(rho) below
/// 1 - 1/q^2, zero beyond. Identically kappa1(rho, q^2).
double kappa2(double rho, int q);

/// Second-order rate upper bound 1 - H_2(rho/2) (binary alphabet).
double upper_trivial(double rho);

/// Helper of the sharper binary upper bound, defined on [0, 3/4).
double s_func(double rho);
double f_func(double rho);

/// Sharper binary upper bound 1 - (4 H_4(rho) - f(rho)) below 3/4, zero beyond.
double upper_better(double rho);

/// Exponent governing the neighbor count of a cover pair whose cross
/// distance is mu*n: 1 when mu <= 1 - q(1-rho), otherwise
/// mu + (1-mu) H_q((rho-mu)/(1-mu)).
double overlap_exponent(double mu, double rho, int q);

/// |H_q(mu) + mu + (1-mu) H_q((rho-mu)/(1-mu)) - 2 H_{q^2}(rho)| at
/// mu = q rho/(q+1); mathematically zero.
double entropy_identity_residual(double rho, int q);

/// H_q(q rho/(q+1)) - H_{q^2}(rho); positive on the open interval
/// (0, 1-1/q^2) and zero at both endpoints.
double entropy_gap(double rho, int q);

/// E[1/(Y+1)] for Y ~ Bin(m, p): (1 - (1-p)^{m+1}) / (p (m+1)).
/// Strictly decreasing in m.
double inverse_binomial_moment(long long m, double p);

/// Upper tail of X ~ Bin(n, p): P[X >= np + a] <= exp(-a^2/(2np) (1 - a/(3np))).
double binomial_tail_bound(double n, double p, double a);

/// Relative form, a = gamma*np: exp(-gamma^2 np / 2 * (1 - gamma/3)).
double binomial_tail_bound_gamma(double np, double gamma);

/// True iff the exact ball volume V^(t)_{floor(rho n), n, q} is at most
/// q^{t n H_{q^t}(rho)}. Compared in the log domain; the volume side is
/// exact big-integer arithmetic.
bool ball_entropy_check(int t, int n, int q, double rho);

/// log2 of a positive big integer, accurate to ~1e-15 relative.
double log2_bigint(const BigInt& v);

/// One row of a rate-curve table. The two binary-only upper bounds are
/// absent for q != 2.
struct BoundPoint {
    double rho;
    double lower;    // ball-covering lower bound
    double kappa2;   // exact second-order rate (same value as lower)
    std::optional<double> upper_trivial;
    std::optional<double> upper_better;
};

/// Uniform rho-grid on [0,1] with grid_points rows.
std::vector<BoundPoint> rate_curves(int q, int grid_points);

/// CSV with header rho,lower,kappa2,upper_trivial,upper_better;
/// 12 significant digits, LF line endings, empty cells where undefined.
void write_rate_curves_csv(std::ostream& out, const std::vector<BoundPoint>& rows);

}  // namespace gencover
