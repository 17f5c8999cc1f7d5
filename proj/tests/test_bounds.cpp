#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gencover/bounds.hpp"
#include "gencover/rng.hpp"
#include "gencover/words.hpp"

using namespace gencover;

TEST_CASE("entropy endpoints and known values") {
    for (int q : {2, 3, 4, 5}) {
        CHECK(entropy(q, 0.0) == 0.0);
        CHECK(entropy(q, 1.0 - 1.0 / q) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(entropy(q, 1.0) ==
              doctest::Approx(std::log(q - 1.0) / std::log(double(q))).epsilon(1e-12));
    }
    CHECK(entropy(2, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(entropy(2, -0.1), std::domain_error);
    CHECK_THROWS_AS(entropy(2, 1.1), std::domain_error);
    CHECK_THROWS_AS(entropy(1, 0.5), std::domain_error);
}

TEST_CASE("entropy concavity and maximum on a grid") {
    for (int q : {2, 3, 4, 5}) {
        double peak = 1.0 - 1.0 / q;
        for (int i = 1; i < 1000; ++i) {
            double a = (i - 1) / 1000.0, b = i / 1000.0, c = (i + 1) / 1000.0;
            double mid = entropy(q, b);
            CHECK(mid >= (entropy(q, a) + entropy(q, c)) / 2.0 - 1e-9);
            CHECK(mid <= 1.0 + 1e-9);
        }
        CHECK(entropy(q, peak) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("kappa1") {
    CHECK(kappa1(0.0, 2) == 1.0);
    CHECK(kappa1(0.5, 2) == 0.0);   // at 1-1/q
    CHECK(kappa1(0.9, 2) == 0.0);
    CHECK(kappa1(0.1, 2) == doctest::Approx(0.5310044064107188).epsilon(1e-9));
}

TEST_CASE("kappa2 equals kappa1 at the squared alphabet") {
    CHECK(kappa2(0.0, 2) == 1.0);
    CHECK(kappa2(0.75, 2) == 0.0);
    CHECK(kappa2(0.8, 2) == 0.0);
    CHECK(kappa2(0.5, 2) == doctest::Approx(0.10375937481971095).epsilon(1e-12));
    for (int q : {2, 3, 4, 5})
        for (int i = 0; i <= 200; ++i) {
            double rho = i / 200.0;
            CHECK(kappa2(rho, q) == kappa1(rho, q * q));
        }
}

TEST_CASE("binary upper bounds") {
    CHECK(upper_trivial(0.0) == 1.0);
    CHECK(upper_trivial(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(upper_trivial(0.5) == doctest::Approx(0.18872187554086714).epsilon(1e-9));

    CHECK(s_func(0.0) == 0.0);
    CHECK(upper_better(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(upper_better(0.75) == 0.0);
    CHECK(upper_better(1.0) == 0.0);
    CHECK(upper_better(0.5) == doctest::Approx(0.10927941290946112).epsilon(1e-9));
    // curve ordering at 0.5
    CHECK(kappa2(0.5, 2) < upper_better(0.5));
    CHECK(upper_better(0.5) < upper_trivial(0.5));

    for (int i = 0; i < 750; ++i) {
        double rho = i / 1000.0;
        double s = s_func(rho);
        CHECK(s >= 0.0);
        CHECK(s <= rho + 1e-12);
    }
}

TEST_CASE("overlap exponent") {
    // q=2, rho=0.5: the first branch is empty (threshold is 0)
    CHECK(overlap_exponent(0.0, 0.5, 2) == 1.0);
    CHECK(overlap_exponent(0.5, 0.5, 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(overlap_exponent(0.3, 0.5, 2) == doctest::Approx(0.9041843979966417).epsilon(1e-9));
    // a case where the first branch is nonempty: q=2, rho=0.7 -> threshold 0.4
    CHECK(overlap_exponent(0.2, 0.7, 2) == 1.0);
    CHECK(overlap_exponent(0.4, 0.7, 2) == 1.0);
    CHECK(overlap_exponent(0.5, 0.7, 2) < 1.0);
    CHECK_THROWS_AS(overlap_exponent(0.6, 0.5, 2), std::domain_error);
}

TEST_CASE("entropy identity residual is numerically zero on grids") {
    for (int q : {2, 3, 4, 5}) {
        double limit = 1.0 - 1.0 / (double(q) * q);
        double worst = 0.0;
        for (int i = 1; i <= 1000; ++i)
            worst = std::max(worst, entropy_identity_residual(limit * i / 1001.0, q));
        CHECK(worst < 1e-10);
    }
    CHECK(entropy_identity_residual(0.3, 2) < 1e-12);
}

TEST_CASE("entropy gap positive inside, zero at the ends") {
    for (int q : {2, 3, 4, 5}) {
        double limit = 1.0 - 1.0 / (double(q) * q);
        CHECK(std::abs(entropy_gap(0.0, q)) < 1e-12);
        CHECK(std::abs(entropy_gap(limit, q)) < 1e-12);
        for (int i = 1; i <= 1000; ++i)
            CHECK(entropy_gap(limit * i / 1001.0, q) > 0.0);
    }
}

TEST_CASE("inverse binomial moment matches direct summation (oracle)") {
    // direct E[1/(Y+1)] for Y ~ Bin(m, p)
    auto direct = [](int m, double p) {
        double sum = 0.0;
        for (int k = 0; k <= m; ++k) {
            double c = 1.0;
            for (int i = 0; i < k; ++i) c = c * (m - i) / (i + 1);
            sum += c * std::pow(p, k) * std::pow(1.0 - p, m - k) / (k + 1);
        }
        return sum;
    };
    for (int m = 0; m <= 20; ++m)
        for (double p : {0.05, 0.3, 0.5, 0.77, 1.0})
            CHECK(inverse_binomial_moment(m, p) == doctest::Approx(direct(m, p)).epsilon(1e-12));

    CHECK(inverse_binomial_moment(0, 0.37) == 1.0);
    CHECK(inverse_binomial_moment(9, 1.0) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(inverse_binomial_moment(3, 0.0), std::domain_error);

    // strictly decreasing in m
    for (double p : {0.01, 0.5, 0.99}) {
        double prev = inverse_binomial_moment(0, p);
        for (long long m = 1; m <= 10000; m = m < 100 ? m + 1 : m * 2) {
            double cur = inverse_binomial_moment(m, p);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("binomial tail bound") {
    CHECK(binomial_tail_bound(100, 0.5, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(binomial_tail_bound_gamma(50.0, 1.0) == doctest::Approx(std::exp(-50.0 / 3.0)).epsilon(1e-12));
    // gamma form is the a = gamma*np special case
    CHECK(binomial_tail_bound(100, 0.5, 25.0) ==
          doctest::Approx(binomial_tail_bound_gamma(50.0, 0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(binomial_tail_bound(100, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(binomial_tail_bound(100, 0.5, 0.0), std::domain_error);

    // Monte Carlo: P[X >= 60] for X ~ Bin(100, 0.5) stays below the bound
    std::uint64_t over = 0, trials = 1000000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        CounterRng rng = CounterRng::substream(42, t);
        int x = 0;
        for (int i = 0; i < 100; ++i) x += rng.next_unit() < 0.5;
        if (x >= 60) ++over;
    }
    double mc = double(over) / double(trials);
    CHECK(mc <= binomial_tail_bound(100, 0.5, 10.0));
}

TEST_CASE("ball entropy bound") {
    CHECK(ball_entropy_check(1, 10, 2, 0.0));
    CHECK(ball_entropy_check(2, 10, 2, 0.5));
    for (int t : {1, 2})
        for (int q : {2, 3}) {
            double limit = 1.0 - std::pow(double(q), -t);
            for (int n = 5; n <= 30; ++n)
                for (int i = 0; i < 20; ++i)
                    CHECK(ball_entropy_check(t, n, q, limit * i / 19.0));
        }
}

TEST_CASE("log2 of big integers") {
    CHECK(log2_bigint(BigInt(1)) == 0.0);
    CHECK(log2_bigint(BigInt(1) << 100) == doctest::Approx(100.0).epsilon(1e-14));
    BigInt v = BigInt("123456789012345678901234567890");
    CHECK(log2_bigint(v) == doctest::Approx(std::log2(v.convert_to<double>())).epsilon(1e-12));
}

TEST_CASE("rate curve table and CSV schema") {
    auto rows = rate_curves(2, 101);
    REQUIRE(rows.size() == 101);
    CHECK(rows[0].rho == 0.0);
    CHECK(rows[0].lower == 1.0);
    CHECK(rows[0].kappa2 == 1.0);
    CHECK(*rows[0].upper_trivial == 1.0);
    CHECK(*rows[0].upper_better == 1.0);
    for (const auto& p : rows) {
        CHECK(p.lower == p.kappa2);
        if (p.rho < 0.75) {
            CHECK(p.lower <= *p.upper_better + 1e-12);
            CHECK(p.lower <= *p.upper_trivial + 1e-12);
            // the two upper bounds cross near rho = 0.145; past it the
            // sharper bound stays below the simple one
            if (p.rho > 0.146) CHECK(*p.upper_better <= *p.upper_trivial + 1e-12);
        } else {
            CHECK(p.lower == 0.0);
            CHECK(*p.upper_better == 0.0);
        }
    }

    auto rows3 = rate_curves(3, 11);
    for (const auto& p : rows3) {
        CHECK_FALSE(p.upper_trivial.has_value());
        CHECK_FALSE(p.upper_better.has_value());
    }

    std::ostringstream csv;
    write_rate_curves_csv(csv, rows3);
    std::string text = csv.str();
    CHECK(text.substr(0, text.find('\n')) == "rho,lower,kappa2,upper_trivial,upper_better");
    CHECK(text.find("\r") == std::string::npos);
    // q != 2 rows end with two empty cells
    CHECK(text.find(",,\n") != std::string::npos);
}
