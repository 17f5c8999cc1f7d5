#pragma once

#include <cstdint>
#include <optional>

#include "gencover/words.hpp"

namespace gencover {

struct SearchResult {
    std::uint64_t m_min;
    Code witness;
    double k;  // log_q(m_min)
    std::uint64_t nodes;
};

struct SearchBudget {
    double max_nodes = 5e7;  // refuse a size level whose node estimate exceeds this
};

/// Exact minimum size of a code with t-th covering radius at most r.
/// Depth-first enumeration with the translation symmetry broken by pinning
/// one codeword and extending in increasing lexicographic order only.
/// Throws budget_error (with the node estimate) before starting an
/// infeasible size level.
SearchResult min_code_size(int n, int t, int r, int q, SearchBudget budget = {});

/// Same search with an arbitrary pinned word instead of the zero word.
SearchResult min_code_size_pinned(int n, int t, int r, int q, const Word& pinned,
                                  SearchBudget budget = {});

/// Smallest M with M^t * V^(t)_{r,n,q} >= q^{tn}; the ball-covering
/// necessary condition.
std::uint64_t sphere_lower_bound(int n, int t, int r, int q);

/// Covering code built by repeatedly adding the word that covers the most
/// still-uncovered targets; ties broken by a seed-derived candidate order.
Code greedy_cover(int n, int t, int r, int q, std::uint64_t seed);

/// Bernoulli(p) random code model: every word of G_q^n is included
/// independently with probability p, decided by (seed, word index).
struct RandomModel {
    int n;
    int q;
    double p;
    std::uint64_t seed;
    std::optional<double> rho;      // set when p was derived from (rho, epsilon)
    std::optional<double> epsilon;
    bool epsilon_in_valid_range = true;

    static RandomModel from_p(int n, int q, double p, std::uint64_t seed);
    /// p = q^{-n (H_{q^2}(rho) - epsilon)}. Outside the interval
    /// (0, H_q(q rho/(q+1)) - H_{q^2}(rho)) the model is still built but
    /// flagged, since the covering guarantee no longer applies.
    static RandomModel from_rho_epsilon(int n, int q, double rho, double epsilon,
                                        std::uint64_t seed);
};

Code random_code(const RandomModel& model);

struct AlphaEstimate {
    int n;
    int q;
    double rho;
    std::uint64_t m;
    std::uint64_t trials;
    std::uint64_t hits;
    double estimate;
    double ci95;
};

/// Monte Carlo estimate of the fraction of (n,M)_q codes with second
/// covering radius at most floor(rho*n). Trial i draws a uniform M-subset
/// from the stream (seed, i); results are independent of trial scheduling.
AlphaEstimate sample_alpha(int n, double rho, std::uint64_t m, int q, std::uint64_t trials,
                           std::uint64_t seed, int threads = 0);

/// Exact fraction as a pair of big integers (covering codes / all codes).
struct ExactFraction {
    BigInt numerator;
    BigInt denominator;

    double value() const;
    // cross-multiplied comparison
    bool operator<=(const ExactFraction& other) const;
};

ExactFraction alpha_exact(int n, double rho, std::uint64_t m, int q);

}  // namespace gencover
