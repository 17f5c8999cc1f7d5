#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gencover/words.hpp"

namespace gencover {

/// Unordered pair of distinct words, held in lexicographic order.
struct CoverPair {
    Word u1;
    Word u2;

    CoverPair(Word a, Word b);

    bool operator==(const CoverPair& other) const = default;
    std::strong_ordering operator<=>(const CoverPair& other) const;
};

/// True iff u1 != u2 and some row ordering of (u1, u2) lies within
/// 2-distance r of the target.
bool covers(const Word& u1, const Word& u2, const MatrixWord& v, int r);

/// Minimum Hamming distance between a member of the pair and a row of the
/// target (the pair's w statistic).
int min_cross_distance(const CoverPair& pair, const MatrixWord& v);

/// The full family of covering pairs for the target at radius r.
std::vector<CoverPair> cover_pair_family(const MatrixWord& v, int r);

/// Number of third words that form a covering pair with either member,
/// by direct enumeration over G_q^n minus the pair itself.
std::uint64_t neighbor_count(const MatrixWord& v, const CoverPair& pair, int r);

/// Count of words completing a fixed row at cross distance m into a matrix
/// within 2-distance r of the target: 0 if m > r, else q^m * V^(1)_{r-m,n-m,q}.
BigInt completion_count(int m, int r, int n, int q);

/// Certified upper bound on the probability that no covering pair for the
/// target is fully present in a Bernoulli(p) random code.
struct JansonCertificate {
    MatrixWord target;
    int r;
    double p;
    std::uint64_t family_size;
    double bound;       // in [0,1]
    bool empty_family;  // bound degenerates to 1: nothing can cover
    std::map<int, std::uint64_t> w_histogram;
};

JansonCertificate janson_certificate(const MatrixWord& v, int r, double p, int threads = 0);

/// Fraction of Bernoulli(p) codes (over `trials` seeded draws) that contain
/// no covering pair for the target.
double estimate_uncovered(const MatrixWord& v, int r, double p, std::uint64_t trials,
                          std::uint64_t seed, int threads = 0);

/// Zone decomposition used by the four-zone pair construction. Indices are
/// original target coordinates; the partition shown is the one used by the
/// first emitted pair (later pairs permute within the same zone sizes).
struct ZoneLayout {
    int n;
    int q;
    int d;         // Hamming distance between the target rows
    double delta;  // d/n
    double rho;
    double mu;        // q rho / (q+1)
    int floor_mu_n;   // floor(mu*n)
    int l_nu, l_nc, l_zc, l_zu;
    std::vector<int> z_nu, z_nc, z_zc, z_zu;
};

struct ZoneFamily {
    ZoneLayout layout;
    BigInt construction_count;  // exact number of constructed ordered pairs
    std::vector<CoverPair> pairs;
};

/// Explicit construction of covering pairs whose w statistic lands in
/// [mu*n - 11, mu*n]. Materializes at most max_pairs distinct pairs, in
/// lexicographic order of the construction choices; the exact total count
/// is reported without materialization.
ZoneFamily zone_pair_family(const MatrixWord& v, double rho, std::size_t max_pairs = 64);

}  // namespace gencover
