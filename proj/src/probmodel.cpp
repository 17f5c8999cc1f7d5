#include "gencover/probmodel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "gencover/bounds.hpp"
#include "gencover/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gencover {

namespace {

void check_pair_target(const Word& u1, const Word& u2, const MatrixWord& v) {
    if (v.t() != 2) throw std::invalid_argument("target must have exactly two rows");
    if (u1.n() != v.n() || u1.q() != v.q() || u2.n() != v.n() || u2.q() != v.q())
        throw std::invalid_argument("pair and target differ in shape");
}

// 2-distance of the ordered stack [a;b] from the target rows, digit level.
int stacked_distance(const Word& a, const Word& b, const MatrixWord& v) {
    int d = 0;
    const Word& v1 = v.row(0);
    const Word& v2 = v.row(1);
    for (int i = 0; i < a.n(); ++i) d += (a[i] != v1[i] || b[i] != v2[i]);
    return d;
}

std::uint64_t family_space_guard(const MatrixWord& v) {
    std::uint64_t w = space_size(v.n(), v.q());
    if (w > (std::uint64_t(1) << 16))
        throw budget_error("pair family enumeration limited to q^n <= 2^16",
                           static_cast<double>(w) * static_cast<double>(w) / 2.0);
    return w;
}

}  // namespace

CoverPair::CoverPair(Word a, Word b) : u1(std::move(a)), u2(std::move(b)) {
    if (u1.n() != u2.n() || u1.q() != u2.q())
        throw std::invalid_argument("pair members differ in shape");
    if (u1 == u2) throw std::invalid_argument("pair members must be distinct");
    if (u2 < u1) std::swap(u1, u2);
}

std::strong_ordering CoverPair::operator<=>(const CoverPair& other) const {
    auto c = u1 <=> other.u1;
    if (c != std::strong_ordering::equal) return c;
    return u2 <=> other.u2;
}

bool covers(const Word& u1, const Word& u2, const MatrixWord& v, int r) {
    check_pair_target(u1, u2, v);
    if (r < 0 || r > v.n()) throw std::domain_error("radius must be in [0,n]");
    if (u1 == u2) return false;
    return stacked_distance(u1, u2, v) <= r || stacked_distance(u2, u1, v) <= r;
}

int min_cross_distance(const CoverPair& pair, const MatrixWord& v) {
    check_pair_target(pair.u1, pair.u2, v);
    int d = hamming_distance(pair.u1, v.row(0));
    d = std::min(d, hamming_distance(pair.u1, v.row(1)));
    d = std::min(d, hamming_distance(pair.u2, v.row(0)));
    d = std::min(d, hamming_distance(pair.u2, v.row(1)));
    return d;
}

std::vector<CoverPair> cover_pair_family(const MatrixWord& v, int r) {
    std::uint64_t w = family_space_guard(v);
    std::vector<Word> words;
    words.reserve(w);
    WordStream stream(v.n(), v.q());
    while (!stream.done()) words.push_back(stream.next());

    std::vector<CoverPair> family;
    for (std::uint64_t i = 0; i < w; ++i)
        for (std::uint64_t j = i + 1; j < w; ++j)
            if (covers(words[i], words[j], v, r)) family.emplace_back(words[i], words[j]);
    return family;
}

std::uint64_t neighbor_count(const MatrixWord& v, const CoverPair& pair, int r) {
    if (!covers(pair.u1, pair.u2, v, r))
        throw std::invalid_argument("pair is not in the covering family of the target");
    std::uint64_t count = 0;
    WordStream stream(v.n(), v.q());
    while (!stream.done()) {
        Word w = stream.next();
        if (w == pair.u1 || w == pair.u2) continue;
        if (covers(w, pair.u1, v, r) || covers(w, pair.u2, v, r)) ++count;
    }
    return count;
}

BigInt completion_count(int m, int r, int n, int q) {
    if (m < 0) throw std::invalid_argument("cross distance must be non-negative");
    if (r < 0 || r > n) throw std::domain_error("radius must be in [0,n]");
    if (m > r) return 0;
    BigInt result = 1;
    for (int i = 0; i < m; ++i) result *= q;
    if (n - m >= 1) {
        result *= ball_size(1, r - m, n - m, q);
    }
    // m == n forces r == n here, and the empty tail contributes a factor 1
    return result;
}

JansonCertificate janson_certificate(const MatrixWord& v, int r, double p, int threads) {
    if (p <= 0.0 || p > 1.0) throw std::domain_error("p must be in (0,1]");
    std::vector<CoverPair> family = cover_pair_family(v, r);

    JansonCertificate cert{v, r, p, family.size(), 1.0, family.empty(), {}};
    if (family.empty()) return cert;

    std::vector<double> contribution(family.size());
    std::vector<int> wstat(family.size());
    std::int64_t fs = static_cast<std::int64_t>(family.size());
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
#else
    (void)threads;
#endif
    for (std::int64_t i = 0; i < fs; ++i) {
        std::uint64_t na = neighbor_count(v, family[static_cast<std::size_t>(i)], r);
        contribution[static_cast<std::size_t>(i)] =
            p * p * 0.5 * inverse_binomial_moment(static_cast<long long>(na), p);
        wstat[static_cast<std::size_t>(i)] =
            min_cross_distance(family[static_cast<std::size_t>(i)], v);
    }

    // summed serially in family order so the bound is identical for every
    // thread count
    double sum = 0.0;
    for (double c : contribution) sum += c;
    for (int w : wstat) ++cert.w_histogram[w];
    cert.bound = std::exp(-sum);
    return cert;
}

double estimate_uncovered(const MatrixWord& v, int r, double p, std::uint64_t trials,
                          std::uint64_t seed, int threads) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("p must be in [0,1]");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    std::uint64_t w = family_space_guard(v);
    std::vector<CoverPair> family = cover_pair_family(v, r);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> idx_pairs;
    idx_pairs.reserve(family.size());
    for (const CoverPair& pair : family)
        idx_pairs.emplace_back(static_cast<std::uint32_t>(pair.u1.index()),
                               static_cast<std::uint32_t>(pair.u2.index()));

    std::vector<std::uint8_t> uncovered(trials, 0);
    std::int64_t total = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
#else
    (void)threads;
#endif
    for (std::int64_t trial = 0; trial < total; ++trial) {
        std::uint64_t key = splitmix64_at(seed, static_cast<std::uint64_t>(trial));
        std::vector<std::uint64_t> bits((w + 63) / 64, 0);
        for (std::uint64_t i = 0; i < w; ++i)
            if (unit_from_bits(splitmix64_at(key, i)) < p) bits[i >> 6] |= std::uint64_t(1) << (i & 63);
        bool hit = false;
        for (auto [a, b] : idx_pairs) {
            if ((bits[a >> 6] >> (a & 63) & 1) && (bits[b >> 6] >> (b & 63) & 1)) {
                hit = true;
                break;
            }
        }
        if (!hit) uncovered[static_cast<std::size_t>(trial)] = 1;
    }

    std::uint64_t count = 0;
    for (std::uint8_t u : uncovered) count += u;
    return static_cast<double>(count) / static_cast<double>(trials);
}

namespace {

// Lexicographic k-subset of [0, slots), advanced like a combination odometer.
struct Combination {
    int slots = 0;
    int k = 0;
    std::vector<int> pick;

    void reset(int slots_, int k_) {
        slots = slots_;
        k = k_;
        pick.resize(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
    }

    // rewinds to the first subset when the last one is reached
    bool advance() {
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == slots - k + i) --i;
        if (i < 0) {
            std::iota(pick.begin(), pick.end(), 0);
            return false;
        }
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    }
};

// Fixed-length word over an arbitrary option count, advanced like a counter.
struct ValueVector {
    int len = 0;
    int options = 0;
    std::vector<int> vals;

    void reset(int len_, int options_) {
        len = len_;
        options = options_;
        vals.assign(static_cast<std::size_t>(len), 0);
    }

    bool advance() {
        for (int i = len - 1; i >= 0; --i) {
            if (++vals[static_cast<std::size_t>(i)] < options) return true;
            vals[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    }
};

// k-th nonzero digit other than `avoid` (1-based option index), used for
// "changed to a different nonzero value" choices.
std::uint8_t other_nonzero(int option, std::uint8_t avoid, int q) {
    int seen = 0;
    for (int d = 1; d < q; ++d) {
        if (d == avoid) continue;
        if (seen++ == option) return static_cast<std::uint8_t>(d);
    }
    throw std::logic_error("no such digit");
}

}  // namespace

ZoneFamily zone_pair_family(const MatrixWord& v, double rho, std::size_t max_pairs) {
    if (v.t() != 2) throw std::invalid_argument("target must have exactly two rows");
    const int n = v.n();
    const int q = v.q();
    double limit = 1.0 - 1.0 / (static_cast<double>(q) * q);
    if (rho <= 0.0 || rho >= limit) throw std::domain_error("rho must be in (0, 1-1/q^2)");

    // normalize: translate row 0 to zero, move the differing coordinates to
    // the front preserving relative order
    Word diff = v.row(1) - v.row(0);
    std::vector<int> perm;  // normalized position -> original coordinate
    perm.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (diff[i] != 0) perm.push_back(i);
    const int d = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
        if (diff[i] == 0) perm.push_back(i);
    std::vector<std::uint8_t> v2(static_cast<std::size_t>(n));  // normalized second row
    for (int i = 0; i < n; ++i) v2[static_cast<std::size_t>(i)] = diff[perm[static_cast<std::size_t>(i)]];

    const double mu = q * rho / (q + 1.0);
    const int mn = static_cast<int>(floor_index(mu * n));
    const int l_nc = d * mn / n;  // floor(delta * floor(mu n)), exactly
    const int l_zc = mn - l_nc;   // ceil((1-delta) * floor(mu n))
    const int l_nu = d - l_nc;
    const int l_zu = (n - d) - l_zc;

    const double ratio = (rho - mu) / (1.0 - mu);
    const int a1 = static_cast<int>(floor_index(ratio * l_nu));
    const int a1d = (q - 2) * a1 / (q - 1);
    const int b1 = (q - 1) * l_nc / q;
    const int b1d = (q - 2) * b1 / (q - 1);
    const int c1 = (q - 1) * l_zc / q;
    const int e1 = static_cast<int>(floor_index(ratio * l_zu));
    const int nc_nz = (q - 2) * l_nc / (q - 1);

    auto in_range = [](int x, int hi) { return x >= 0 && x <= hi; };
    if (!in_range(l_nc, d) || !in_range(l_zc, n - d) || !in_range(a1, l_nu) ||
        !in_range(b1, l_nc) || !in_range(c1, l_zc) || !in_range(e1, l_zu) ||
        !in_range(a1d, a1) || !in_range(b1d, b1) || !in_range(nc_nz, l_nc))
        throw std::domain_error("zone construction unsupported for these parameters");

    // exact count of ordered constructions
    BigInt count = binomial(static_cast<unsigned>(d), static_cast<unsigned>(l_nc));
    count *= binomial(static_cast<unsigned>(l_nc), static_cast<unsigned>(nc_nz));
    count *= binomial(static_cast<unsigned>(n - d), static_cast<unsigned>(l_zc));
    count *= binomial(static_cast<unsigned>(l_nu), static_cast<unsigned>(a1));
    count *= binomial(static_cast<unsigned>(a1), static_cast<unsigned>(a1d));
    count *= binomial(static_cast<unsigned>(l_nc), static_cast<unsigned>(b1));
    count *= binomial(static_cast<unsigned>(b1), static_cast<unsigned>(b1d));
    count *= binomial(static_cast<unsigned>(l_zc), static_cast<unsigned>(c1));
    count *= binomial(static_cast<unsigned>(l_zu), static_cast<unsigned>(e1));
    auto pow_big = [](int base, int exp) {
        BigInt r = 1;
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    };
    count *= pow_big(q - 2, nc_nz);
    count *= pow_big(q - 1, l_zc);
    count *= pow_big(q - 2, a1d);
    count *= pow_big(q - 2, b1d);
    count *= pow_big(q - 1, c1);
    count *= pow_big(q - 1, e1);

    // choice odometer: subset choices and value choices, advanced in
    // lexicographic order, emitting up to max_pairs distinct pairs
    Combination s_nc, s_zc, p_nu, d_nu, p_nc, d_nc, p_zc, p_zu, t_nz;
    ValueVector vals_nz, vals_zc, vals_dnu, vals_dnc, vals_pzc, vals_pzu;
    s_nc.reset(d, l_nc);
    t_nz.reset(l_nc, nc_nz);
    vals_nz.reset(nc_nz, std::max(q - 2, 1));
    s_zc.reset(n - d, l_zc);
    vals_zc.reset(l_zc, q - 1);
    p_nu.reset(l_nu, a1);
    d_nu.reset(a1, a1d);
    vals_dnu.reset(a1d, std::max(q - 2, 1));
    p_nc.reset(l_nc, b1);
    d_nc.reset(b1, b1d);
    vals_dnc.reset(b1d, std::max(q - 2, 1));
    p_zc.reset(l_zc, c1);
    vals_pzc.reset(c1, q - 1);
    p_zu.reset(l_zu, e1);
    vals_pzu.reset(e1, q - 1);

    ZoneFamily out;
    out.construction_count = count;
    std::set<CoverPair> seen;

    auto build_and_emit = [&]() {
        // u2: start from the normalized second row, apply the changes
        std::vector<std::uint8_t> u2(v2);
        std::vector<int> nc_coords(static_cast<std::size_t>(l_nc));
        for (int j = 0; j < l_nc; ++j) nc_coords[static_cast<std::size_t>(j)] = s_nc.pick[static_cast<std::size_t>(j)];
        std::vector<bool> is_nz_change(static_cast<std::size_t>(l_nc), false);
        for (int j = 0; j < nc_nz; ++j) is_nz_change[static_cast<std::size_t>(t_nz.pick[static_cast<std::size_t>(j)])] = true;
        {
            int vi = 0;
            for (int j = 0; j < l_nc; ++j) {
                int pos = nc_coords[static_cast<std::size_t>(j)];
                if (is_nz_change[static_cast<std::size_t>(j)])
                    u2[static_cast<std::size_t>(pos)] =
                        other_nonzero(vals_nz.vals[static_cast<std::size_t>(vi++)],
                                      v2[static_cast<std::size_t>(pos)], q);
                else
                    u2[static_cast<std::size_t>(pos)] = 0;
            }
        }
        for (int j = 0; j < l_zc; ++j) {
            int pos = d + s_zc.pick[static_cast<std::size_t>(j)];
            u2[static_cast<std::size_t>(pos)] =
                static_cast<std::uint8_t>(1 + vals_zc.vals[static_cast<std::size_t>(j)]);
        }

        // coordinate lists of the four zones for this u2 choice
        std::vector<int> z_nu_pos, z_zu_pos;
        {
            std::vector<bool> changed(static_cast<std::size_t>(d), false);
            for (int pos : nc_coords) changed[static_cast<std::size_t>(pos)] = true;
            for (int pos = 0; pos < d; ++pos)
                if (!changed[static_cast<std::size_t>(pos)]) z_nu_pos.push_back(pos);
        }
        {
            std::vector<bool> changed(static_cast<std::size_t>(n - d), false);
            for (int j = 0; j < l_zc; ++j) changed[static_cast<std::size_t>(s_zc.pick[static_cast<std::size_t>(j)])] = true;
            for (int pos = 0; pos < n - d; ++pos)
                if (!changed[static_cast<std::size_t>(pos)]) z_zu_pos.push_back(d + pos);
        }

        // u1: per-zone nonzero placements
        std::vector<std::uint8_t> u1(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < a1; ++j) {
            int pos = z_nu_pos[static_cast<std::size_t>(p_nu.pick[static_cast<std::size_t>(j)])];
            bool disagrees = false;
            for (int x = 0; x < a1d; ++x)
                if (d_nu.pick[static_cast<std::size_t>(x)] == j) disagrees = true;
            if (disagrees) {
                int vi = 0;
                for (int x = 0; x < a1d; ++x) {
                    if (d_nu.pick[static_cast<std::size_t>(x)] == j) break;
                    ++vi;
                }
                u1[static_cast<std::size_t>(pos)] =
                    other_nonzero(vals_dnu.vals[static_cast<std::size_t>(vi)],
                                  v2[static_cast<std::size_t>(pos)], q);
            } else {
                u1[static_cast<std::size_t>(pos)] = v2[static_cast<std::size_t>(pos)];
            }
        }
        for (int j = 0; j < b1; ++j) {
            int pos = nc_coords[static_cast<std::size_t>(p_nc.pick[static_cast<std::size_t>(j)])];
            bool disagrees = false;
            int vi = 0;
            for (int x = 0; x < b1d; ++x) {
                if (d_nc.pick[static_cast<std::size_t>(x)] == j) {
                    disagrees = true;
                    break;
                }
                ++vi;
            }
            if (disagrees)
                u1[static_cast<std::size_t>(pos)] =
                    other_nonzero(vals_dnc.vals[static_cast<std::size_t>(vi)],
                                  v2[static_cast<std::size_t>(pos)], q);
            else
                u1[static_cast<std::size_t>(pos)] = v2[static_cast<std::size_t>(pos)];
        }
        for (int j = 0; j < c1; ++j) {
            int pos = d + s_zc.pick[static_cast<std::size_t>(p_zc.pick[static_cast<std::size_t>(j)])];
            u1[static_cast<std::size_t>(pos)] =
                static_cast<std::uint8_t>(1 + vals_pzc.vals[static_cast<std::size_t>(j)]);
        }
        for (int j = 0; j < e1; ++j) {
            int pos = z_zu_pos[static_cast<std::size_t>(p_zu.pick[static_cast<std::size_t>(j)])];
            u1[static_cast<std::size_t>(pos)] =
                static_cast<std::uint8_t>(1 + vals_pzu.vals[static_cast<std::size_t>(j)]);
        }

        if (u1 == u2) return;  // degenerate construction, not a pair

        // map back: invert the permutation, then translate by the original row 0
        std::vector<std::uint8_t> w1(static_cast<std::size_t>(n)), w2(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            w1[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = u1[static_cast<std::size_t>(i)];
            w2[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = u2[static_cast<std::size_t>(i)];
        }
        Word out1 = Word(std::move(w1), q) + v.row(0);
        Word out2 = Word(std::move(w2), q) + v.row(0);
        CoverPair pair(std::move(out1), std::move(out2));
        if (seen.insert(pair).second) out.pairs.push_back(pair);
    };

    // odometer over all components, most significant first
    std::vector<std::function<bool()>> components;
    auto add_comb = [&components](Combination& c) { components.push_back([&c] { return c.advance(); }); };
    auto add_vals = [&components](ValueVector& v_) { components.push_back([&v_] { return v_.advance(); }); };
    add_comb(s_nc);
    add_comb(t_nz);
    add_vals(vals_nz);
    add_comb(s_zc);
    add_vals(vals_zc);
    add_comb(p_nu);
    add_comb(d_nu);
    add_vals(vals_dnu);
    add_comb(p_nc);
    add_comb(d_nc);
    add_vals(vals_dnc);
    add_comb(p_zc);
    add_vals(vals_pzc);
    add_comb(p_zu);
    add_vals(vals_pzu);

    for (;;) {
        if (out.pairs.size() >= max_pairs) break;
        build_and_emit();
        int i = static_cast<int>(components.size()) - 1;
        bool advanced = false;
        for (; i >= 0; --i) {
            if (components[static_cast<std::size_t>(i)]()) {
                advanced = true;
                break;
            }
            // component wrapped; reset happens inside advance() by wrapping to
            // the initial state, continue carrying
        }
        if (!advanced) break;
    }

    // canonical layout: the first-choice partition
    ZoneLayout layout;
    layout.n = n;
    layout.q = q;
    layout.d = d;
    layout.delta = static_cast<double>(d) / n;
    layout.rho = rho;
    layout.mu = mu;
    layout.floor_mu_n = mn;
    layout.l_nu = l_nu;
    layout.l_nc = l_nc;
    layout.l_zc = l_zc;
    layout.l_zu = l_zu;
    for (int j = 0; j < l_nc; ++j) layout.z_nc.push_back(perm[static_cast<std::size_t>(j)]);
    for (int j = l_nc; j < d; ++j) layout.z_nu.push_back(perm[static_cast<std::size_t>(j)]);
    for (int j = 0; j < l_zc; ++j) layout.z_zc.push_back(perm[static_cast<std::size_t>(d + j)]);
    for (int j = l_zc; j < n - d; ++j) layout.z_zu.push_back(perm[static_cast<std::size_t>(d + j)]);
    out.layout = layout;
    return out;
}

}  // namespace gencover
