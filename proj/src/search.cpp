#include "gencover/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "gencover/bounds.hpp"
#include "gencover/radius.hpp"
#include "gencover/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gencover {

namespace {

// Pairwise difference-support masks for all of G_q^n; dm(u,c) is the
// support mask of word(u) - word(c). Shared by the exact search and the
// greedy construction, whose hot loops are OR + popcount over these.
struct DiffTable {
    std::uint64_t w;
    std::vector<std::uint64_t> masks;

    DiffTable(int n, int q) : w(space_size(n, q)) {
        if (n > 64) throw std::invalid_argument("search engine requires n <= 64");
        if (w > 2048)
            throw budget_error("pairwise mask table limited to q^n <= 2048",
                               static_cast<double>(w) * static_cast<double>(w));
        std::vector<Word> words;
        words.reserve(w);
        WordStream stream(n, q);
        while (!stream.done()) words.push_back(stream.next());
        masks.resize(w * w);
        for (std::uint64_t u = 0; u < w; ++u)
            for (std::uint64_t c = 0; c < w; ++c)
                masks[u * w + c] = (words[u] - words[c]).support_mask();
    }

    std::uint64_t dm(std::uint64_t u, std::uint64_t c) const { return masks[u * w + c]; }
};

struct TupleSpace {
    std::uint64_t w;
    int t;
    std::uint64_t total;

    TupleSpace(std::uint64_t w_, int t_) : w(w_), t(t_) {
        total = 1;
        for (int i = 0; i < t; ++i) {
            if (total > (std::uint64_t(1) << 24) / w)
                throw budget_error("target space limited to q^(t*n) <= 2^24",
                                   std::pow(double(w), double(t)));
            total *= w;
        }
    }
};

// Minimum d^(t) between target v and all row tuples over `members` that use
// the candidate word at least once.
int min_new_tuple_dist(const DiffTable& dt, const TupleSpace& space,
                       const std::vector<std::uint32_t>& members, std::uint32_t candidate,
                       std::uint64_t v) {
    const int t = space.t;
    std::uint64_t rows[16];
    {
        std::uint64_t x = v;
        for (int i = t - 1; i >= 0; --i) {
            rows[i] = x % space.w;
            x /= space.w;
        }
    }
    if (t == 1) return std::popcount(dt.dm(rows[0], candidate));
    if (t == 2) {
        int best = std::popcount(dt.dm(rows[0], candidate) | dt.dm(rows[1], candidate));
        for (std::uint32_t c : members) {
            best = std::min(best, std::popcount(dt.dm(rows[0], candidate) | dt.dm(rows[1], c)));
            best = std::min(best, std::popcount(dt.dm(rows[0], c) | dt.dm(rows[1], candidate)));
        }
        return best;
    }
    // generic t: odometer over (members + candidate)^t, skipping tuples
    // that avoid the candidate entirely
    std::vector<std::uint32_t> choices(members);
    choices.push_back(candidate);
    const std::size_t k = choices.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(t), 0);
    int best = std::numeric_limits<int>::max();
    for (;;) {
        bool uses_candidate = false;
        for (int i = 0; i < t; ++i)
            if (choices[pick[static_cast<std::size_t>(i)]] == candidate) uses_candidate = true;
        if (uses_candidate) {
            std::uint64_t acc = 0;
            for (int i = 0; i < t; ++i)
                acc |= dt.dm(rows[i], choices[pick[static_cast<std::size_t>(i)]]);
            best = std::min(best, std::popcount(acc));
        }
        int level = t - 1;
        while (level >= 0 && ++pick[static_cast<std::size_t>(level)] == k)
            pick[static_cast<std::size_t>(level--)] = 0;
        if (level < 0) break;
    }
    return best;
}

struct DfsContext {
    const DiffTable& dt;
    const TupleSpace& space;
    int r;
    std::uint64_t m_target;
    std::uint32_t pinned;
    std::uint64_t cover_capacity;  // targets one t-matrix can cover
    std::vector<std::uint8_t> mindist;
    std::uint64_t uncovered = 0;
    std::vector<std::uint32_t> members;
    std::uint64_t nodes = 0;

    bool extend(std::int64_t last) {
        ++nodes;
        std::uint64_t k = members.size();
        if (k == m_target) return uncovered == 0;
        // coverage capacity: the tuples still to be created cannot cover
        // more than (M^t - k^t) * V targets
        long double new_tuples = powl(static_cast<long double>(m_target), space.t) -
                                 powl(static_cast<long double>(k), space.t);
        if (static_cast<long double>(uncovered) >
            new_tuples * static_cast<long double>(cover_capacity))
            return false;
        std::uint64_t remaining_needed = m_target - k;
        for (std::uint64_t next = static_cast<std::uint64_t>(last + 1); next < dt.w; ++next) {
            if (next == pinned) continue;
            std::uint64_t left = dt.w - next - (next < pinned ? 1 : 0);
            if (left < remaining_needed) return false;
            auto undo = push(static_cast<std::uint32_t>(next));
            if (extend(static_cast<std::int64_t>(next))) return true;
            pop(undo);
        }
        return false;
    }

    std::vector<std::pair<std::uint32_t, std::uint8_t>> push(std::uint32_t w) {
        std::vector<std::pair<std::uint32_t, std::uint8_t>> undo;
        for (std::uint64_t v = 0; v < space.total; ++v) {
            if (mindist[v] <= r) continue;  // already covered; new tuples cannot matter
            int nd = min_new_tuple_dist(dt, space, members, w, v);
            if (nd < mindist[v]) {
                undo.emplace_back(static_cast<std::uint32_t>(v), mindist[v]);
                if (nd <= r) --uncovered;
                mindist[v] = static_cast<std::uint8_t>(nd);
            }
        }
        members.push_back(w);
        return undo;
    }

    void pop(const std::vector<std::pair<std::uint32_t, std::uint8_t>>& undo) {
        members.pop_back();
        for (auto [v, old] : undo) {
            if (mindist[v] <= r) ++uncovered;
            mindist[v] = old;
        }
    }
};

SearchResult run_search(int n, int t, int r, int q, std::uint32_t pinned, SearchBudget budget) {
    if (t < 1 || t > 8) throw std::invalid_argument("t must be in [1,8]");
    if (r < 0 || r > n) throw std::domain_error("radius must be in [0,n]");
    DiffTable dt(n, q);
    TupleSpace space(dt.w, t);
    std::uint64_t cover_capacity = space.total;
    BigInt ball = ball_size(t, r, n, q);
    if (ball < space.total) cover_capacity = ball.convert_to<std::uint64_t>();

    std::uint64_t nodes_total = 0;
    std::uint64_t lower = sphere_lower_bound(n, t, r, q);
    for (std::uint64_t m = lower; m <= dt.w; ++m) {
        // upfront estimate for this size level: all lex-increasing
        // extension sequences of the pinned word
        double estimate = 1.0;
        for (std::uint64_t i = 1; i < m; ++i)
            estimate *= static_cast<double>(dt.w - i) / static_cast<double>(i);
        if (estimate > budget.max_nodes)
            throw budget_error("search level M=" + std::to_string(m) +
                                   " exceeds the node budget (estimated " +
                                   std::to_string(estimate) + " nodes)",
                               estimate);

        DfsContext ctx{dt, space, r, m, pinned, cover_capacity, {}, 0, {}, 0};
        ctx.mindist.resize(space.total);
        // initial code = {pinned}: the only tuple is the constant one
        ctx.uncovered = 0;
        for (std::uint64_t v = 0; v < space.total; ++v) {
            std::uint64_t rows[16];
            std::uint64_t x = v;
            for (int i = t - 1; i >= 0; --i) {
                rows[i] = x % space.w;
                x /= space.w;
            }
            std::uint64_t acc = 0;
            for (int i = 0; i < t; ++i) acc |= dt.dm(rows[i], pinned);
            int d = std::popcount(acc);
            ctx.mindist[v] = static_cast<std::uint8_t>(d);
            if (d > r) ++ctx.uncovered;
        }
        ctx.members.push_back(pinned);

        bool found = (m == 1) ? ctx.uncovered == 0 : ctx.extend(-1);
        nodes_total += (m == 1) ? 1 : ctx.nodes;
        if (found) {
            std::vector<Word> words;
            words.reserve(ctx.members.size());
            for (std::uint32_t idx : ctx.members) words.push_back(Word::from_index(idx, n, q));
            Code witness(std::move(words));
            return SearchResult{m, witness, std::log(static_cast<double>(m)) / std::log(q),
                                nodes_total};
        }
    }
    throw std::logic_error("whole space does not cover; unreachable");
}

}  // namespace

SearchResult min_code_size(int n, int t, int r, int q, SearchBudget budget) {
    return run_search(n, t, r, q, 0, budget);
}

SearchResult min_code_size_pinned(int n, int t, int r, int q, const Word& pinned,
                                  SearchBudget budget) {
    if (pinned.n() != n || pinned.q() != q)
        throw std::invalid_argument("pinned word shape mismatch");
    return run_search(n, t, r, q, static_cast<std::uint32_t>(pinned.index()), budget);
}

std::uint64_t sphere_lower_bound(int n, int t, int r, int q) {
    BigInt v = ball_size(t, r, n, q);
    BigInt target = 1;
    for (int i = 0; i < t * n; ++i) target *= q;
    std::uint64_t lo = 1, hi = space_size(n, q);
    auto enough = [&](std::uint64_t m) {
        BigInt pw = 1;
        for (int i = 0; i < t; ++i) pw *= m;
        return pw * v >= target;
    };
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (enough(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

Code greedy_cover(int n, int t, int r, int q, std::uint64_t seed) {
    if (r < 0 || r > n) throw std::domain_error("radius must be in [0,n]");
    DiffTable dt(n, q);
    TupleSpace space(dt.w, t);

    // seed-derived candidate order used for tie breaking
    std::vector<std::uint32_t> order(dt.w);
    std::iota(order.begin(), order.end(), 0);
    CounterRng rng(seed);
    for (std::uint64_t i = 0; i + 1 < dt.w; ++i)
        std::swap(order[i], order[i + rng.next_below(dt.w - i)]);

    std::vector<bool> covered(space.total, false);
    std::uint64_t uncovered = space.total;
    std::vector<std::uint32_t> members;
    std::vector<bool> used(dt.w, false);

    while (uncovered > 0) {
        std::uint32_t best_word = 0;
        std::uint64_t best_gain = 0;
        bool any = false;
        for (std::uint32_t cand : order) {
            if (used[cand]) continue;
            std::uint64_t gain = 0;
            for (std::uint64_t v = 0; v < space.total; ++v) {
                if (covered[v]) continue;
                if (min_new_tuple_dist(dt, space, members, cand, v) <= r) ++gain;
            }
            if (!any || gain > best_gain) {
                any = true;
                best_gain = gain;
                best_word = cand;
            }
        }
        if (!any) throw std::logic_error("greedy cover ran out of words");
        for (std::uint64_t v = 0; v < space.total; ++v) {
            if (covered[v]) continue;
            if (min_new_tuple_dist(dt, space, members, best_word, v) <= r) {
                covered[v] = true;
                --uncovered;
            }
        }
        members.push_back(best_word);
        used[best_word] = true;
    }

    std::vector<Word> words;
    words.reserve(members.size());
    for (std::uint32_t idx : members) words.push_back(Word::from_index(idx, n, q));
    return Code(std::move(words));
}

RandomModel RandomModel::from_p(int n, int q, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("p must be in [0,1]");
    return RandomModel{n, q, p, seed, std::nullopt, std::nullopt, true};
}

RandomModel RandomModel::from_rho_epsilon(int n, int q, double rho, double epsilon,
                                          std::uint64_t seed) {
    double limit = 1.0 - 1.0 / (static_cast<double>(q) * q);
    if (rho <= 0.0 || rho >= limit) throw std::domain_error("rho must be in (0, 1-1/q^2)");
    double gap = entropy_gap(rho, q);
    bool valid = epsilon > 0.0 && epsilon < gap;
    double exponent = -static_cast<double>(n) * (entropy(q * q, rho) - epsilon);
    double p = std::pow(static_cast<double>(q), exponent);
    if (p > 1.0) p = 1.0;
    RandomModel model{n, q, p, seed, rho, epsilon, valid};
    return model;
}

Code random_code(const RandomModel& model) {
    std::uint64_t w = space_size(model.n, model.q);
    std::vector<Word> words;
    WordStream stream(model.n, model.q);
    while (!stream.done()) {
        std::uint64_t i = stream.position();
        Word word = stream.next();
        if (unit_from_bits(splitmix64_at(model.seed, i)) < model.p) words.push_back(std::move(word));
    }
    (void)w;
    return Code(std::move(words));
}

AlphaEstimate sample_alpha(int n, double rho, std::uint64_t m, int q, std::uint64_t trials,
                           std::uint64_t seed, int threads) {
    std::uint64_t w = space_size(n, q);
    if (m > w) throw std::invalid_argument("code size exceeds the space");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    int r = radius_from_rho(rho, n);

    std::vector<std::uint8_t> hit(trials, 0);
    std::int64_t total = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
#else
    (void)threads;
#endif
    for (std::int64_t trial = 0; trial < total; ++trial) {
        CounterRng rng = CounterRng::substream(seed, static_cast<std::uint64_t>(trial));
        // partial Fisher-Yates to draw a uniform m-subset of word indices
        std::vector<std::uint32_t> idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Word> words;
        words.reserve(m);
        for (std::uint64_t i = 0; i < m; ++i) {
            std::swap(idx[i], idx[i + rng.next_below(w - i)]);
            words.push_back(Word::from_index(idx[i], n, q));
        }
        Code code(std::move(words));
        if (m > 0 && is_covering(code, 2, r, 1).covering) hit[static_cast<std::size_t>(trial)] = 1;
    }

    std::uint64_t hits = 0;
    for (std::uint8_t h : hit) hits += h;
    double estimate = static_cast<double>(hits) / static_cast<double>(trials);
    double ci95 = 1.96 * std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
    return AlphaEstimate{n, q, rho, m, trials, hits, estimate, ci95};
}

double ExactFraction::value() const {
    return numerator.convert_to<double>() / denominator.convert_to<double>();
}

bool ExactFraction::operator<=(const ExactFraction& other) const {
    return numerator * other.denominator <= other.numerator * denominator;
}

ExactFraction alpha_exact(int n, double rho, std::uint64_t m, int q) {
    std::uint64_t w = space_size(n, q);
    if (m > w) throw std::invalid_argument("code size exceeds the space");
    int r = radius_from_rho(rho, n);
    BigInt total = binomial(static_cast<unsigned>(w), static_cast<unsigned>(m));
    if (total > 20'000'000)
        throw budget_error("alpha_exact limited to 2e7 codes", total.convert_to<double>());
    if (m == 0) return ExactFraction{0, total};

    DiffTable dt(n, q);
    // lexicographic combinations of word indices
    std::vector<std::uint32_t> comb(m);
    std::iota(comb.begin(), comb.end(), 0);
    BigInt covering = 0;
    for (;;) {
        bool covers_all = true;
        for (std::uint64_t v = 0; v < w * w && covers_all; ++v) {
            std::uint64_t v1 = v / w, v2 = v % w;
            bool hit = false;
            for (std::uint64_t a = 0; a < m && !hit; ++a)
                for (std::uint64_t b = 0; b < m; ++b) {
                    if (std::popcount(dt.dm(v1, comb[a]) | dt.dm(v2, comb[b])) <= r) {
                        hit = true;
                        break;
                    }
                }
            if (!hit) covers_all = false;
        }
        if (covers_all) ++covering;
        // next combination
        std::int64_t i = static_cast<std::int64_t>(m) - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] ==
                             w - m + static_cast<std::uint64_t>(i))
            --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (std::uint64_t j = static_cast<std::uint64_t>(i) + 1; j < m; ++j)
            comb[j] = comb[j - 1] + 1;
    }
    return ExactFraction{covering, total};
}

}  // namespace gencover
