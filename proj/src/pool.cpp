#include "gencover/pool.hpp"

namespace gencover {

PoolResult pool_verify(const PoolInstance& instance) {
    if (instance.tickets.empty()) return PoolResult{false, std::nullopt, true};
    const Code& tickets = instance.tickets;
    const int n = tickets.n();
    if (instance.match.n() != n || instance.match.q() != tickets.q() ||
        instance.rematch.n() != n || instance.rematch.q() != tickets.q())
        throw std::invalid_argument("outcome vectors do not match the ticket shape");
    if (instance.r < 0 || instance.r > n) throw std::domain_error("r must be in [0,n]");

    for (const Word& c1 : tickets.words()) {
        for (const Word& c2 : tickets.words()) {
            int missed = 0;
            for (int i = 0; i < n && missed <= instance.r; ++i)
                missed += (c1[i] != instance.match[i] || c2[i] != instance.rematch[i]);
            if (missed <= instance.r)
                return PoolResult{true, std::make_pair(c1, c2), false};
        }
    }
    return PoolResult{false, std::nullopt, false};
}

}  // namespace gencover
