#pragma once

#include <optional>
#include <utility>

#include "gencover/words.hpp"

namespace gencover {

/// One gamble: n games, each a match and a rematch with q outcomes; a
/// ticket pair wins if it calls all but at most r games correctly.
struct PoolInstance {
    Code tickets;
    Word match;
    Word rematch;
    int r;
};

struct PoolResult {
    bool win;
    std::optional<std::pair<Word, Word>> witness;  // ordered winning ticket pair
    bool no_tickets;
};

/// Ordered pairs with repetition: the same ticket may be used for both the
/// match column and the rematch column.
PoolResult pool_verify(const PoolInstance& instance);

}  // namespace gencover
