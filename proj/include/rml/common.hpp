#ifndef RML_COMMON_HPP
#define RML_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rml {

/// Hard cap on the number of objects any enumeration is allowed to visit.
/// Exceeding a budget is always an error, never a silent truncation: the
/// theorem suites rely on enumerations being complete.
inline constexpr long long kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// q^e with overflow detection; throws on overflow past 2^62.
inline long long checked_pow(long long q, long long e) {
    if (q < 0 || e < 0) throw std::invalid_argument("checked_pow: negative input");
    unsigned __int128 r = 1;
    for (long long i = 0; i < e; ++i) {
        r *= static_cast<unsigned __int128>(q);
        if (r > (static_cast<unsigned __int128>(1) << 62))
            throw std::overflow_error("checked_pow: result exceeds 2^62");
    }
    return static_cast<long long>(r);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline long long checked_mul(long long a, long long b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    if (a < 0 || b < 0 || r > (static_cast<unsigned __int128>(1) << 62))
        throw std::overflow_error("checked_mul: result exceeds 2^62");
    return static_cast<long long>(r);
}

inline void check_budget(long long count, long long budget, const std::string& what) {
    if (count > budget)
        throw BudgetExceeded(what + ": enumeration of " + std::to_string(count) +
                             " objects exceeds budget " + std::to_string(budget));
}

}  // namespace detail

}  // namespace rml

#endif
