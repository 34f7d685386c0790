#ifndef POLYDUAL_LIMITS_HPP
#define POLYDUAL_LIMITS_HPP

#include <atomic>
#include <cstddef>

namespace polydual::limits {

// Resource caps. Exceeding one throws Error(LimitExceeded); the CLI maps
// that to exit code 2. Set once before running queries.
inline std::atomic<std::size_t> max_dd_generators{100000};
inline std::atomic<std::size_t> max_subsets{4096};

} // namespace polydual::limits

#endif
