#ifndef CUBICOUNT_COMMON_HPP
#define CUBICOUNT_COMMON_HPP

#include <cstdint>
#include <stdexcept>

namespace cubicount {

// Bad input: wrong degrees, mixed fields, unparseable text. CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested computation exceeds the enumeration or search budget. CLI exit code 3.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A checked identity failed (e.g. an exact division left a remainder).
// Signals a bug, never a data condition. CLI exit code 4.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Guard for all full-field loops.
inline constexpr std::uint64_t kDefaultEnumLimit = std::uint64_t{1} << 22;

// Cap on |PGL_2(F_q)| sweeps in the equivalence search, expressed as a bound on q.
inline constexpr long long kDefaultSearchBudget = 13;

}  // namespace cubicount

#endif
