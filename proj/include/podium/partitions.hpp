#pragma once

// The partition-counting functions, each available two ways: as a
// product-formula generating series and as an exhaustive enumeration.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "podium/series.hpp"

namespace podium {

enum class FunctionId {
    P,      // unrestricted partitions
    POD,    // odd parts distinct
    PED,    // even parts distinct
    QDIST,  // distinct parts
    QODD,   // distinct odd parts
    PEO,    // (-1)^(#parts) over all partitions
    QEO,    // (-1)^(#odd parts) over distinct-part partitions
    OPBAR,  // overpartitions
    OPODD,  // overpartitions into odd parts
    AFUN,   // (-1)^(#parts), even parts in two colours
    CUBIC,  // even parts in two colours
    P3,     // three colours
    P2MOD4, // parts congruent to 2 mod 4
    QODD3,  // distinct odd parts in three colours
    EO,     // every even part below every odd part
    EOBAR,  // EO, only the largest even part with odd multiplicity
};

inline constexpr std::array<FunctionId, 16> kAllFunctions{
    FunctionId::P,     FunctionId::POD,   FunctionId::PED,   FunctionId::QDIST,
    FunctionId::QODD,  FunctionId::PEO,   FunctionId::QEO,   FunctionId::OPBAR,
    FunctionId::OPODD, FunctionId::AFUN,  FunctionId::CUBIC, FunctionId::P3,
    FunctionId::P2MOD4, FunctionId::QODD3, FunctionId::EO,   FunctionId::EOBAR,
};

/// Lowercase identifier used on the command line and in gf(...) references.
std::string_view name(FunctionId id);
std::optional<FunctionId> parse_function_id(std::string_view text);
/// Comma-separated list of all names, for diagnostics.
std::string function_names();

/// Canonical product-form generating series truncated at order.
Series gf_series(FunctionId id, Order order);

/// First nmax + 1 values of the function.
std::vector<BigInt> table(FunctionId id, Order nmax);

class CapRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-function maximum n for exhaustive enumeration. Overrides may raise a
/// cap up to hard_limit(id); anything beyond is refused when used.
class OracleCaps {
public:
    static unsigned default_cap(FunctionId id);
    static unsigned hard_limit(FunctionId id);

    unsigned cap(FunctionId id) const;
    void set(FunctionId id, unsigned cap) { overrides_[id] = cap; }

private:
    std::map<FunctionId, unsigned> overrides_;
};

/// Exact (signed) count by generating every qualifying object. Throws
/// CapRefusal when n exceeds the function's cap.
BigInt count_by_enumeration(FunctionId id, unsigned n, const OracleCaps& caps = {});

} // namespace podium
