#include "podium/partitions.hpp"

#include <string>

namespace podium {

namespace {

constexpr std::array<std::string_view, 16> kNames{
    "p",   "pod",   "ped",   "qdist", "qodd",   "peo",   "qeo", "opbar",
    "opodd", "afun", "cubic", "p3",   "p2mod4", "qodd3", "eo",  "eobar",
};

Series poch(Sign s, Order a, Order b, Order n) { return pochhammer(s, a, b, n); }

} // namespace

std::string_view name(FunctionId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<FunctionId> parse_function_id(std::string_view text)
{
    for (FunctionId id : kAllFunctions)
        if (name(id) == text)
            return id;
    return std::nullopt;
}

std::string function_names()
{
    std::string out;
    for (FunctionId id : kAllFunctions) {
        if (!out.empty())
            out += ", ";
        out += name(id);
    }
    return out;
}

Series gf_series(FunctionId id, Order n)
{
    constexpr Sign P = Sign::Plus;
    constexpr Sign M = Sign::Minus;
    switch (id) {
    case FunctionId::P:
        return inverse(poch(P, 1, 1, n));
    case FunctionId::POD:
        return mul(poch(P, 2, 2, n), inverse(mul(poch(P, 1, 1, n), poch(P, 4, 4, n))));
    case FunctionId::PED:
        return mul(poch(P, 4, 4, n), inverse(poch(P, 1, 1, n)));
    case FunctionId::QDIST:
        return poch(M, 1, 1, n);
    case FunctionId::QODD:
        return poch(M, 1, 2, n);
    case FunctionId::PEO:
        return inverse(poch(M, 1, 1, n));
    case FunctionId::QEO:
        return inverse(poch(M, 1, 2, n));
    case FunctionId::OPBAR:
        return mul(poch(P, 2, 2, n), power(poch(P, 1, 1, n), -2));
    case FunctionId::OPODD:
        return mul(power(poch(P, 2, 2, n), 3),
                   inverse(mul(power(poch(P, 1, 1, n), 2), poch(P, 4, 4, n))));
    case FunctionId::AFUN:
        return mul(poch(P, 1, 1, n), inverse(poch(P, 4, 4, n)));
    case FunctionId::CUBIC:
        return inverse(mul(poch(P, 1, 1, n), poch(P, 2, 2, n)));
    case FunctionId::P3:
        return power(poch(P, 1, 1, n), -3);
    case FunctionId::P2MOD4:
        return inverse(poch(P, 2, 4, n));
    case FunctionId::QODD3:
        return power(poch(M, 1, 2, n), 3);
    case FunctionId::EO: {
        const Series one_minus_q = sub(constant(1, n), monomial(1, n));
        return mul(inverse(one_minus_q), inverse(poch(P, 2, 2, n)));
    }
    case FunctionId::EOBAR:
        return mul(power(poch(P, 4, 4, n), 3), power(poch(P, 2, 2, n), -2));
    }
    throw std::logic_error("unhandled function id");
}

std::vector<BigInt> table(FunctionId id, Order nmax)
{
    const Series s = gf_series(id, nmax);
    return {s.coeffs().begin(), s.coeffs().end()};
}

unsigned OracleCaps::default_cap(FunctionId id)
{
    switch (id) {
    case FunctionId::CUBIC:
    case FunctionId::AFUN:
    case FunctionId::QODD3:
    case FunctionId::OPBAR:
    case FunctionId::OPODD:
        return 22;
    case FunctionId::P3:
        return 18;
    default:
        return 35;
    }
}

unsigned OracleCaps::hard_limit(FunctionId id)
{
    // Roughly where explicit enumeration passes a few million objects.
    switch (id) {
    case FunctionId::CUBIC:
    case FunctionId::AFUN:
    case FunctionId::QODD3:
    case FunctionId::OPBAR:
    case FunctionId::OPODD:
        return 36;
    case FunctionId::P3:
        return 28;
    default:
        return 60;
    }
}

unsigned OracleCaps::cap(FunctionId id) const
{
    auto it = overrides_.find(id);
    return it != overrides_.end() ? it->second : default_cap(id);
}

} // namespace podium
