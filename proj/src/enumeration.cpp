#include "podium/partitions.hpp"

#include <algorithm>
#include <string>

namespace podium {

namespace {

enum class Parity { Any, Odd };
enum class SignRule { None, TotalParts, OddParts };
enum class Shape { Any, EO, EOBar };

struct Rules {
    Parity values = Parity::Any; // which part values may occur at all
    unsigned modulus = 0;        // if nonzero, parts must be == residue mod modulus
    unsigned residue = 0;
    unsigned even_colors = 1;
    unsigned odd_colors = 1;
    bool odd_distinct = false; // each (odd value, colour) at most once
    bool even_distinct = false;
    bool overline = false;
    SignRule sign = SignRule::None;
    Shape shape = Shape::Any;
};

Rules rules_for(FunctionId id)
{
    Rules r;
    switch (id) {
    case FunctionId::P:
        break;
    case FunctionId::POD:
        r.odd_distinct = true;
        break;
    case FunctionId::PED:
        r.even_distinct = true;
        break;
    case FunctionId::QDIST:
        r.odd_distinct = r.even_distinct = true;
        break;
    case FunctionId::QODD:
        r.values = Parity::Odd;
        r.odd_distinct = true;
        break;
    case FunctionId::PEO:
        r.sign = SignRule::TotalParts;
        break;
    case FunctionId::QEO:
        r.odd_distinct = r.even_distinct = true;
        r.sign = SignRule::OddParts;
        break;
    case FunctionId::OPBAR:
        r.overline = true;
        break;
    case FunctionId::OPODD:
        r.values = Parity::Odd;
        r.overline = true;
        break;
    case FunctionId::AFUN:
        r.even_colors = 2;
        r.sign = SignRule::TotalParts;
        break;
    case FunctionId::CUBIC:
        r.even_colors = 2;
        break;
    case FunctionId::P3:
        r.even_colors = r.odd_colors = 3;
        break;
    case FunctionId::P2MOD4:
        r.modulus = 4;
        r.residue = 2;
        break;
    case FunctionId::QODD3:
        r.values = Parity::Odd;
        r.odd_colors = 3;
        r.odd_distinct = true;
        break;
    case FunctionId::EO:
        r.shape = Shape::EO;
        break;
    case FunctionId::EOBAR:
        r.shape = Shape::EOBar;
        break;
    }
    return r;
}

// Walks part values from n down to 1, choosing a multiplicity for every
// (value, colour) slot, and branches twice on each present value when parts
// may be overlined. Every leaf is one concrete partition object.
class Enumerator {
public:
    Enumerator(const Rules& rules, unsigned n) : rules_(rules), n_(n), mult_(n + 1, 0) {}

    std::int64_t run()
    {
        total_ = 0;
        visit(n_, n_);
        return total_;
    }

private:
    bool allowed(unsigned v) const
    {
        if (rules_.values == Parity::Odd && v % 2 == 0)
            return false;
        if (rules_.modulus != 0 && v % rules_.modulus != rules_.residue)
            return false;
        return true;
    }

    void visit(unsigned v, unsigned remaining)
    {
        if (remaining == 0) {
            leaf();
            return;
        }
        if (v == 0)
            return;
        if (!allowed(v) || v > remaining) {
            visit(v - 1, remaining);
            return;
        }
        const bool odd = v % 2 == 1;
        const unsigned colors = odd ? rules_.odd_colors : rules_.even_colors;
        const bool distinct = odd ? rules_.odd_distinct : rules_.even_distinct;
        split(v, 0, colors, distinct, remaining, 0);
    }

    // Choose the multiplicity of colour `color` of value v.
    void split(unsigned v, unsigned color, unsigned colors, bool distinct, unsigned remaining,
               unsigned taken)
    {
        if (color == colors) {
            mult_[v] = taken;
            const unsigned branches = (rules_.overline && taken > 0) ? 2 : 1;
            for (unsigned b = 0; b < branches; ++b)
                visit(v - 1, remaining);
            mult_[v] = 0;
            return;
        }
        const unsigned max_m = distinct ? std::min(1U, remaining / v) : remaining / v;
        for (unsigned m = 0; m <= max_m; ++m)
            split(v, color + 1, colors, distinct, remaining - m * v, taken + m);
    }

    void leaf()
    {
        if (!shape_ok())
            return;
        unsigned parts = 0;
        unsigned odd_parts = 0;
        for (unsigned v = 1; v <= n_; ++v) {
            parts += mult_[v];
            if (v % 2 == 1)
                odd_parts += mult_[v];
        }
        switch (rules_.sign) {
        case SignRule::None:
            ++total_;
            break;
        case SignRule::TotalParts:
            total_ += (parts % 2 == 0) ? 1 : -1;
            break;
        case SignRule::OddParts:
            total_ += (odd_parts % 2 == 0) ? 1 : -1;
            break;
        }
    }

    bool shape_ok() const
    {
        if (rules_.shape == Shape::Any)
            return true;
        unsigned max_even = 0;
        unsigned min_odd = 0;
        for (unsigned v = 1; v <= n_; ++v) {
            if (mult_[v] == 0)
                continue;
            if (v % 2 == 0)
                max_even = v;
            else if (min_odd == 0)
                min_odd = v;
        }
        if (max_even != 0 && min_odd != 0 && max_even > min_odd)
            return false;
        if (rules_.shape == Shape::EO)
            return true;
        // The largest even part (if any) occurs an odd number of times and
        // every other part value an even number of times.
        for (unsigned v = 1; v <= n_; ++v) {
            const bool odd_mult = mult_[v] % 2 == 1;
            if (v == max_even ? !odd_mult : odd_mult)
                return false;
        }
        return true;
    }

    const Rules& rules_;
    unsigned n_;
    std::vector<unsigned> mult_;
    std::int64_t total_ = 0;
};

} // namespace

BigInt count_by_enumeration(FunctionId id, unsigned n, const OracleCaps& caps)
{
    const unsigned cap = std::min(caps.cap(id), OracleCaps::hard_limit(id));
    if (n > cap)
        throw CapRefusal("refusing to enumerate " + std::string(name(id)) + "(" +
                         std::to_string(n) + "): cap is " + std::to_string(cap));
    const Rules rules = rules_for(id);
    Enumerator e(rules, n);
    return BigInt(static_cast<long>(e.run()));
}

} // namespace podium
