#pragma once

// Truncated formal power series in one variable q with exact integer
// coefficients. A Series of order N carries the coefficients of q^0..q^N;
// everything above q^N is unknown and never invented.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace podium {

using BigInt = mpz_class;
using Order = std::size_t;

/// Raised when an operation needs a unit constant term (+1 or -1).
class InvertibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Sign : int { Plus = 1, Minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

class Series {
public:
    /// Zero series of the given order.
    explicit Series(Order order);
    /// Takes ownership of coefficients c_0..c_N; must be non-empty.
    explicit Series(std::vector<BigInt> coeffs);

    Order order() const { return coeffs_.size() - 1; }
    /// Bounds-checked; throws std::out_of_range beyond the truncation order.
    const BigInt& coeff(Order n) const;
    const BigInt& operator[](Order n) const { return coeffs_[n]; }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    bool is_zero() const;

    /// Exact equality of both order and coefficients.
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<BigInt> coeffs_;
};

Series constant(const BigInt& c, Order order);
/// q^k truncated at order (zero series when k > order).
Series monomial(Order k, Order order);
/// Build from small integers, mostly useful in tests.
Series from_ints(std::initializer_list<long> values);

const BigInt& coeff(const Series& s, Order n);

// Binary operations truncate to the smaller operand order.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const BigInt& c);
Series mul(const Series& a, const Series& b);

/// Multiplicative inverse; requires a_0 = +1 or -1.
Series inverse(const Series& a);
/// a^k for any signed k; negative k requires a unit constant term.
Series power(const Series& a, std::int64_t k);

/// q -> s*q^k at the same order: coefficient k*n becomes s^n * a_n.
Series substitute(const Series& a, Order k, Sign s);
/// As above but producing a series of order target; needs a.order() >= target / k.
Series substitute(const Series& a, Order k, Sign s, Order target);

/// Product of (1 - s*q^(a+j*b)) over j >= 0 truncated at order, i.e.
/// (q^a; q^b)_inf for s = Plus and (-q^a; q^b)_inf for s = Minus.
Series pochhammer(Sign s, Order a, Order b, Order order);

Series truncate(const Series& a, Order order);

/// Coefficientwise least non-negative residue modulo m (m >= 2).
Series reduce_mod(const Series& a, const BigInt& m);

struct Mismatch {
    Order index;
    BigInt lhs;
    BigInt rhs;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// First index <= n where a and b differ, or nullopt when they agree.
/// Throws std::out_of_range when n exceeds either order.
std::optional<Mismatch> equal_upto(const Series& a, const Series& b, Order n);

std::string to_string(const Series& s);

} // namespace podium
