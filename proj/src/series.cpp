#include "podium/series.hpp"

#include <algorithm>
#include <sstream>

namespace podium {

Series::Series(Order order) : coeffs_(order + 1) {}

Series::Series(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least one coefficient");
}

const BigInt& Series::coeff(Order n) const
{
    if (n > order())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " beyond truncation order " + std::to_string(order()));
    return coeffs_[n];
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return sgn(c) == 0; });
}

Series constant(const BigInt& c, Order order)
{
    std::vector<BigInt> v(order + 1);
    v[0] = c;
    return Series(std::move(v));
}

Series monomial(Order k, Order order)
{
    std::vector<BigInt> v(order + 1);
    if (k <= order)
        v[k] = 1;
    return Series(std::move(v));
}

Series from_ints(std::initializer_list<long> values)
{
    std::vector<BigInt> v;
    v.reserve(values.size());
    for (long x : values)
        v.emplace_back(x);
    return Series(std::move(v));
}

const BigInt& coeff(const Series& s, Order n) { return s.coeff(n); }

Series add(const Series& a, const Series& b)
{
    const Order n = std::min(a.order(), b.order());
    std::vector<BigInt> v(n + 1);
    for (Order i = 0; i <= n; ++i)
        v[i] = a[i] + b[i];
    return Series(std::move(v));
}

Series sub(const Series& a, const Series& b)
{
    const Order n = std::min(a.order(), b.order());
    std::vector<BigInt> v(n + 1);
    for (Order i = 0; i <= n; ++i)
        v[i] = a[i] - b[i];
    return Series(std::move(v));
}

Series negate(const Series& a)
{
    std::vector<BigInt> v(a.order() + 1);
    for (Order i = 0; i <= a.order(); ++i)
        v[i] = -a[i];
    return Series(std::move(v));
}

Series scale(const Series& a, const BigInt& c)
{
    std::vector<BigInt> v(a.order() + 1);
    for (Order i = 0; i <= a.order(); ++i)
        v[i] = a[i] * c;
    return Series(std::move(v));
}

Series mul(const Series& a, const Series& b)
{
    const Order n = std::min(a.order(), b.order());
    std::vector<BigInt> v(n + 1);
    // Most operands here are sparse theta sums or products, so skipping zero
    // terms of the outer operand pays off.
    for (Order i = 0; i <= n; ++i) {
        const mpz_srcptr ai = a[i].get_mpz_t();
        if (mpz_sgn(ai) == 0)
            continue;
        for (Order j = 0; i + j <= n; ++j)
            mpz_addmul(v[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
    return Series(std::move(v));
}

Series inverse(const Series& a)
{
    const BigInt& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw InvertibilityError("series with constant term " + a0.get_str() +
                                 " is not invertible over the integers");

    const Order n = a.order();
    std::vector<Order> support;
    for (Order k = 1; k <= n; ++k)
        if (sgn(a[k]) != 0)
            support.push_back(k);

    // b_0 = a_0, b_m = -a_0 * sum_{k=1..m} a_k b_{m-k}
    std::vector<BigInt> b(n + 1);
    b[0] = a0;
    BigInt acc;
    for (Order m = 1; m <= n; ++m) {
        acc = 0;
        for (Order k : support) {
            if (k > m)
                break;
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[m - k].get_mpz_t());
        }
        b[m] = (a0 > 0) ? BigInt(-acc) : acc;
    }
    return Series(std::move(b));
}

Series power(const Series& a, std::int64_t k)
{
    if (k == 0)
        return constant(1, a.order());
    Series base = k < 0 ? inverse(a) : a;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                            : static_cast<std::uint64_t>(k);
    Series result = constant(1, a.order());
    bool first = true;
    while (e != 0) {
        if (e & 1U) {
            result = first ? base : mul(result, base);
            first = false;
        }
        e >>= 1U;
        if (e != 0)
            base = mul(base, base);
    }
    return result;
}

Series substitute(const Series& a, Order k, Sign s)
{
    return substitute(a, k, s, a.order());
}

Series substitute(const Series& a, Order k, Sign s, Order target)
{
    if (k == 0)
        throw std::invalid_argument("substitution exponent must be at least 1");
    if (a.order() < target / k)
        throw std::out_of_range("substitution source order too small for target order");
    std::vector<BigInt> v(target + 1);
    for (Order n = 0; n * k <= target; ++n)
        v[n * k] = (s == Sign::Minus && (n & 1U)) ? BigInt(-a[n]) : a[n];
    return Series(std::move(v));
}

Series pochhammer(Sign s, Order a, Order b, Order order)
{
    if (a == 0 || b == 0)
        throw std::invalid_argument("pochhammer exponents must be positive");
    std::vector<BigInt> v(order + 1);
    v[0] = 1;
    // Multiply by (1 - s q^e) in place, walking downwards so each read sees
    // the coefficient from before this factor.
    for (Order e = a; e <= order; e += b) {
        for (Order n = order; n >= e; --n) {
            if (s == Sign::Plus)
                v[n] -= v[n - e];
            else
                v[n] += v[n - e];
        }
    }
    return Series(std::move(v));
}

Series truncate(const Series& a, Order order)
{
    if (order > a.order())
        throw std::out_of_range("cannot truncate to an order above the known coefficients");
    auto c = a.coeffs().first(order + 1);
    return Series(std::vector<BigInt>(c.begin(), c.end()));
}

Series reduce_mod(const Series& a, const BigInt& m)
{
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    std::vector<BigInt> v(a.order() + 1);
    for (Order i = 0; i <= a.order(); ++i)
        mpz_fdiv_r(v[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    return Series(std::move(v));
}

std::optional<Mismatch> equal_upto(const Series& a, const Series& b, Order n)
{
    if (n > a.order() || n > b.order())
        throw std::out_of_range("comparison order " + std::to_string(n) +
                                " exceeds an operand's truncation order");
    for (Order i = 0; i <= n; ++i)
        if (a[i] != b[i])
            return Mismatch{i, a[i], b[i]};
    return std::nullopt;
}

std::string to_string(const Series& s)
{
    std::ostringstream os;
    os << '[';
    for (Order i = 0; i <= s.order(); ++i)
        os << (i ? "," : "") << s[i].get_str();
    os << ']';
    return os.str();
}

} // namespace podium
