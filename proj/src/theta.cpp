#include "podium/theta.hpp"

#include <array>
#include <string>
#include <utility>

namespace podium {

std::uint64_t triangular(std::uint64_t k) { return k * (k + 1) / 2; }

std::int64_t ceil_half(std::int64_t x)
{
    // floor division rounds toward -inf; ceil(x/2) = -floor(-x/2)
    return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
}

std::uint64_t gpent(std::uint64_t k)
{
    const std::uint64_t u = (k + 1) / 2;
    const std::uint64_t v = (3 * k + 2) / 2;
    return u * v / 2;
}

QuadExp QuadExp::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    if (d <= 0)
        throw std::invalid_argument("exponent denominator must be positive");
    for (std::int64_t n = -100; n <= 100; ++n) {
        const std::int64_t num = a * n * n + b * n + c;
        if (num % d != 0)
            throw std::invalid_argument("exponent numerator not divisible by " +
                                        std::to_string(d) + " at n = " + std::to_string(n));
    }
    return QuadExp(a, b, c, d);
}

BigInt QuadExp::operator()(std::int64_t n) const
{
    BigInt x(static_cast<long>(n));
    BigInt num = BigInt(static_cast<long>(a_)) * x * x + BigInt(static_cast<long>(b_)) * x +
                 BigInt(static_cast<long>(c_));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), BigInt(static_cast<long>(d_)).get_mpz_t());
    return q;
}

BigInt eval_weight(WeightKind w, std::int64_t n)
{
    const auto alt = [](std::int64_t e) { return (e % 2 == 0) ? 1L : -1L; };
    const long ln = static_cast<long>(n);
    switch (w) {
    case WeightKind::One:
        return 1;
    case WeightKind::AltN:
        return alt(n);
    case WeightKind::AltCeilHalf:
        return alt(ceil_half(n));
    case WeightKind::AltTri: {
        // n(n+1)/2 is odd exactly when n mod 4 is 1 or 2
        const auto r = ((n % 4) + 4) % 4;
        return alt(r == 1 || r == 2 ? 1 : 0);
    }
    case WeightKind::JacobiOdd:
        return BigInt(2 * ln + 1) * alt(n);
    case WeightKind::Lin6:
        return BigInt(6 * ln + 1);
    case WeightKind::Lin3:
        return BigInt(3 * ln + 1);
    }
    throw std::logic_error("unhandled weight kind");
}

ThetaSpec ThetaSpec::make(Domain domain, Weight weight, QuadExp exponent)
{
    const bool terminates =
        exponent.a() > 0 ||
        (exponent.a() == 0 && exponent.b() > 0 && domain == Domain::NonNegative);
    if (!terminates)
        throw std::invalid_argument("theta exponent does not grow over its summation domain");
    return ThetaSpec{domain, std::move(weight), exponent};
}

Series theta_series(Domain domain, const WeightFn& weight, const ExponentFn& exponent,
                    Order order)
{
    std::vector<BigInt> v(order + 1);
    const BigInt limit(static_cast<unsigned long>(order));

    const auto scan = [&](std::int64_t start, std::int64_t step) {
        std::optional<BigInt> prev;
        if (step < 0)
            prev = exponent(0);
        for (std::int64_t n = start;; n += step) {
            if (n > kThetaScanLimit || n < -kThetaScanLimit)
                throw DivergenceError("theta summation window still open at |n| = " +
                                      std::to_string(kThetaScanLimit));
            BigInt e = exponent(n);
            if (sgn(e) < 0)
                throw std::domain_error("negative theta exponent " + e.get_str() +
                                        " at n = " + std::to_string(n));
            if (e > limit) {
                if (prev && e > *prev)
                    return;
            } else {
                v[e.get_ui()] += weight(n);
            }
            prev = std::move(e);
        }
    };

    scan(0, 1);
    if (domain == Domain::AllIntegers)
        scan(-1, -1);
    return Series(std::move(v));
}

Series theta_series(const ThetaSpec& spec, Order order)
{
    WeightFn w = std::visit(
        [](const auto& x) -> WeightFn {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WeightKind>)
                return [x](std::int64_t n) { return eval_weight(x, n); };
            else
                return x;
        },
        spec.weight);
    const QuadExp e = spec.exponent;
    return theta_series(spec.domain, w, [e](std::int64_t n) { return e(n); }, order);
}

namespace {

struct NamedEntry {
    std::string_view name;
    Domain domain;
    WeightKind weight;
    std::array<std::int64_t, 4> exp; // A, B, C, D
};

constexpr std::array<NamedEntry, 10> kNamed{{
    {"phi", Domain::AllIntegers, WeightKind::One, {1, 0, 0, 1}},
    {"psi", Domain::NonNegative, WeightKind::One, {1, 1, 0, 2}},
    {"phi_neg", Domain::AllIntegers, WeightKind::AltN, {1, 0, 0, 1}},
    {"psi_neg", Domain::NonNegative, WeightKind::AltTri, {1, 1, 0, 2}},
    {"euler_pentagonal", Domain::AllIntegers, WeightKind::AltN, {3, 1, 0, 2}},
    {"jacobi_cube", Domain::NonNegative, WeightKind::JacobiOdd, {1, 1, 0, 2}},
    {"ram_6n1", Domain::AllIntegers, WeightKind::Lin6, {3, 1, 0, 2}},
    {"ram_3n1", Domain::AllIntegers, WeightKind::Lin3, {3, 2, 0, 1}},
    {"baruah_pent", Domain::AllIntegers, WeightKind::One, {3, 1, 0, 2}},
    {"e1_series", Domain::AllIntegers, WeightKind::AltN, {2, 1, 0, 1}},
}};

} // namespace

ThetaSpec named_theta_spec(std::string_view name)
{
    for (const auto& e : kNamed)
        if (e.name == name)
            return ThetaSpec::make(e.domain, e.weight,
                                   QuadExp::make(e.exp[0], e.exp[1], e.exp[2], e.exp[3]));
    throw std::invalid_argument("unknown theta series '" + std::string(name) + "'");
}

Series named_theta(std::string_view name, Order order)
{
    return theta_series(named_theta_spec(name), order);
}

} // namespace podium
