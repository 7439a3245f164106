#pragma once

// Theta-type sums  sum_n w(n) q^e(n)  with quadratic exponents, the integer
// sequences that index them, and named constructors for the classical ones.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "podium/series.hpp"

namespace podium {

/// A summation whose window never closes (exponent stays <= N too long).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// k(k+1)/2
std::uint64_t triangular(std::uint64_t k);
/// Generalized pentagonal numbers in increasing order: 0,1,2,5,7,12,15,...
std::uint64_t gpent(std::uint64_t k);
/// Mathematical ceiling of x/2, valid for negative x as well.
std::int64_t ceil_half(std::int64_t x);

enum class Domain { AllIntegers, NonNegative };

/// e(n) = (A n^2 + B n + C) / D with D dividing the numerator for all n.
class QuadExp {
public:
    /// Throws std::invalid_argument when D <= 0 or divisibility fails on [-100, 100].
    static QuadExp make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d = 1);

    BigInt operator()(std::int64_t n) const;

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    friend bool operator==(const QuadExp&, const QuadExp&) = default;

private:
    QuadExp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
        : a_(a), b_(b), c_(c), d_(d) {}
    std::int64_t a_, b_, c_, d_;
};

enum class WeightKind {
    One,         // 1
    AltN,        // (-1)^n
    AltCeilHalf, // (-1)^ceil(n/2)
    AltTri,      // (-1)^(n(n+1)/2)
    JacobiOdd,   // (2n+1)(-1)^n
    Lin6,        // 6n+1
    Lin3,        // 3n+1
};

/// Arbitrary integer weight, e.g. an expression tree from the qexpr language.
using WeightFn = std::function<BigInt(std::int64_t)>;
using ExponentFn = std::function<BigInt(std::int64_t)>;
using Weight = std::variant<WeightKind, WeightFn>;

BigInt eval_weight(WeightKind w, std::int64_t n);

struct ThetaSpec {
    Domain domain;
    Weight weight;
    QuadExp exponent;

    /// Checks that the summation terminates: A > 0, or A == 0 with B > 0 over
    /// the non-negative integers.
    static ThetaSpec make(Domain domain, Weight weight, QuadExp exponent);
};

/// Maximum |n| visited before a summation is declared divergent.
inline constexpr std::int64_t kThetaScanLimit = 1'000'000;

/// c_m = sum of w(n) over n in the domain with e(n) = m, for m <= order.
Series theta_series(const ThetaSpec& spec, Order order);

/// Same scan over arbitrary exponent/weight callables. The window in each
/// direction closes once e(n) > order and e is increasing, which is exact for
/// quadratics. Throws DivergenceError past kThetaScanLimit and
/// std::domain_error for a negative exponent.
Series theta_series(Domain domain, const WeightFn& weight, const ExponentFn& exponent,
                    Order order);

// phi, psi, phi_neg, psi_neg, euler_pentagonal, jacobi_cube, ram_6n1,
// ram_3n1, baruah_pent, e1_series
ThetaSpec named_theta_spec(std::string_view name);
Series named_theta(std::string_view name, Order order);

} // namespace podium
