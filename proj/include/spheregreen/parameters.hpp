#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "spheregreen/errors.hpp"
#include "spheregreen/sphere.hpp"

namespace spheregreen {

using Rational = boost::rational<long long>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
/// Parses "p/q" or an integer. Throws parameter_error on malformed input.
Rational parse_rational(const std::string& text);
inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// The shift a of (Delta^2 + a) together with the equivalent L >= 0 solving
/// a = -L^2 (L + 2 lambda)^2, the discriminant lambda^2 - 2 L lambda - L^2 and
/// the exponents lambda +- sqrt(discriminant) when they are real.
class GreenParameter {
public:
    /// L is set when a <= 0. A value of a within 1e-12 (relative) of -m^2(m+2 lambda)^2
    /// is treated as resonant with L snapped to the integer m.
    static GreenParameter from_a(const SphereDim& dim, double a);
    /// Throws domain_error for L < 0.
    static GreenParameter from_L(const SphereDim& dim, double L);

    const SphereDim& dim() const noexcept { return dim_; }
    double lambda() const noexcept { return dim_.lambda(); }
    double a() const noexcept { return a_; }
    std::optional<double> L() const noexcept { return L_; }
    /// Present iff L is.
    std::optional<double> discriminant() const noexcept;
    /// lambda + sqrt(d), present iff d >= 0.
    std::optional<double> exponent_plus() const noexcept;
    std::optional<double> exponent_minus() const noexcept;

    bool resonant() const noexcept { return resonant_degree_.has_value(); }
    /// The integer L for which a = -L^2 (L + 2 lambda)^2.
    std::optional<int> resonant_degree() const noexcept { return resonant_degree_; }

    /// l^2 (l + 2 lambda)^2 + a, the symbol of the operator on degree l.
    double symbol(int l) const noexcept;

    /// 0 < L <= (sqrt 2 - 1) lambda, equivalently -lambda^4 <= a < 0.
    bool integral_admissible() const noexcept;

private:
    GreenParameter(const SphereDim& dim, double a, std::optional<double> L, std::optional<int> resonant)
        : dim_(dim), a_(a), L_(L), resonant_degree_(resonant)
    {}

    SphereDim dim_;
    double a_;
    std::optional<double> L_;
    std::optional<int> resonant_degree_;
};

/// L = sqrt(lambda^2 + sqrt(-a)) - lambda, evaluated without cancellation.
/// Throws domain_error for a >= 0.
double l_from_a(double a, const SphereDim& dim);

/// a = -L^2 (L + 2 lambda)^2. Throws domain_error for L < 0.
double a_from_l(double L, const SphereDim& dim);

/// Coefficients of
///   1/(l^2(l+2 lambda)^2 + a) = A/(l-L) - A/(l+L+2 lambda) + B/(l+lambda+s) - B/(l+lambda-s),
/// s = sqrt(lambda^2 - 2 L lambda - L^2).
template <typename Real>
struct PartialFractions {
    Real A;
    Real B;
};
using PartialFractionCoeffs = PartialFractions<double>;

/// A = 1/(4 L (L+lambda)(L+2 lambda)), B = 1/(4 L (L+2 lambda) s). Works for any
/// floating type (double, long double, boost::multiprecision).
template <typename Real>
PartialFractions<Real> partial_fraction_coeffs(const Real& lambda, const Real& L)
{
    using std::sqrt;
    const Real disc = lambda * lambda - 2 * L * lambda - L * L;
    if (!(L > 0) || !(disc > 0)) {
        throw parameter_error("partial fractions need L > 0 and lambda^2 - 2 L lambda - L^2 > 0");
    }
    const Real s = sqrt(disc);
    return {Real(1) / (4 * L * (L + lambda) * (L + 2 * lambda)), Real(1) / (4 * L * (L + 2 * lambda) * s)};
}

PartialFractionCoeffs partial_fraction_coeffs(const GreenParameter& p);

/// |LHS - RHS| of the four-term decomposition at (possibly non-integer) l.
/// Throws pole_error when l coincides with a pole of either side.
template <typename Real>
Real decomposition_residual(const Real& lambda, const Real& L, const Real& l, const PartialFractions<Real>& c)
{
    using std::abs;
    using std::sqrt;
    const Real s = sqrt(lambda * lambda - 2 * L * lambda - L * L);
    const Real a = -(L * L) * (L + 2 * lambda) * (L + 2 * lambda);
    const Real poles[] = {L, -L - 2 * lambda, -lambda - s, -lambda + s};
    for (const Real& pole : poles) {
        if (l == pole) {
            throw pole_error("decomposition evaluated at a pole");
        }
    }
    const Real lhs = Real(1) / (l * l * (l + 2 * lambda) * (l + 2 * lambda) + a);
    const Real rhs = c.A / (l - L) - c.A / (l + L + 2 * lambda) + c.B / (l + lambda + s) - c.B / (l + lambda - s);
    return abs(lhs - rhs);
}

double decomposition_residual(const GreenParameter& p, double l, const PartialFractionCoeffs& c);

/// A rational family (lambda, L) whose exponents lambda +- sqrt(d) are rational.
/// L / lambda = p/q in lowest terms and 2 q^2 - (p+q)^2 = k^2.
struct ExponentPair {
    int n;
    Rational lambda;
    Rational L;
    Rational e_plus;
    Rational e_minus;
    long long p;
    long long q;
    long long k;

    bool integer_exponents() const noexcept { return e_plus.denominator() == 1 && e_minus.denominator() == 1; }
    /// a = -L^2 (L + 2 lambda)^2, exact.
    Rational a() const;
};

/// L = 2(alpha - 1)/(alpha^2 + 1) * lambda for rational alpha >= 1; the parity
/// (p even, q odd) and the perfect square 2 q^2 - (p+q)^2 are checked on construction.
/// Throws parameter_error for alpha < 1 or lambda not a positive half-integer.
ExponentPair rational_L_family(const Rational& lambda, const Rational& alpha);

/// All (lambda, L), L > 0, 2 <= n <= n_max, with integer exponents, found by the
/// exact sieve: q odd, q | (n-1), p even, 0 < p <= (sqrt 2 - 1) q, gcd(p,q) = 1 and
/// 2 q^2 - (p+q)^2 a perfect square. Sorted by (n, L).
std::vector<ExponentPair> enumerate_integer_exponent_pairs(int n_max);

/// floor(sqrt(v)) for v >= 0, exact.
long long integer_sqrt(long long v);

}  // namespace spheregreen
