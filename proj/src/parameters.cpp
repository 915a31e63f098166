#include "spheregreen/parameters.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spheregreen {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

long long parse_integer(std::string_view text)
{
    long long v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw parameter_error("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text));
    }
    const long long num = parse_integer(std::string_view(text).substr(0, slash));
    const long long den = parse_integer(std::string_view(text).substr(slash + 1));
    if (den == 0) {
        throw parameter_error("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

double l_from_a(double a, const SphereDim& dim)
{
    if (!(a < 0.0)) {
        throw domain_error("l_from_a requires a < 0");
    }
    const double lam = dim.lambda();
    const double root = std::sqrt(-a);
    // sqrt(lam^2 + root) - lam = root / (sqrt(lam^2 + root) + lam)
    return root / (std::sqrt(lam * lam + root) + lam);
}

double a_from_l(double L, const SphereDim& dim)
{
    if (!(L >= 0.0)) {
        throw domain_error("a_from_l requires L >= 0");
    }
    const double m = L * (L + 2.0 * dim.lambda());
    return -m * m;
}

namespace {

constexpr double resonance_rel_tol = 1e-12;

std::optional<int> integer_degree(double L)
{
    const double m = std::round(L);
    if (std::abs(L - m) <= resonance_rel_tol * std::max(1.0, L)) {
        return static_cast<int>(m);
    }
    return std::nullopt;
}

}  // namespace

GreenParameter GreenParameter::from_a(const SphereDim& dim, double a)
{
    if (!std::isfinite(a)) {
        throw parameter_error("a must be finite");
    }
    if (a > 0.0) {
        return GreenParameter(dim, a, std::nullopt, std::nullopt);
    }
    if (a == 0.0) {
        return GreenParameter(dim, 0.0, 0.0, 0);
    }
    const double L = l_from_a(a, dim);
    const double m = std::round(L);
    const double am = a_from_l(m, dim);
    if (m >= 1.0 && std::abs(a - am) <= resonance_rel_tol * std::abs(a)) {
        return GreenParameter(dim, am, m, static_cast<int>(m));
    }
    return GreenParameter(dim, a, L, std::nullopt);
}

GreenParameter GreenParameter::from_L(const SphereDim& dim, double L)
{
    if (!(L >= 0.0) || !std::isfinite(L)) {
        throw domain_error("L must be finite and nonnegative");
    }
    const auto m = integer_degree(L);
    if (m) {
        return GreenParameter(dim, a_from_l(*m, dim), static_cast<double>(*m), m);
    }
    return GreenParameter(dim, a_from_l(L, dim), L, std::nullopt);
}

std::optional<double> GreenParameter::discriminant() const noexcept
{
    if (!L_) {
        return std::nullopt;
    }
    const double lam = lambda();
    const double L = *L_;
    return lam * lam - 2.0 * L * lam - L * L;
}

std::optional<double> GreenParameter::exponent_plus() const noexcept
{
    const auto d = discriminant();
    if (!d || *d < 0.0) {
        return std::nullopt;
    }
    return lambda() + std::sqrt(*d);
}

std::optional<double> GreenParameter::exponent_minus() const noexcept
{
    const auto d = discriminant();
    if (!d || *d < 0.0) {
        return std::nullopt;
    }
    return lambda() - std::sqrt(*d);
}

double GreenParameter::symbol(int l) const noexcept
{
    if (resonant_degree_ && l == *resonant_degree_) {
        return 0.0;
    }
    const double m = l * (l + 2.0 * lambda());
    return m * m + a_;
}

bool GreenParameter::integral_admissible() const noexcept
{
    if (!L_ || !(*L_ > 0.0)) {
        return false;
    }
    const double limit = (std::sqrt(2.0) - 1.0) * lambda();
    return *L_ <= limit * (1.0 + 1e-14);
}

PartialFractionCoeffs partial_fraction_coeffs(const GreenParameter& p)
{
    if (!p.L()) {
        throw parameter_error("partial fractions need a <= 0");
    }
    return partial_fraction_coeffs<double>(p.lambda(), *p.L());
}

double decomposition_residual(const GreenParameter& p, double l, const PartialFractionCoeffs& c)
{
    if (!p.L()) {
        throw parameter_error("partial fractions need a <= 0");
    }
    return decomposition_residual<double>(p.lambda(), *p.L(), l, c);
}

long long integer_sqrt(long long v)
{
    if (v < 0) {
        throw domain_error("integer_sqrt of a negative number");
    }
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

Rational ExponentPair::a() const
{
    const Rational m = L * (L + 2 * lambda);
    return -m * m;
}

namespace {

ExponentPair make_pair_from_ratio(int n, const Rational& lambda, long long p, long long q)
{
    const long long K = 2 * q * q - (p + q) * (p + q);
    if (K < 0) {
        throw std::logic_error("p/q outside the real-discriminant range");
    }
    const long long k = integer_sqrt(K);
    if (k * k != K) {
        throw std::logic_error("2 q^2 - (p+q)^2 is not a perfect square");
    }
    const Rational L = Rational(p, q) * lambda;
    const Rational sqrt_d = Rational(k, q) * lambda;
    ExponentPair pair{n, lambda, L, lambda + sqrt_d, lambda - sqrt_d, p, q, k};
    // e+ + e- = 2 lambda and e+ e- = 2 L lambda + L^2 must hold exactly.
    if (pair.e_plus + pair.e_minus != 2 * lambda || pair.e_plus * pair.e_minus != 2 * L * lambda + L * L) {
        throw std::logic_error("exponent identities violated");
    }
    return pair;
}

int dimension_of(const Rational& lambda)
{
    const Rational two_lambda = 2 * lambda;
    if (two_lambda.denominator() != 1 || two_lambda.numerator() < 1) {
        throw parameter_error("lambda must be a positive half-integer, got " + to_string(lambda));
    }
    return static_cast<int>(two_lambda.numerator()) + 1;
}

}  // namespace

ExponentPair rational_L_family(const Rational& lambda, const Rational& alpha)
{
    const int n = dimension_of(lambda);
    if (alpha < 1) {
        throw parameter_error("alpha must satisfy alpha >= 1, got " + to_string(alpha));
    }
    const long long a = alpha.numerator();
    const long long b = alpha.denominator();
    constexpr long long limit = 1LL << 30;
    if (a >= limit || b >= limit) {
        throw parameter_error("alpha numerator/denominator too large for exact 64-bit arithmetic");
    }
    // p/q = 2 b (a - b) / (a^2 + b^2), reduced
    const Rational ratio(2 * b * (a - b), a * a + b * b);
    const long long p = ratio.numerator();
    const long long q = ratio.denominator();
    if (p % 2 != 0 || q % 2 == 0) {
        throw std::logic_error("parity of reduced p/q contradicts the sieve analysis");
    }
    ExponentPair pair = make_pair_from_ratio(n, lambda, p, q);
    if (p > 0 && pair.k % 2 == 0) {
        throw std::logic_error("2 q^2 - (p+q)^2 is an even square");
    }
    return pair;
}

std::vector<ExponentPair> enumerate_integer_exponent_pairs(int n_max)
{
    if (n_max < 2) {
        throw parameter_error("n_max must be at least 2");
    }
    std::vector<ExponentPair> out;
    for (int n = 2; n <= n_max; ++n) {
        const long long N = n - 1;
        const Rational lambda(N, 2);
        for (long long q = 1; q <= N; q += 2) {
            if (N % q != 0) {
                continue;
            }
            // even p with (p + q)^2 <= 2 q^2, i.e. p <= (sqrt 2 - 1) q
            for (long long p = 2; (p + q) * (p + q) <= 2 * q * q; p += 2) {
                if (std::gcd(p, q) != 1) {
                    continue;
                }
                const long long K = 2 * q * q - (p + q) * (p + q);
                const long long k = integer_sqrt(K);
                if (k * k != K) {
                    continue;
                }
                ExponentPair pair = make_pair_from_ratio(n, lambda, p, q);
                if (!pair.integer_exponents()) {
                    throw std::logic_error("q | (n-1) did not yield integer exponents");
                }
                out.push_back(pair);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ExponentPair& x, const ExponentPair& y) {
        return x.n != y.n ? x.n < y.n : x.L < y.L;
    });
    return out;
}

}  // namespace spheregreen
