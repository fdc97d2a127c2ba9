#include "trivext/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trivext {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
{
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, long coefficient)
{
    std::vector<mpz_class> c(degree + 1, 0);
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string(const std::string& var) const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k > 0) {
            os << var;
            if (k > 1)
                os << '^' << k;
        }
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        c[k] += b.coeffs_[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        c[k] -= b.coeffs_[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& d)
{
    if (!d.is_monic())
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<mpz_class> rem = a.coefficients();
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    if (rem.size() <= dd)
        return {IntPolynomial(), a};
    std::vector<mpz_class> quot(rem.size() - dd, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const mpz_class c = rem[k];
        if (c == 0)
            continue;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] -= c * d.coefficient(j);
    }
    rem.resize(dd);
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly to_q(const IntPolynomial& p)
{
    QPoly q;
    for (const auto& c : p.coefficients())
        q.emplace_back(c);
    return q;
}

QPoly rem_q(QPoly a, const QPoly& b)
{
    while (a.size() >= b.size()) {
        const mpq_class c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

IntPolynomial monic_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    QPoly x = to_q(a), y = to_q(b);
    while (!y.empty()) {
        QPoly r = rem_q(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty())
        return {};
    const mpq_class lead = x.back();
    std::vector<mpz_class> out;
    for (auto& c : x) {
        mpq_class v = c / lead;
        if (v.get_den() != 1)
            throw std::logic_error("monic_gcd: non-integral gcd of integer polynomials");
        out.push_back(v.get_num());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial squarefree_part(const IntPolynomial& p)
{
    if (!p.is_monic())
        throw std::invalid_argument("squarefree_part: polynomial must be monic");
    if (p.degree() <= 0)
        return p;
    const IntPolynomial g = monic_gcd(p, p.derivative());
    auto [q, r] = divmod_monic(p, g);
    if (!r.is_zero())
        throw std::logic_error("squarefree_part: inexact division");
    return q;
}

unsigned long euler_phi(unsigned long n)
{
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

IntPolynomial cyclotomic(unsigned d)
{
    if (d == 0)
        throw std::invalid_argument("cyclotomic: index must be positive");
    IntPolynomial p = IntPolynomial::monomial(d) - IntPolynomial{1};
    for (unsigned e = 1; e < d; ++e) {
        if (d % e != 0)
            continue;
        p = divmod_monic(p, cyclotomic(e)).first;
    }
    return p;
}

IntPolynomial char_poly(const std::vector<std::vector<mpz_class>>& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("char_poly: matrix is not square");
    if (n == 0)
        return IntPolynomial{1};

    // Berkowitz: peel off the last row/column, one Toeplitz factor per size.
    using Vec = std::vector<mpz_class>;
    std::vector<std::vector<Vec>> transforms;  // column-major lower Toeplitz data: first column
    std::vector<std::vector<mpz_class>> a = m;
    for (std::size_t size = n; size > 1; --size) {
        const std::size_t k = size - 1;
        Vec r(k), c(k);
        for (std::size_t j = 0; j < k; ++j) {
            r[j] = -a[k][j];
            c[j] = a[j][k];
        }
        const mpz_class diag = -a[k][k];
        std::vector<std::vector<mpz_class>> sub(k, Vec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub[i][j] = a[i][j];

        Vec items{1, diag};
        Vec cur = c;
        for (std::size_t t = 0; t + 1 < size; ++t) {
            mpz_class s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += r[j] * cur[j];
            items.push_back(s);
            if (t + 2 < size) {
                Vec next(k, 0);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        if (sub[i][j] != 0)
                            next[i] += sub[i][j] * cur[j];
                cur = std::move(next);
            }
        }
        transforms.push_back({items});
        a = std::move(sub);
    }

    Vec poly{1, -a[0][0]};  // highest degree first
    for (auto it = transforms.rbegin(); it != transforms.rend(); ++it) {
        const Vec& items = it->front();
        const std::size_t cols = poly.size();
        Vec next(cols + 1, 0);
        for (std::size_t row = 0; row <= cols; ++row)
            for (std::size_t col = 0; col < cols && col <= row; ++col)
                next[row] += items[row - col] * poly[col];
        poly = std::move(next);
    }
    return IntPolynomial(Vec(poly.rbegin(), poly.rend()));
}

IntPolynomial char_poly(const ExactMatrix<Rationals>& m)
{
    if (!m.is_square())
        throw std::invalid_argument("char_poly: matrix is not square");
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integer())
                throw std::invalid_argument("char_poly: matrix has non-integer entries");
            z[i][j] = m(i, j).numerator();
        }
    return char_poly(z);
}

std::optional<unsigned long> cyclotomic_periodicity(const IntPolynomial& p, std::size_t n)
{
    if (p.is_zero())
        throw std::invalid_argument("cyclotomic_periodicity: zero polynomial");
    if (!p.is_monic())
        return std::nullopt;
    IntPolynomial rest = p;
    unsigned long order = 1;
    const unsigned long bound = static_cast<unsigned long>(n == 0 ? p.degree() : std::min<long>(p.degree(), static_cast<long>(n)));
    // phi(d) >= sqrt(d/2), so no index beyond 2*bound^2 can qualify
    const unsigned long max_d = 2 * bound * bound + 2;
    for (unsigned long d = 1; d <= max_d && rest.degree() > 0; ++d) {
        const unsigned long phi = euler_phi(d);
        if (phi > bound || static_cast<long>(phi) > rest.degree())
            continue;
        const IntPolynomial phi_d = cyclotomic(static_cast<unsigned>(d));
        auto [q, r] = divmod_monic(rest, phi_d);
        if (!r.is_zero())
            continue;
        if (divmod_monic(q, phi_d).second.is_zero())
            return std::nullopt;  // repeated factor
        rest = std::move(q);
        order = std::lcm(order, d);
    }
    if (rest.degree() != 0)
        return std::nullopt;
    return order;
}

}  // namespace trivext
