#include "trivext/coxeter.hpp"

namespace trivext {

ExactMatrix<Rationals> coxeter_from_cartan(const ExactMatrix<Rationals>& cartan)
{
    return -(cartan.inverse() * cartan.transpose());
}

namespace {

/// det(xI - m) for a rational matrix, or nullopt when it has non-integer coefficients.
std::optional<IntPolynomial> integral_char_poly(const ExactMatrix<Rationals>& m)
{
    const std::size_t n = m.rows();
    mpz_class den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            den = lcm(den, m(i, j).to_mpq().get_den());
    if (den == 1)
        return char_poly(m);
    // det(D x I - D m) = D^n det(xI - m)
    std::vector<std::vector<mpz_class>> scaled(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class q = m(i, j).to_mpq() * den;
            scaled[i][j] = q.get_num();
        }
    const IntPolynomial p = char_poly(scaled);
    std::vector<mpz_class> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        mpz_class dk, dn;
        mpz_pow_ui(dk.get_mpz_t(), den.get_mpz_t(), k);
        mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(), n);
        const mpq_class c(p.coefficient(k) * dk, dn);
        mpq_class r = c;
        r.canonicalize();
        if (r.get_den() != 1)
            return std::nullopt;
        coeffs[k] = r.get_num();
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

std::optional<unsigned long> matrix_period(const ExactMatrix<Rationals>& m)
{
    if (!m.is_square())
        throw std::invalid_argument("matrix_period: not square");
    if (m.rows() == 0)
        return 1;
    // a matrix of finite order has a product of cyclotomics as characteristic polynomial
    const auto p = integral_char_poly(m);
    if (!p)
        return std::nullopt;
    const auto n = cyclotomic_periodicity(squarefree_part(*p), m.rows());
    if (!n || !m.pow(*n).is_identity())
        return std::nullopt;
    return n;
}

CoxeterData coxeter_data_from_cartan(const ExactMatrix<Rationals>& cartan)
{
    CoxeterData d;
    d.cartan = cartan;
    d.coxeter = coxeter_from_cartan(cartan);
    d.char_polynomial = char_poly(d.coxeter);  // throws on non-integral entries
    d.period = matrix_period(d.coxeter);
    return d;
}

}  // namespace trivext
