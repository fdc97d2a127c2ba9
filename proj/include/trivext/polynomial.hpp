#pragma once

#include "trivext/field.hpp"
#include "trivext/matrix.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace trivext {

/// Univariate polynomial with integer coefficients, lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(std::size_t degree, long coefficient = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    mpz_class coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
    const mpz_class& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    IntPolynomial derivative() const;
    std::string to_string(const std::string& var = "x") const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Quotient and remainder of a by a monic divisor.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& monic_divisor);

/// Monic gcd over Q, returned with integer coefficients (a and b monic integer polynomials).
IntPolynomial monic_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'): the product of the distinct irreducible factors of a monic p.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// The d-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned d);

unsigned long euler_phi(unsigned long n);

/// Characteristic polynomial det(xI - m) of a square integer matrix (Berkowitz, division free).
IntPolynomial char_poly(const std::vector<std::vector<mpz_class>>& m);
IntPolynomial char_poly(const ExactMatrix<Rationals>& m);

/*
  If p is a squarefree product of cyclotomic polynomials, returns the lcm of
  their indices, which is the multiplicative order of any integer matrix of
  size n whose minimal polynomial is p. Returns nullopt otherwise. Only
  indices d with phi(d) <= min(deg p, n) are tried.
*/
std::optional<unsigned long> cyclotomic_periodicity(const IntPolynomial& p, std::size_t n);

}  // namespace trivext
