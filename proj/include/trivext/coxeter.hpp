#pragma once

#include "trivext/algebra.hpp"
#include "trivext/polynomial.hpp"

#include <optional>

namespace trivext {

struct CoxeterData {
    ExactMatrix<Rationals> cartan;
    ExactMatrix<Rationals> coxeter;
    IntPolynomial char_polynomial;
    std::optional<unsigned long> period;
};

/// c = -U^{-1} U^T for a Cartan matrix U; throws SingularMatrixError when U is singular.
ExactMatrix<Rationals> coxeter_from_cartan(const ExactMatrix<Rationals>& cartan);

/*
  Multiplicative order of an integer matrix, or nullopt if no power is the
  identity. The squarefree part of the characteristic polynomial is the only
  possible minimal polynomial of a periodic matrix; it is tested for being a
  product of cyclotomics and the resulting order is confirmed by powering.
*/
std::optional<unsigned long> matrix_period(const ExactMatrix<Rationals>& m);

CoxeterData coxeter_data_from_cartan(const ExactMatrix<Rationals>& cartan);

template <class F>
ExactMatrix<Rationals> coxeter_matrix(const BasedAlgebra<F>& a)
{
    return coxeter_from_cartan(cartan_matrix(a));
}

template <class F>
IntPolynomial coxeter_polynomial(const BasedAlgebra<F>& a)
{
    return char_poly(coxeter_matrix(a));
}

template <class F>
std::optional<unsigned long> coxeter_periodicity(const BasedAlgebra<F>& a)
{
    return matrix_period(coxeter_matrix(a));
}

template <class F>
CoxeterData coxeter_data(const BasedAlgebra<F>& a)
{
    return coxeter_data_from_cartan(cartan_matrix(a));
}

}  // namespace trivext
