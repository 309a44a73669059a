#pragma once

#include "steenspec/profile.hpp"
#include "steenspec/tensor_poly.hpp"

namespace steenspec {

/// xi_n^(2^k) as a polynomial, with xi_0 = 1.
Poly xi_power(int n, unsigned k);

/// Milnor coproduct of a polynomial in the xi's, extended multiplicatively
/// from Δ(xi_n) = Σ_{i=0}^{n} xi_{n-i}^(2^i) ⊗ xi_i. When a quotient is
/// given, both tensor factors are reduced modulo its profile relations.
/// Throws Error("not-xi") for any non-xi generator.
TensorPoly coproduct(const Poly& p, const QuotientHopf* quotient = nullptr);

/// Counit: the degree-zero part (0 or 1).
Poly counit(const Poly& p);

/// zeta_n, the conjugate of xi_n: zeta_0 = 1 and Σ_{i=0}^{n} xi_{n-i}^(2^i) zeta_i = 0.
/// Memoized; safe to call concurrently.
const Poly& conjugate(int n);

/// The antipode as an algebra map: xi_j -> zeta_j.
Poly antipode(const Poly& p);

/// True when every xi_k exponent is divisible by 2^k, i.e. the monomial lies
/// in F2[xi_1^2, xi_2^4, xi_3^8, ...].
bool in_double_subalgebra(const Monomial& m);

} // namespace steenspec
