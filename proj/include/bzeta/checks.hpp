#pragma once

#include "bzeta/polylog.hpp"
#include "bzeta/rational.hpp"

#include <vector>

namespace bzeta {

/// Primes <= n by trial division. Desk scale; no sieve needed.
std::vector<int> primes_up_to(int n);

/// sum of 1/p over primes p with (p-1) | m. Adding this to B_m gives an
/// exact integer for every even m (the von Staudt-Clausen fingerprint),
/// which makes it a formula-independent correctness check.
BigRational von_staudt_clausen_correction(int m);

/// The operator x d/dx applied to N(x)/(1+x)^e:
///   x [N'(x)(1+x) - e N(x)] / (1+x)^{e+1}.
/// Iterating it from -x/(1+x) regenerates Li_{-r}(-x) one order at a time,
/// independently of the table-based closed forms.
RationalFunction x_ddx(const RationalFunction& f);

}  // namespace bzeta
