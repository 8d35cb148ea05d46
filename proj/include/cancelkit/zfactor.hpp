#pragma once

#include <vector>

#include "cancelkit/rational.hpp"

/// Factorization of squarefree integer polynomials (Zassenhaus: factor modulo a
/// good prime, Hensel-lift, recombine). Polynomials are coefficient vectors,
/// lowest degree first, without trailing zeros.
namespace cancelkit::zfactor {

using ZPoly = std::vector<Integer>;

/// Irreducible factors over Z of a primitive squarefree `f` of degree >= 1.
/// Factors are primitive with positive leading coefficient, sorted by degree and
/// then coefficients; their product is f up to sign.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

}  // namespace cancelkit::zfactor
