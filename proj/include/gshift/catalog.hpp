// catalog.hpp -- small bundled presentations and g-functions used by tests and the CLI.

#ifndef GSHIFT_CATALOG_HPP
#define GSHIFT_CATALOG_HPP

#include "gshift/gfunction.hpp"
#include "gshift/presentation.hpp"
#include "gshift/rational.hpp"

namespace gshift::catalog {

/// One state "*" with a loop per symbol; symbols "0", "1", ... up to k-1.
SoficPresentation full_shift(std::size_t k = 2);
/// States A, B: A-0->A, A-1->B, B-0->A.
SoficPresentation golden_mean();
/// States E, O: E-0->E, E-1->O, O-1->E.
SoficPresentation even_shift();
/// A sofic shift without property (D): p-a->p, p-b->p, r-a->r, r-c->s, s-b->p.
SoficPresentation reducible_no_d();

/// Bernoulli measure on {0,1} with P(1) = p as a g-function on the full shift.
GFunction bernoulli(const Rational& p);
/// Golden mean with rows A: (1/2, 1/2), B: (1, -).
GFunction golden_mean_g();
/// Even shift with rows E: (1/2, 1/2), O: (-, 1).
GFunction even_shift_g();

} // namespace gshift::catalog

#endif // GSHIFT_CATALOG_HPP
