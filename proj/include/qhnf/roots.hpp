#pragma once

#include <vector>

#include "qhnf/field.hpp"
#include "qhnf/upoly.hpp"

namespace qhnf {

/// Distinct roots of p that lie in the coefficient field itself, in canonical order.
///
/// Over Q this is the rational root test. Over Q(t) roots are found by lifting the
/// rational roots of a squarefree specialization t = t0 as power series in (t - t0)
/// and keeping the lifts that truncate to exact roots. No field extension is ever made.
template <ExactField F>
std::vector<F> roots_in_field(const UniPoly<F>& p);

template <>
std::vector<Rational> roots_in_field<Rational>(const UniPoly<Rational>& p);
template <>
std::vector<RatFunc> roots_in_field<RatFunc>(const UniPoly<RatFunc>& p);

}  // namespace qhnf
