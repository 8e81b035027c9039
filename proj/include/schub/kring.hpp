#pragma once

#include <string>
#include <vector>

#include "schub/poly.hpp"
#include "schub/weyl.hpp"

namespace schub {

// The character ring K_T = Z[e^lambda : lambda in the root lattice], with the
// Weyl action, the two Demazure operators, and the associated-graded
// degeneration down to the polynomial ring.

KElem k_one(int n);
KElem k_char(const Weight& lambda);          // e^lambda
KElem k_e_alpha(int i, int n, int sign);     // e^{+-alpha_i}
KElem k_one_minus_e_neg(int i, int n);       // 1 - e^{-alpha_i}

// Ring automorphism e^lambda -> e^{w lambda}.
KElem weyl_act_k(const WeylGroup& g, WeylElement w, const KElem& f);

// Ordinary Demazure operator (f - r_i f) / (1 - e^{-alpha_i}).
KElem demazure(const WeylGroup& g, int i, const KElem& f);

// Isobaric Demazure operator (f - e^{-alpha_i} r_i f) / (1 - e^{-alpha_i}).
KElem isobaric_demazure(const WeylGroup& g, int i, const KElem& f);

// Exact quotient f / (1 - e^{-alpha_i}); zero-remainder assertion built in.
KElem divide_by_one_minus_e_neg(int i, const KElem& f);

// Truncated exponential substitution e^lambda -> sum_{k<=d} lambda^k / k!,
// returning the homogeneous components of degrees 0..d.
std::vector<QHPoly> exp_truncation(const KElem& f, int d);

// The degree-d component of the substitution above; components below d are
// the caller's to interpret (they vanish when f lies in the d-th filtration
// layer). d < 0 returns zero.
QHPoly associated_graded(const KElem& f, int d);

// Display "c*e[l1,...,ln] + ...", largest exponent vector first.
std::string to_string(const KElem& f);

}  // namespace schub
