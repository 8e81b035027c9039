#pragma once

#include <string>

#include "schub/poly.hpp"
#include "schub/weyl.hpp"

namespace schub {

// The polynomial ring Z[alpha_1..alpha_n] in simple-root variables, with the
// Weyl action by substitution and the divided difference operators.

HPoly h_alpha(int i, int n);                // the variable alpha_i
HPoly h_linear(const Weight& lambda);       // sum lambda_i alpha_i
HPoly h_one(int n);

// Ring automorphism alpha_j -> w(alpha_j).
HPoly weyl_act_h(const WeylGroup& g, WeylElement w, const HPoly& p);

// (p - r_i p) / alpha_i. The numerator is always divisible; an inexact
// division signals an arithmetic bug, never user error.
HPoly divided_difference(const WeylGroup& g, int i, const HPoly& p);

// Degree-lex-sorted display, e.g. "a1^2*a2 + 2*a3".
std::string to_string(const HPoly& p);
std::string to_string(const QHPoly& p);

QHPoly to_rational(const HPoly& p);

}  // namespace schub
