#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>

#include "schub/schubert.hpp"

namespace schub {

// Independent verification paths: a type-A double-Schubert restriction
// engine, a fixed-point localization solver for structure constants, and an
// exact-rational-sampling evaluator for Bott-Samelson pairings.

// ---- Type A permutations -------------------------------------------------

// One-line notation [w(1),...,w(n)], 1-based values. The group must be the
// built-in A_{n-1}.
WeylElement element_from_permutation(const WeylGroup& g,
                                     const std::vector<int>& one_line);
std::vector<int> permutation_of_element(const WeylGroup& g, WeylElement w);

// ---- Double Schubert polynomials ----------------------------------------

// Z[x_1..x_n, y_1..y_n]: variables 0..n-1 are x, n..2n-1 are y.
XYPoly xy_variable(int index, int n2);
XYPoly double_schubert(const std::vector<int>& v, int n);

// Which permutation enters the substitution x_i -> y_{sigma(i)}. The
// realized convention is calibrated against restriction_H on S_3/S_4 and
// recorded in docs/conventions.md.
enum class DSConvention { Direct, Inverse };

// Substitute x at the fixed point of w, then rewrite in simple-root
// variables; the rewrite is verified exact (the value lies in the
// root-lattice subring) and throws InternalError otherwise.
HPoly oracle_restriction_H(const WeylGroup& g, const std::vector<int>& v,
                           const std::vector<int>& w,
                           DSConvention conv = DSConvention::Direct);

// ---- Localization solver -------------------------------------------------

// Memoized point restrictions S_v|_x / xi_v|_x / xi-circle_v|_x.
// Synchronized, so one table can back a batch of parallel solves.
class RestrictionTable {
 public:
  RestrictionTable(const WeylGroup& g, Theory theory)
      : g_(g), theory_(theory) {}
  const RingValue& get(WeylElement v, WeylElement x);

 private:
  const WeylGroup& g_;
  Theory theory_;
  std::mutex mu_;
  std::map<std::pair<uint32_t, uint32_t>, RingValue> memo_;
};

// Solves S_u|_x S_v|_x = sum_w m_w S_w|_x over all fixed points x of a
// finite group by triangular elimination in length-increasing order. The
// pivots S_w|_w are nonzero; the divisions are exact. A shared table may be
// passed in to reuse restrictions across solves.
std::map<WeylElement, RingValue> localization_solve(
    const WeylGroup& g, WeylElement u, WeylElement v, Theory theory,
    RestrictionTable* shared_table = nullptr);

// ---- Rational sampling and the fixed-point pairing -----------------------

struct RationalSample {
  std::vector<Rat> char_value;  // value assigned to e^{alpha_i}
};

// Deterministic sample stream: e^{alpha_i} <- p/q with 2 <= p,q <= 97 and
// p != q. Rejection of samples hitting denominator zeros is the caller's
// loop (evaluators return nullopt on a zero).
class SampleStream {
 public:
  SampleStream(int rank, uint64_t seed) : rank_(rank), rng_(seed) {}
  RationalSample next();

 private:
  int rank_;
  std::mt19937_64 rng_;
};

Rat eval_at_sample(const KElem& f, const RationalSample& s);

enum class Sheaf { Structure, Ideal };

// Fixed-point pairing of a class gamma (given by restrictions J -> gamma|_J)
// against [O_{BS^R}] or [I_{BS^R}], evaluated at a rational sample. Returns
// nullopt when a tangent-weight denominator vanishes at the sample.
std::optional<Rat> woods_hole_pair(const WeylGroup& g, const Word& q,
                                   const std::map<Mask, KElem>& gamma, Mask r,
                                   const RationalSample& s, Sheaf sheaf);

// tau_V (KIdeal) or tau-circle_V (KStructure) restrictions J -> value over
// all J, for feeding woods_hole_pair.
std::map<Mask, KElem> bs_restriction_family(const WeylGroup& g, const Word& q,
                                            Mask v, Theory theory);

// Expands a class given by sampled point values in the tau / tau-circle
// basis by solving against the inclusion-triangular restriction matrix
// evaluated at the sample. Returns nullopt if a diagonal entry vanishes.
std::optional<std::map<Mask, Rat>> bs_expand_at_sample(
    const WeylGroup& g, const Word& q, Theory theory,
    const std::function<Rat(Mask)>& point_value, const RationalSample& s);

}  // namespace schub
