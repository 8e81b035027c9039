#pragma once

#include <map>
#include <optional>
#include <string>

#include "schub/hpoly.hpp"
#include "schub/kring.hpp"
#include "schub/weyl.hpp"

namespace schub {

// Which (K-)cohomology theory a value lives in. For structure constants,
// KIdeal expands products in the ideal-sheaf dual basis and KStructure in
// the structure-sheaf dual basis; on Bott-Samelson manifolds the same tags
// select the b / d / d-circle families and the T / tau / tau-circle
// restrictions.
enum class Theory { H, KIdeal, KStructure };

std::string theory_name(Theory t);

struct RingValue {
  Theory theory = Theory::H;
  HPoly h;
  KElem k;

  bool is_zero() const { return theory == Theory::H ? h.is_zero() : k.is_zero(); }
  bool operator==(const RingValue& o) const {
    return theory == o.theory && h == o.h && k == o.k;
  }
};

std::string to_string(const RingValue& v);

// The two equivalent operator placements of the cohomology formula:
// per position, DDR multiplies/differentiates before reflecting
// (alpha^[...] del^[...] r) and RDD reflects before (-del)
// (alpha^[...] r (-del)^[...]).
enum class HVariant { DDR, RDD };

// Subwords of `word` grouped by product, for batch structure-constant runs.
std::map<WeylElement, std::vector<Mask>> subwords_by_product(
    const WeylGroup& g, const Word& word, SubwordMode mode);

// Cohomology structure constant c_{uv}^w as a sum over pairs of reduced
// subwords of a reduced word for w (defaults to the canonical word).
HPoly structure_constant_H(const WeylGroup& g, WeylElement u, WeylElement v,
                           WeylElement w, HVariant variant = HVariant::DDR,
                           const Word* word = nullptr);

// K-theory structure constant a_{uv}^w (KIdeal) or a^circ_{uv}^w
// (KStructure) as a sum over pairs of subwords with Demazure products u, v
// of any word whose Demazure product is w (defaults to the canonical
// reduced word).
KElem structure_constant_K(const WeylGroup& g, WeylElement u, WeylElement v,
                           WeylElement w, Theory basis,
                           const Word* word = nullptr);

// Point restrictions: S_v|_w, xi_v|_w (KIdeal), xi-circle_v|_w (KStructure).
HPoly restriction_H(const WeylGroup& g, WeylElement v, WeylElement w,
                    const Word* word = nullptr);
KElem restriction_K(const WeylGroup& g, WeylElement v, WeylElement w,
                    Theory basis, const Word* word = nullptr);

// Length-lowering recursion for c_{uv}^w; bottoms out at c_{uv}^e.
// The explicit-reflection form takes the first step with r_alpha
// (requires l(r_alpha w) = l(w) - 1) and recurses canonically below.
HPoly recursion_c(const WeylGroup& g, WeylElement u, WeylElement v,
                  WeylElement w);
HPoly recursion_c_with(const WeylGroup& g, WeylElement u, WeylElement v,
                       WeylElement w, int alpha);

// Memoized recursion context for batch runs.
class CRecursion {
 public:
  explicit CRecursion(const WeylGroup& g) : g_(g) {}
  const HPoly& get(WeylElement u, WeylElement v, WeylElement w);

 private:
  const WeylGroup& g_;
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, HPoly> memo_;
};

// Bott-Samelson structure constants b/d/d-circle for subwords R, S, J of the
// ambient word; zero unless J contains R and S, else the single product
// formula over J as ambient word.
RingValue bs_structure_constant(const WeylGroup& g, const Word& word, Mask r,
                                Mask s, Mask j, Theory theory);

// Restrictions of the dual classes T_J / tau_J / tau-circle_J to the fixed
// point L; zero unless J is contained in L.
RingValue bs_restriction(const WeylGroup& g, const Word& word, Mask j, Mask l,
                         Theory theory);

}  // namespace schub
