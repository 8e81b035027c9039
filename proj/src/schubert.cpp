#include "schub/schubert.hpp"

#include <bit>
#include <sstream>

namespace schub {

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::H: return "H";
    case Theory::KIdeal: return "K-ideal";
    case Theory::KStructure: return "K-structure";
  }
  return "?";
}

std::string to_string(const RingValue& v) {
  return v.theory == Theory::H ? to_string(v.h) : to_string(v.k);
}

namespace {

bool bit(Mask m, size_t k) { return (m >> k) & 1u; }

// One summand of the cohomology formula: the position-q factor is
// alpha_q^[q in P and R] del_q^[q notin P or R] r_q (DDR), or the variant
// with r before -del (RDD); composed over the word and applied to 1.
HPoly h_term(const WeylGroup& g, const Word& q, Mask p, Mask r,
             HVariant variant) {
  int n = g.rank();
  HPoly val = h_one(n);
  for (size_t k = q.size(); k-- > 0;) {
    int i = q[k];
    bool in_both = bit(p, k) && bit(r, k);
    bool in_neither = !bit(p, k) && !bit(r, k);
    if (variant == HVariant::DDR) {
      val = weyl_act_h(g, g.generator(i), val);
      if (in_neither) val = divided_difference(g, i, val);
    } else {
      if (in_neither) val = -divided_difference(g, i, val);
      val = weyl_act_h(g, g.generator(i), val);
    }
    if (in_both) val *= h_alpha(i, n);
  }
  return val;
}

// One summand of the a / a-circle formulas (without the term sign).
KElem k_term(const WeylGroup& g, const Word& q, Mask p, Mask r, Theory basis) {
  int n = g.rank();
  KElem val = k_one(n);
  for (size_t k = q.size(); k-- > 0;) {
    int i = q[k];
    bool in_both = bit(p, k) && bit(r, k);
    bool in_neither = !bit(p, k) && !bit(r, k);
    if (in_neither) {
      val = basis == Theory::KIdeal ? -demazure(g, i, val)
                                    : -isobaric_demazure(g, i, val);
    }
    val = weyl_act_k(g, g.generator(i), val);
    if (in_both) val *= k_one_minus_e_neg(i, n);
    if (basis == Theory::KIdeal) {
      if (in_neither) val *= k_e_alpha(i, n, +1);
    } else {
      if (!in_both) val *= k_e_alpha(i, n, -1);
    }
  }
  return val;
}

Word default_word(WeylElement w) { return w.canonical_word(); }

void check_reduced_word_for(const WeylGroup& g, const Word& q, WeylElement w) {
  WeylElement x = g.element_of_word(q);
  SCHUB_REQUIRE(x == w && static_cast<int>(q.size()) == w.length(),
                "supplied word is not a reduced word for w");
}

void check_demazure_word_for(const WeylGroup& g, const Word& q, WeylElement w) {
  SCHUB_REQUIRE(g.demazure_product(q) == w,
                "supplied word does not have Demazure product w");
}

}  // namespace

std::map<WeylElement, std::vector<Mask>> subwords_by_product(
    const WeylGroup& g, const Word& word, SubwordMode mode) {
  SCHUB_REQUIRE(word.size() <= 31, "word too long for bitmask subwords");
  std::map<WeylElement, std::vector<Mask>> out;
  size_t total = size_t(1) << word.size();
  for (Mask m = 0; m < total; ++m) {
    if (mode == SubwordMode::ReducedOrdinary) {
      WeylElement x = g.identity();
      bool reduced = true;
      for (size_t k = 0; k < word.size() && reduced; ++k) {
        if (!bit(m, k)) continue;
        WeylElement y = g.right_mul(x, word[k]);
        if (y.length() != x.length() + 1) reduced = false;
        x = y;
      }
      if (reduced) out[x].push_back(m);
    } else {
      WeylElement x = g.identity();
      for (size_t k = 0; k < word.size(); ++k) {
        if (!bit(m, k)) continue;
        WeylElement y = g.right_mul(x, word[k]);
        if (y.length() > x.length()) x = y;
      }
      out[x].push_back(m);
    }
  }
  return out;
}

HPoly structure_constant_H(const WeylGroup& g, WeylElement u, WeylElement v,
                           WeylElement w, HVariant variant, const Word* word) {
  int n = g.rank();
  Word q = word ? *word : default_word(w);
  check_reduced_word_for(g, q, w);
  if (!bruhat_leq(u, w) || !bruhat_leq(v, w)) return HPoly(n);
  auto ps = subwords_with_product(g, q, u, SubwordMode::ReducedOrdinary);
  auto rs = subwords_with_product(g, q, v, SubwordMode::ReducedOrdinary);
  HPoly total(n);
  for (Mask p : ps)
    for (Mask r : rs) total += h_term(g, q, p, r, variant);
  return total;
}

KElem structure_constant_K(const WeylGroup& g, WeylElement u, WeylElement v,
                           WeylElement w, Theory basis, const Word* word) {
  SCHUB_REQUIRE(basis != Theory::H, "K structure constant needs a K basis");
  int n = g.rank();
  Word q = word ? *word : default_word(w);
  check_demazure_word_for(g, q, w);
  if (!bruhat_leq(u, w) || !bruhat_leq(v, w)) return KElem(n);
  auto ps = subwords_with_product(g, q, u, SubwordMode::Demazure);
  auto rs = subwords_with_product(g, q, v, SubwordMode::Demazure);
  KElem total(n);
  for (Mask p : ps) {
    int psz = std::popcount(p);
    for (Mask r : rs) {
      int rsz = std::popcount(r);
      KElem term = k_term(g, q, p, r, basis);
      if (basis == Theory::KIdeal) {
        // term sign (-1)^{|Q|-|P|-|R|}
        if ((static_cast<int>(q.size()) - psz - rsz) & 1) term = -term;
      }
      total += term;
    }
  }
  if (basis == Theory::KIdeal) {
    // global prefactor (-1)^{l(u)+l(v)-l(w)}
    if ((u.length() + v.length() - w.length()) & 1) total = -total;
  }
  return total;
}

HPoly restriction_H(const WeylGroup& g, WeylElement v, WeylElement w,
                    const Word* word) {
  int n = g.rank();
  Word q = word ? *word : default_word(w);
  check_reduced_word_for(g, q, w);
  if (!bruhat_leq(v, w)) return HPoly(n);
  auto rs = subwords_with_product(g, q, v, SubwordMode::ReducedOrdinary);
  HPoly total(n);
  for (Mask r : rs) {
    HPoly val = h_one(n);
    for (size_t k = q.size(); k-- > 0;) {
      int i = q[k];
      val = weyl_act_h(g, g.generator(i), val);
      if (bit(r, k)) val *= h_alpha(i, n);
    }
    total += val;
  }
  return total;
}

KElem restriction_K(const WeylGroup& g, WeylElement v, WeylElement w,
                    Theory basis, const Word* word) {
  SCHUB_REQUIRE(basis != Theory::H, "K restriction needs a K basis");
  int n = g.rank();
  Word q = word ? *word : default_word(w);
  check_demazure_word_for(g, q, w);
  if (!bruhat_leq(v, w)) return KElem(n);
  auto rs = subwords_with_product(g, q, v, SubwordMode::Demazure);
  KElem total(n);
  for (Mask r : rs) {
    KElem val = k_one(n);
    for (size_t k = q.size(); k-- > 0;) {
      int i = q[k];
      val = weyl_act_k(g, g.generator(i), val);
      if (bit(r, k)) val *= k_one_minus_e_neg(i, n);
      else if (basis == Theory::KStructure) val *= k_e_alpha(i, n, -1);
    }
    if (basis == Theory::KIdeal) {
      if ((std::popcount(r) - v.length()) & 1) val = -val;  // (-1)^{|R|-l(v)}
    }
    total += val;
  }
  return total;
}

const HPoly& CRecursion::get(WeylElement u, WeylElement v, WeylElement w) {
  auto key = std::make_tuple(u.id(), v.id(), w.id());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int n = g_.rank();
  HPoly val(n);
  if (!bruhat_leq(u, w) || !bruhat_leq(v, w)) {
    // unsupported triple
  } else if (w.is_identity()) {
    if (u.is_identity() && v.is_identity()) val = h_one(n);
  } else {
    // Peel the first letter a of a reduced word for w. Each lower structure
    // constant enters through r_a: the four summands come from the four
    // terms of the length-a structure operator, applied to 1, and the
    // reflection does not drop (lower values are rarely r_a-invariant).
    int a = w.canonical_word()[0];  // left descent of w
    WeylElement ra = g_.generator(a);
    WeylElement wb = g_.left_mul(a, w);
    WeylElement ub = g_.left_mul(a, u);
    WeylElement vb = g_.left_mul(a, v);
    bool udown = ub.length() < u.length();
    bool vdown = vb.length() < v.length();
    val = divided_difference(g_, a, weyl_act_h(g_, ra, get(u, v, wb)));
    if (udown) val += weyl_act_h(g_, ra, get(ub, v, wb));
    if (vdown) val += weyl_act_h(g_, ra, get(u, vb, wb));
    if (udown && vdown)
      val += h_alpha(a, n) * weyl_act_h(g_, ra, get(ub, vb, wb));
  }
  return memo_.emplace(key, std::move(val)).first->second;
}

HPoly recursion_c(const WeylGroup& g, WeylElement u, WeylElement v,
                  WeylElement w) {
  CRecursion rec(g);
  return rec.get(u, v, w);
}

HPoly recursion_c_with(const WeylGroup& g, WeylElement u, WeylElement v,
                       WeylElement w, int alpha) {
  WeylElement wb = g.left_mul(alpha, w);
  SCHUB_REQUIRE(wb.length() == w.length() - 1,
                "r_alpha w must be shorter than w");
  int n = g.rank();
  if (!bruhat_leq(u, w) || !bruhat_leq(v, w)) return HPoly(n);
  CRecursion rec(g);
  WeylElement ra = g.generator(alpha);
  WeylElement ub = g.left_mul(alpha, u);
  WeylElement vb = g.left_mul(alpha, v);
  bool udown = ub.length() < u.length();
  bool vdown = vb.length() < v.length();
  HPoly val =
      divided_difference(g, alpha, weyl_act_h(g, ra, rec.get(u, v, wb)));
  if (udown) val += weyl_act_h(g, ra, rec.get(ub, v, wb));
  if (vdown) val += weyl_act_h(g, ra, rec.get(u, vb, wb));
  if (udown && vdown)
    val += h_alpha(alpha, n) * weyl_act_h(g, ra, rec.get(ub, vb, wb));
  return val;
}

namespace {

// Reindex masks through J and shrink the ambient word to J's positions.
struct BSAmbient {
  Word word;
  Mask r = 0, s = 0;
};

std::optional<BSAmbient> bs_reindex(const Word& q, Mask r, Mask s, Mask j) {
  if (((r | s) & ~j) != 0) return std::nullopt;  // vanishing (J must contain R,S)
  BSAmbient out;
  int pos = 0;
  for (size_t k = 0; k < q.size(); ++k) {
    if (!bit(j, k)) continue;
    out.word.letters.push_back(q[k]);
    if (bit(r, k)) out.r |= Mask(1) << pos;
    if (bit(s, k)) out.s |= Mask(1) << pos;
    ++pos;
  }
  return out;
}

}  // namespace

RingValue bs_structure_constant(const WeylGroup& g, const Word& word, Mask r,
                                Mask s, Mask j, Theory theory) {
  SCHUB_REQUIRE(word.size() <= 31, "word too long");
  int n = g.rank();
  RingValue out;
  out.theory = theory;
  out.h = HPoly(n);
  out.k = KElem(n);
  auto amb = bs_reindex(word, r, s, j);
  if (!amb) return out;
  if (theory == Theory::H) {
    out.h = h_term(g, amb->word, amb->r, amb->s, HVariant::DDR);
  } else {
    out.k = k_term(g, amb->word, amb->r, amb->s, theory);
  }
  return out;
}

RingValue bs_restriction(const WeylGroup& g, const Word& word, Mask j, Mask l,
                         Theory theory) {
  SCHUB_REQUIRE(word.size() <= 31, "word too long");
  int n = g.rank();
  RingValue out;
  out.theory = theory;
  out.h = HPoly(n);
  out.k = KElem(n);
  if ((j & ~l) != 0) return out;  // zero when J is not contained in L
  auto positions = mask_positions(l, word.size());
  if (theory == Theory::H) {
    HPoly val = h_one(n);
    for (size_t t = positions.size(); t-- > 0;) {
      int k = positions[t];
      int i = word[k];
      val = weyl_act_h(g, g.generator(i), val);
      if (bit(j, k)) val *= h_alpha(i, n);
    }
    out.h = val;
  } else {
    KElem val = k_one(n);
    for (size_t t = positions.size(); t-- > 0;) {
      int k = positions[t];
      int i = word[k];
      val = weyl_act_k(g, g.generator(i), val);
      if (bit(j, k)) val *= k_one_minus_e_neg(i, n);
      else if (theory == Theory::KStructure) val *= k_e_alpha(i, n, -1);
    }
    out.k = val;
  }
  return out;
}

}  // namespace schub
