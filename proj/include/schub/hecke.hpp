#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "schub/hpoly.hpp"
#include "schub/kring.hpp"
#include "schub/weyl.hpp"

namespace schub {

// Which smash-product algebra an operator lives in, and how the abstract
// zero-Hecke generator acts when the operator is applied to ring elements:
//   NilH       coefficients in Z[alpha], nil basis del_w, del acts as the
//              divided difference;
//   DemazureK  coefficients in K_T, zero-Hecke basis, generator acts as the
//              ordinary Demazure operator, r modeled as 1-(1-e^{-a})D;
//   IsobaricK  same algebra, generator acts as the isobaric Demazure
//              operator, r modeled as e^{a}(1-(1-e^{-a})D).
enum class HeckeFlavor { NilH, DemazureK, IsobaricK };

enum class OpKind { J, Xi, XiCirc, L, Lambda, LambdaCirc };
enum class SquareClass { Zero, Idempotent, Involution, Other };

const char* op_kind_name(OpKind k);
const char* square_class_name(SquareClass c);

struct NilRules {
  using Ring = HPoly;
  static constexpr bool kNil = true;
  static Ring leibniz(const WeylGroup& g, int i, const Ring& q) {
    return divided_difference(g, i, q);
  }
  static Ring reflect(const WeylGroup& g, int i, const Ring& q) {
    return weyl_act_h(g, g.generator(i), q);
  }
  static Ring one(int n) { return h_one(n); }
};

struct ZeroRules {
  using Ring = KElem;
  static constexpr bool kNil = false;
  // Moving a coefficient across the zero-Hecke generator produces the same
  // constant term for both actions: D(qf) = (Dq)f + (rq)(Df) and
  // Dbar(qf) = (Dq)f + (rq)(Dbar f).
  static Ring leibniz(const WeylGroup& g, int i, const Ring& q) {
    return demazure(g, i, q);
  }
  static Ring reflect(const WeylGroup& g, int i, const Ring& q) {
    return weyl_act_k(g, g.generator(i), q);
  }
  static Ring one(int n) { return k_one(n); }
};

// Basis product with a generator on the left/right. Nil flavor returns
// nullopt when the product vanishes; zero-Hecke absorbs instead.
template <bool Nil>
std::optional<WeylElement> hecke_left_gen(const WeylGroup& g, int i,
                                          WeylElement z) {
  WeylElement y = g.left_mul(i, z);
  if (y.length() > z.length()) return y;
  if constexpr (Nil) return std::nullopt;
  return z;
}

template <bool Nil>
std::optional<WeylElement> hecke_right_gen(const WeylGroup& g, WeylElement z,
                                           int i) {
  WeylElement y = g.right_mul(z, i);
  if (y.length() > z.length()) return y;
  if constexpr (Nil) return std::nullopt;
  return z;
}

// Element of (coefficient ring)[basis] (x) Z[basis]^{plain_slots} in normal
// form: a finite map from basis-element tuples to left coefficients.
// plain_slots = 0 gives the plain smash product, 1 the two-slot operators
// (J, Xi families), 2 the structure operators (L, Lambda families).
template <class Rules>
class TensorOpT {
 public:
  using Ring = typename Rules::Ring;
  struct Key {
    uint32_t a = 0;
    std::array<uint32_t, 2> plain{0, 0};
    bool operator<(const Key& o) const {
      if (a != o.a) return a < o.a;
      return plain < o.plain;
    }
    bool operator==(const Key& o) const { return a == o.a && plain == o.plain; }
  };
  using Terms = std::map<Key, Ring>;

  TensorOpT() : group_(nullptr), slots_(0), flavor_(HeckeFlavor::NilH) {}
  TensorOpT(const WeylGroup* g, int plain_slots, HeckeFlavor flavor)
      : group_(g), slots_(plain_slots), flavor_(flavor) {
    SCHUB_REQUIRE(plain_slots >= 0 && plain_slots <= 2, "bad slot count");
  }

  static TensorOpT identity(const WeylGroup& g, int plain_slots,
                            HeckeFlavor flavor) {
    TensorOpT t(&g, plain_slots, flavor);
    std::vector<WeylElement> plain(plain_slots, g.identity());
    t.add_term_v(g.identity(), plain, Rules::one(g.rank()));
    return t;
  }

  const WeylGroup& group() const { return *group_; }
  int plain_slots() const { return slots_; }
  HeckeFlavor flavor() const { return flavor_; }
  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(WeylElement a, std::initializer_list<WeylElement> plain,
                const Ring& c) {
    std::vector<WeylElement> p(plain);
    add_term_v(a, p, c);
  }
  void add_term_v(WeylElement a, const std::vector<WeylElement>& plain,
                  const Ring& c) {
    SCHUB_REQUIRE(static_cast<int>(plain.size()) == slots_,
                  "plain slot arity mismatch");
    if (c.is_zero()) return;
    Key k;
    k.a = a.id();
    for (size_t t = 0; t < plain.size(); ++t) k.plain[t] = plain[t].id();
    accumulate(k, c);
  }

  TensorOpT& operator+=(const TensorOpT& o) {
    check_shape(o);
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
  }
  TensorOpT operator+(const TensorOpT& o) const {
    TensorOpT r = *this;
    r += o;
    return r;
  }
  TensorOpT operator-() const {
    TensorOpT r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  TensorOpT operator-(const TensorOpT& o) const { return *this + (-o); }

  TensorOpT scaled(const Ring& s) const {
    TensorOpT r(group_, slots_, flavor_);
    for (const auto& [k, c] : terms_) r.accumulate(k, c * s);
    return r;
  }

  // Smash-product multiplication: coefficients move left through basis
  // elements letter by letter with the twisted Leibniz rule, then the basis
  // elements multiply by the nil / zero-Hecke rule slotwise.
  TensorOpT operator*(const TensorOpT& o) const {
    check_shape(o);
    const WeylGroup& g = *group_;
    TensorOpT out(group_, slots_, flavor_);
    for (const auto& [ka, ca] : terms_) {
      WeylElement xa(element(ka.a));
      for (const auto& [kb, cb] : o.terms_) {
        // slot 1: B_{xa} . cb = sum m (x) B_z
        for (const auto& [m, z] : commute(g, xa, cb)) {
          std::optional<WeylElement> slot1 =
              fold_right(g, z, element(kb.a));
          if (!slot1) continue;
          Key k;
          k.a = slot1->id();
          bool alive = true;
          for (int t = 0; t < slots_; ++t) {
            std::optional<WeylElement> pt =
                fold_right(g, element(ka.plain[t]), element(kb.plain[t]));
            if (!pt) {
              alive = false;
              break;
            }
            k.plain[t] = pt->id();
          }
          if (!alive) continue;
          out.accumulate(k, ca * m);
        }
      }
    }
    return out;
  }

  bool operator==(const TensorOpT& o) const {
    return group_ == o.group_ && slots_ == o.slots_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorOpT& o) const { return !(*this == o); }

  // Applies the basis element of `a` to f with the flavor's action.
  Ring act_basis(WeylElement a, const Ring& f) const {
    const WeylGroup& g = *group_;
    Ring v = f;
    const Word& word = a.canonical_word();
    for (size_t k = word.size(); k-- > 0;) v = act_gen(g, word[k], v);
    return v;
  }

  // The slot-1 coefficient at plain key (u[,v]), applied to the constant 1.
  Ring coefficient_applied_to_one(const std::vector<WeylElement>& plain) const {
    SCHUB_REQUIRE(static_cast<int>(plain.size()) == slots_,
                  "plain slot arity mismatch");
    const WeylGroup& g = *group_;
    Ring total(g.rank());
    Ring one = Rules::one(g.rank());
    for (const auto& [k, c] : terms_) {
      bool match = true;
      for (int t = 0; t < slots_; ++t)
        if (k.plain[t] != plain[t].id()) match = false;
      if (!match) continue;
      total += c * act_basis(element(k.a), one);
    }
    return total;
  }

  // Slotwise action on a pure tensor; the result is a formal sum of pure
  // tensors (one per stored term).
  std::vector<std::vector<Ring>> apply(const std::vector<Ring>& input) const {
    SCHUB_REQUIRE(static_cast<int>(input.size()) == slots_ + 1,
                  "input arity mismatch");
    std::vector<std::vector<Ring>> out;
    for (const auto& [k, c] : terms_) {
      std::vector<Ring> tensor;
      tensor.push_back(c * act_basis(element(k.a), input[0]));
      for (int t = 0; t < slots_; ++t)
        tensor.push_back(act_basis(element(k.plain[t]), input[t + 1]));
      out.push_back(std::move(tensor));
    }
    return out;
  }

  WeylElement element(uint32_t id) const { return elem_handle(group_, id); }

 private:
  static WeylElement elem_handle(const WeylGroup* g, uint32_t id);

  void check_shape(const TensorOpT& o) const {
    SCHUB_REQUIRE(group_ == o.group_, "operators over different groups");
    SCHUB_REQUIRE(slots_ == o.slots_, "operator slot arity mismatch");
    SCHUB_REQUIRE(flavor_ == o.flavor_, "operator flavor mismatch");
  }

  void accumulate(const Key& k, const Ring& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // B_x . q = sum m (x) B_z over the canonical word of x.
  static std::vector<std::pair<Ring, WeylElement>> commute(const WeylGroup& g,
                                                           WeylElement x,
                                                           const Ring& q) {
    std::map<uint32_t, Ring> acc;
    acc.emplace(g.identity().id(), q);
    const Word& word = x.canonical_word();
    for (size_t k = word.size(); k-- > 0;) {
      int i = word[k];
      std::map<uint32_t, Ring> next;
      auto add = [&](uint32_t id, Ring val) {
        if (val.is_zero()) return;
        auto it = next.find(id);
        if (it == next.end()) {
          next.emplace(id, std::move(val));
        } else {
          it->second += val;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      for (const auto& [zid, m] : acc) {
        WeylElement z = elem_handle(&g, zid);
        add(zid, Rules::leibniz(g, i, m));
        if (auto zl = hecke_left_gen<Rules::kNil>(g, i, z))
          add(zl->id(), Rules::reflect(g, i, m));
      }
      acc = std::move(next);
    }
    std::vector<std::pair<Ring, WeylElement>> out;
    out.reserve(acc.size());
    for (auto& [zid, m] : acc) out.emplace_back(std::move(m), elem_handle(&g, zid));
    return out;
  }

  static std::optional<WeylElement> fold_right(const WeylGroup& g,
                                               WeylElement z, WeylElement y) {
    for (int letter : y.canonical_word().letters) {
      auto next = hecke_right_gen<Rules::kNil>(g, z, letter);
      if (!next) return std::nullopt;
      z = *next;
    }
    return z;
  }

  Ring act_gen(const WeylGroup& g, int i, const Ring& f) const {
    if constexpr (Rules::kNil) {
      return divided_difference(g, i, f);
    } else {
      return flavor_ == HeckeFlavor::IsobaricK ? isobaric_demazure(g, i, f)
                                               : demazure(g, i, f);
    }
  }

  const WeylGroup* group_;
  int slots_;
  HeckeFlavor flavor_;
  Terms terms_;
};

template <class Rules>
WeylElement TensorOpT<Rules>::elem_handle(const WeylGroup* g, uint32_t id) {
  return g->element_by_id(id);
}

using HTensorOp = TensorOpT<NilRules>;
using KTensorOp = TensorOpT<ZeroRules>;
using HSmash = HTensorOp;  // plain_slots == 0
using KSmash = KTensorOp;

// Slot-1 building blocks, as 0-slot operators.
HSmash h_smash_const(const WeylGroup& g, const HPoly& p);
HSmash h_smash_basis(const WeylGroup& g, int i);
HSmash h_smash_reflection(const WeylGroup& g, int i);  // 1 - alpha (x) del
KSmash k_smash_const(const WeylGroup& g, const KElem& f, HeckeFlavor flavor);
KSmash k_smash_basis(const WeylGroup& g, int i, HeckeFlavor flavor);
KSmash k_smash_reflection(const WeylGroup& g, int i, HeckeFlavor flavor);

HeckeFlavor flavor_of(OpKind kind);
int plain_slots_of(OpKind kind);

// The literal generator expansions of the six operators.
HTensorOp build_operator_h(const WeylGroup& g, int i, OpKind kind);  // J, L
KTensorOp build_operator_k(const WeylGroup& g, int i, OpKind kind);  // Xi.., Lambda..

// Normal-form product over a word, left to right.
HTensorOp operator_word_product_h(const WeylGroup& g, const Word& q,
                                  OpKind kind, size_t term_budget = 0);
KTensorOp operator_word_product_k(const WeylGroup& g, const Word& q,
                                  OpKind kind, size_t term_budget = 0);

// Classifies X^2 against 0, X, and the identity by normal-form equality.
SquareClass check_square(const WeylGroup& g, int i, OpKind kind);

struct BraidReport {
  int order = 0;        // Coxeter order m_{ij}
  bool ok = false;      // alternating products agree in normal form
  size_t lhs_terms = 0;
  size_t rhs_terms = 0;
};

// Compares the two alternating products of length m_{ij}. A term_budget of 0
// means unlimited; otherwise BudgetExceeded is thrown when a partial product
// grows past the budget.
BraidReport check_braid(const WeylGroup& g, int i, int j, OpKind kind,
                        size_t term_budget = 0);

// Closed forms assembled from point restrictions; equal to the word products
// over any reduced word (finite-type groups only).
HTensorOp closed_form_J(const WeylGroup& g, WeylElement w);
KTensorOp closed_form_Xi(const WeylGroup& g, WeylElement w);
KTensorOp closed_form_XiCirc(const WeylGroup& g, WeylElement w);

// Structure constants read off the three-slot operators applied to 1:
// c_{uv}^w from L^w, a_{uv}^w from Lambda^w (with the parity prefactor),
// a-circle from Lambda-circle^w.
HPoly extract_c_from_L(const HTensorOp& lw, WeylElement u, WeylElement v);
KElem extract_a_from_Lambda(const KTensorOp& lw, WeylElement u, WeylElement v,
                            WeylElement w);
KElem extract_acirc_from_LambdaCirc(const KTensorOp& lw, WeylElement u,
                                    WeylElement v);

}  // namespace schub
