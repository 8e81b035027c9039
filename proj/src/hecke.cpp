#include "schub/hecke.hpp"

#include "schub/schubert.hpp"

namespace schub {

const char* op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::J: return "J";
    case OpKind::Xi: return "Xi";
    case OpKind::XiCirc: return "XiCirc";
    case OpKind::L: return "L";
    case OpKind::Lambda: return "Lambda";
    case OpKind::LambdaCirc: return "LambdaCirc";
  }
  return "?";
}

const char* square_class_name(SquareClass c) {
  switch (c) {
    case SquareClass::Zero: return "zero";
    case SquareClass::Idempotent: return "idempotent";
    case SquareClass::Involution: return "involution";
    case SquareClass::Other: return "fail";
  }
  return "?";
}

HSmash h_smash_const(const WeylGroup& g, const HPoly& p) {
  HSmash s(&g, 0, HeckeFlavor::NilH);
  s.add_term(g.identity(), {}, p);
  return s;
}

HSmash h_smash_basis(const WeylGroup& g, int i) {
  HSmash s(&g, 0, HeckeFlavor::NilH);
  s.add_term(g.generator(i), {}, h_one(g.rank()));
  return s;
}

HSmash h_smash_reflection(const WeylGroup& g, int i) {
  HSmash s(&g, 0, HeckeFlavor::NilH);
  s.add_term(g.identity(), {}, h_one(g.rank()));
  s.add_term(g.generator(i), {}, -h_alpha(i, g.rank()));
  return s;
}

KSmash k_smash_const(const WeylGroup& g, const KElem& f, HeckeFlavor flavor) {
  KSmash s(&g, 0, flavor);
  s.add_term(g.identity(), {}, f);
  return s;
}

KSmash k_smash_basis(const WeylGroup& g, int i, HeckeFlavor flavor) {
  KSmash s(&g, 0, flavor);
  s.add_term(g.generator(i), {}, k_one(g.rank()));
  return s;
}

KSmash k_smash_reflection(const WeylGroup& g, int i, HeckeFlavor flavor) {
  int n = g.rank();
  KSmash s(&g, 0, flavor);
  if (flavor == HeckeFlavor::DemazureK) {
    // r = 1 - (1 - e^{-alpha}) D
    s.add_term(g.identity(), {}, k_one(n));
    s.add_term(g.generator(i), {}, -k_one_minus_e_neg(i, n));
  } else {
    // r = e^{alpha} (1 - (1 - e^{-alpha}) D) = e^{alpha} - (e^{alpha} - 1) D
    SCHUB_REQUIRE(flavor == HeckeFlavor::IsobaricK, "not a K flavor");
    s.add_term(g.identity(), {}, k_e_alpha(i, n, +1));
    s.add_term(g.generator(i), {}, k_one(n) - k_e_alpha(i, n, +1));
  }
  return s;
}

HeckeFlavor flavor_of(OpKind kind) {
  switch (kind) {
    case OpKind::J:
    case OpKind::L: return HeckeFlavor::NilH;
    case OpKind::Xi:
    case OpKind::Lambda: return HeckeFlavor::DemazureK;
    case OpKind::XiCirc:
    case OpKind::LambdaCirc: return HeckeFlavor::IsobaricK;
  }
  return HeckeFlavor::NilH;
}

int plain_slots_of(OpKind kind) {
  switch (kind) {
    case OpKind::J:
    case OpKind::Xi:
    case OpKind::XiCirc: return 1;
    default: return 2;
  }
}

namespace {

template <class Op>
Op with_plain(const Op& smash, std::vector<WeylElement> plain, int slots) {
  Op out(&smash.group(), slots, smash.flavor());
  for (const auto& [k, c] : smash.terms())
    out.add_term_v(smash.element(k.a), plain, c);
  return out;
}

}  // namespace

HTensorOp build_operator_h(const WeylGroup& g, int i, OpKind kind) {
  SCHUB_REQUIRE(kind == OpKind::J || kind == OpKind::L,
                "not a cohomology operator kind");
  WeylElement e = g.identity(), s = g.generator(i);
  HSmash r = h_smash_reflection(g, i);
  HSmash ar = h_smash_const(g, h_alpha(i, g.rank())) * r;
  if (kind == OpKind::J) {
    // J = r (x) 1 + alpha r (x) del
    return with_plain(r, {e}, 1) + with_plain(ar, {s}, 1);
  }
  // L = del r (x) 1 (x) 1 + r (x) del (x) 1 + r (x) 1 (x) del
  //     + alpha r (x) del (x) del
  HSmash dr = h_smash_basis(g, i) * r;
  return with_plain(dr, {e, e}, 2) + with_plain(r, {s, e}, 2) +
         with_plain(r, {e, s}, 2) + with_plain(ar, {s, s}, 2);
}

KTensorOp build_operator_k(const WeylGroup& g, int i, OpKind kind) {
  int n = g.rank();
  WeylElement e = g.identity(), s = g.generator(i);
  HeckeFlavor flavor = flavor_of(kind);
  KSmash r = k_smash_reflection(g, i, flavor);
  KSmash m1 = k_smash_const(g, k_one_minus_e_neg(i, n), flavor);
  switch (kind) {
    case OpKind::Xi:
      // Xi = r (x) 1 - (1 - e^{-a}) r (x) D
      return with_plain(r, {e}, 1) + with_plain(-(m1 * r), {s}, 1);
    case OpKind::XiCirc: {
      // XiCirc = e^{-a} r (x) 1 + (1 - e^{-a}) r (x) D
      KSmash en_r = k_smash_const(g, k_e_alpha(i, n, -1), flavor) * r;
      return with_plain(en_r, {e}, 1) + with_plain(m1 * r, {s}, 1);
    }
    case OpKind::Lambda: {
      // Lambda = e^{a} r D (x) 1 (x) 1 + r (x) D (x) 1 + r (x) 1 (x) D
      //          - (1 - e^{-a}) r (x) D (x) D
      KSmash head = k_smash_const(g, k_e_alpha(i, n, +1), flavor) * r *
                    k_smash_basis(g, i, flavor);
      return with_plain(head, {e, e}, 2) + with_plain(r, {s, e}, 2) +
             with_plain(r, {e, s}, 2) + with_plain(-(m1 * r), {s, s}, 2);
    }
    case OpKind::LambdaCirc: {
      // LambdaCirc = e^{-a} r (-D) (x) 1 (x) 1 + e^{-a} r (x) D (x) 1
      //              + e^{-a} r (x) 1 (x) D + (1 - e^{-a}) r (x) D (x) D
      KSmash en_r = k_smash_const(g, k_e_alpha(i, n, -1), flavor) * r;
      KSmash head = -(en_r * k_smash_basis(g, i, flavor));
      return with_plain(head, {e, e}, 2) + with_plain(en_r, {s, e}, 2) +
             with_plain(en_r, {e, s}, 2) + with_plain(m1 * r, {s, s}, 2);
    }
    default:
      throw DomainError("not a K-theory operator kind");
  }
}

namespace {

template <class Op, class Builder>
Op word_product_impl(const WeylGroup& g, const Word& q, OpKind kind,
                     size_t budget, Builder build) {
  Op acc = Op::identity(g, plain_slots_of(kind), flavor_of(kind));
  for (int letter : q.letters) {
    acc = acc * build(g, letter, kind);
    if (budget && acc.term_count() > budget)
      throw BudgetExceeded("operator word product exceeded term budget");
  }
  return acc;
}

}  // namespace

HTensorOp operator_word_product_h(const WeylGroup& g, const Word& q,
                                  OpKind kind, size_t term_budget) {
  return word_product_impl<HTensorOp>(g, q, kind, term_budget,
                                      build_operator_h);
}

KTensorOp operator_word_product_k(const WeylGroup& g, const Word& q,
                                  OpKind kind, size_t term_budget) {
  return word_product_impl<KTensorOp>(g, q, kind, term_budget,
                                      build_operator_k);
}

namespace {

template <class Op>
SquareClass classify_square(const Op& x) {
  Op sq = x * x;
  if (sq.is_zero() && !x.is_zero()) return SquareClass::Zero;
  if (sq == x) return SquareClass::Idempotent;
  if (sq == Op::identity(x.group(), x.plain_slots(), x.flavor()))
    return SquareClass::Involution;
  return SquareClass::Other;
}

Word alternating_word(int i, int j, int m) {
  Word w;
  for (int t = 0; t < m; ++t) w.letters.push_back(t % 2 == 0 ? i : j);
  return w;
}

}  // namespace

SquareClass check_square(const WeylGroup& g, int i, OpKind kind) {
  if (flavor_of(kind) == HeckeFlavor::NilH)
    return classify_square(build_operator_h(g, i, kind));
  return classify_square(build_operator_k(g, i, kind));
}

BraidReport check_braid(const WeylGroup& g, int i, int j, OpKind kind,
                        size_t term_budget) {
  SCHUB_REQUIRE(i != j, "braid check needs distinct generators");
  BraidReport rep;
  rep.order = g.cartan().coxeter_order(i, j);
  SCHUB_REQUIRE(rep.order >= 2, "r_i r_j has infinite order; no braid relation");
  Word lhs = alternating_word(i, j, rep.order);
  Word rhs = alternating_word(j, i, rep.order);
  if (flavor_of(kind) == HeckeFlavor::NilH) {
    HTensorOp a = operator_word_product_h(g, lhs, kind, term_budget);
    HTensorOp b = operator_word_product_h(g, rhs, kind, term_budget);
    rep.ok = (a == b);
    rep.lhs_terms = a.term_count();
    rep.rhs_terms = b.term_count();
  } else {
    KTensorOp a = operator_word_product_k(g, lhs, kind, term_budget);
    KTensorOp b = operator_word_product_k(g, rhs, kind, term_budget);
    rep.ok = (a == b);
    rep.lhs_terms = a.term_count();
    rep.rhs_terms = b.term_count();
  }
  return rep;
}

namespace {

// Expansion of the abstract group element w in the slot-1 basis, by
// eliminating each letter through the flavor's r model.
HSmash h_group_element(const WeylGroup& g, WeylElement w) {
  HSmash acc = h_smash_const(g, h_one(g.rank()));
  for (int letter : w.canonical_word().letters)
    acc = acc * h_smash_reflection(g, letter);
  return acc;
}

KSmash k_group_element(const WeylGroup& g, WeylElement w, HeckeFlavor flavor) {
  KSmash acc = k_smash_const(g, k_one(g.rank()), flavor);
  for (int letter : w.canonical_word().letters)
    acc = acc * k_smash_reflection(g, letter, flavor);
  return acc;
}

}  // namespace

HTensorOp closed_form_J(const WeylGroup& g, WeylElement w) {
  HTensorOp out(&g, 1, HeckeFlavor::NilH);
  HSmash ws = h_group_element(g, w);
  for (WeylElement v : g.enumerate()) {
    if (!bruhat_leq(v, w)) continue;
    HPoly coeff = restriction_H(g, v, w);
    if (coeff.is_zero()) continue;
    out += with_plain(h_smash_const(g, coeff) * ws, {v}, 1);
  }
  return out;
}

KTensorOp closed_form_Xi(const WeylGroup& g, WeylElement w) {
  KTensorOp out(&g, 1, HeckeFlavor::DemazureK);
  KSmash ws = k_group_element(g, w, HeckeFlavor::DemazureK);
  for (WeylElement v : g.enumerate()) {
    if (!bruhat_leq(v, w)) continue;
    KElem coeff = restriction_K(g, v, w, Theory::KIdeal);
    if (coeff.is_zero()) continue;
    if (v.length() & 1) coeff = -coeff;  // (-1)^{l(v)}
    out += with_plain(k_smash_const(g, coeff, HeckeFlavor::DemazureK) * ws,
                      {v}, 1);
  }
  return out;
}

KTensorOp closed_form_XiCirc(const WeylGroup& g, WeylElement w) {
  KTensorOp out(&g, 1, HeckeFlavor::IsobaricK);
  KSmash ws = k_group_element(g, w, HeckeFlavor::IsobaricK);
  for (WeylElement v : g.enumerate()) {
    if (!bruhat_leq(v, w)) continue;
    KElem coeff = restriction_K(g, v, w, Theory::KStructure);
    if (coeff.is_zero()) continue;
    out += with_plain(k_smash_const(g, coeff, HeckeFlavor::IsobaricK) * ws,
                      {v}, 1);
  }
  return out;
}

HPoly extract_c_from_L(const HTensorOp& lw, WeylElement u, WeylElement v) {
  return lw.coefficient_applied_to_one({u, v});
}

KElem extract_a_from_Lambda(const KTensorOp& lw, WeylElement u, WeylElement v,
                            WeylElement w) {
  KElem val = lw.coefficient_applied_to_one({u, v});
  if ((u.length() + v.length() - w.length()) & 1) val = -val;
  return val;
}

KElem extract_acirc_from_LambdaCirc(const KTensorOp& lw, WeylElement u,
                                    WeylElement v) {
  return lw.coefficient_applied_to_one({u, v});
}

}  // namespace schub
