// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, with the runtime bounds checked alongside the values.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schub/hecke.hpp"
#include "schub/oracle.hpp"
#include "schub/parallel.hpp"
#include "schub/schubert.hpp"

using namespace schub;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  bool in_time = time_limit_s <= 0 || secs < time_limit_s;
  bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  criterion %d: %s  [%.2f s%s]%s%s\n",
              pass ? "PASS" : "FAIL", number, name.c_str(), secs,
              in_time ? "" : " OVER LIMIT", detail.empty() ? "" : "  -- ",
              detail.c_str());
  std::fflush(stdout);
}

Word W(std::vector<int> one_based) {
  for (auto& l : one_based) --l;
  return Word(std::move(one_based));
}

KElem e_of(std::vector<int32_t> coords) {
  return k_char(Weight(std::move(coords)));
}

bool golden_examples(std::string& detail) {
  WeylGroup a2(CartanData::builtin('A', 2));
  WeylElement r1 = a2.generator(0);
  WeylElement r1r2 = a2.element_of_word(W({1, 2}));
  WeylElement r2r1 = a2.element_of_word(W({2, 1}));
  WeylElement w0 = a2.element_of_word(W({1, 2, 1}));
  bool ok = structure_constant_H(a2, r1, r1r2, w0) == HPoly::constant(2, 1);
  ok = ok && structure_constant_H(a2, r1, r2r1, w0).is_zero();

  WeylGroup a3(CartanData::builtin('A', 3));
  WeylElement u = element_from_permutation(a3, {1, 4, 3, 2});
  WeylElement v = element_from_permutation(a3, {3, 2, 1, 4});
  WeylElement w = element_from_permutation(a3, {3, 4, 2, 1});
  ok = ok && structure_constant_H(a3, u, v, w) ==
                 h_alpha(0, 3) + h_alpha(1, 3) + h_alpha(2, 3);
  ok = ok && structure_constant_K(a3, u, v, w, Theory::KIdeal) ==
                 e_of({0, -1, 0}) - e_of({-1, -2, -1});

  WeylGroup s3(CartanData::builtin('A', 2));
  ok = ok && recursion_c(s3, element_from_permutation(s3, {3, 1, 2}),
                         element_from_permutation(s3, {1, 3, 2}),
                         element_from_permutation(s3, {3, 2, 1})) ==
                 HPoly::constant(2, 1);
  ok = ok && recursion_c(s3, element_from_permutation(s3, {2, 1, 3}),
                         element_from_permutation(s3, {1, 3, 2}),
                         element_from_permutation(s3, {2, 3, 1})) ==
                 HPoly::constant(2, 1);
  if (!ok) detail = "a golden value differs";
  return ok;
}

bool operator_identities(std::string& detail) {
  WeylGroup a2(CartanData::builtin('A', 2));
  WeylGroup b2(CartanData::builtin('B', 2));
  WeylGroup d2(CartanData::builtin('D', 2));
  auto expect = [&](const WeylGroup& g, int i, OpKind k, SquareClass want,
                    const char* label) {
    if (check_square(g, i, k) != want) {
      detail += std::string(label) + " square misclassified; ";
      return false;
    }
    return true;
  };
  bool ok = true;
  for (const WeylGroup* g : {&a2, &b2}) {
    for (int i = 0; i < 2; ++i) {
      ok &= expect(*g, i, OpKind::L, SquareClass::Zero, "L");
      ok &= expect(*g, i, OpKind::Lambda, SquareClass::Idempotent, "Lambda");
      ok &= expect(*g, i, OpKind::LambdaCirc, SquareClass::Idempotent,
                   "LambdaCirc");
      ok &= expect(*g, i, OpKind::J, SquareClass::Involution, "J");
      ok &= expect(*g, i, OpKind::Xi, SquareClass::Involution, "Xi");
      ok &= expect(*g, i, OpKind::XiCirc, SquareClass::Involution, "XiCirc");
    }
  }
  auto braid = [&](const WeylGroup& g, OpKind k, const char* label) {
    BraidReport rep = check_braid(g, 0, 1, k);
    if (!rep.ok) detail += std::string("braid failed: ") + label + "; ";
    return rep.ok;
  };
  ok &= braid(a2, OpKind::L, "L/A2");
  ok &= braid(b2, OpKind::L, "L/B2");
  ok &= braid(a2, OpKind::Lambda, "Lambda/A2");
  ok &= braid(a2, OpKind::LambdaCirc, "LambdaCirc/A2");
  for (OpKind k : {OpKind::J, OpKind::Xi, OpKind::XiCirc, OpKind::L,
                   OpKind::Lambda, OpKind::LambdaCirc})
    ok &= braid(d2, k, "orthogonal commutation");
  return ok;
}

// The full c-table for one w via the subword formula.
std::map<std::pair<uint32_t, uint32_t>, HPoly> c_table_for_w(
    const WeylGroup& g, WeylElement w, const Word& q) {
  auto grouped = subwords_by_product(g, q, SubwordMode::ReducedOrdinary);
  std::map<std::pair<uint32_t, uint32_t>, HPoly> out;
  for (const auto& [u, ps] : grouped)
    for (const auto& [v, rs] : grouped) {
      HPoly total(g.rank());
      for (Mask p : ps)
        for (Mask r : rs) {
          HPoly val = h_one(g.rank());
          for (size_t k = q.size(); k-- > 0;) {
            int i = q[k];
            bool in_both = ((p >> k) & 1u) && ((r >> k) & 1u);
            bool in_neither = !((p >> k) & 1u) && !((r >> k) & 1u);
            val = weyl_act_h(g, g.generator(i), val);
            if (in_neither) val = divided_difference(g, i, val);
            if (in_both) val *= h_alpha(i, g.rank());
          }
          total += val;
        }
      if (!total.is_zero()) out[{u.id(), v.id()}] = std::move(total);
    }
  return out;
}

bool oracle_equivalence(std::string& detail) {
  WeylGroup a3(CartanData::builtin('A', 3));
  auto elems = a3.enumerate();
  size_t n = elems.size();
  if (n != 24) {
    detail = "W(A3) enumeration is off";
    return false;
  }

  // Route A: subword formula, one task per w.
  std::vector<std::map<std::pair<uint32_t, uint32_t>, HPoly>> tables =
      parallel_map<std::map<std::pair<uint32_t, uint32_t>, HPoly>>(
          n, [&](size_t idx) {
            return c_table_for_w(a3, elems[idx], elems[idx].canonical_word());
          });

  // Route B: localization, one task per (u,v), sharing restrictions.
  RestrictionTable shared(a3, Theory::H);
  std::vector<std::map<WeylElement, RingValue>> solved =
      parallel_map<std::map<WeylElement, RingValue>>(n * n, [&](size_t idx) {
        WeylElement u = elems[idx / n], v = elems[idx % n];
        return localization_solve(a3, u, v, Theory::H, &shared);
      });

  // Route C: recursion, memoized in one pass.
  CRecursion rec(a3);

  for (size_t wi = 0; wi < n; ++wi) {
    WeylElement w = elems[wi];
    for (size_t ui = 0; ui < n; ++ui)
      for (size_t vi = 0; vi < n; ++vi) {
        WeylElement u = elems[ui], v = elems[vi];
        HPoly direct(3);
        auto it = tables[wi].find({u.id(), v.id()});
        if (it != tables[wi].end()) direct = it->second;
        const auto& sol = solved[ui * n + vi];
        HPoly loc(3);
        auto sit = sol.find(w);
        if (sit != sol.end()) loc = sit->second.h;
        if (direct != loc) {
          detail = "formula vs localization mismatch";
          return false;
        }
        if (direct != rec.get(u, v, w)) {
          detail = "formula vs recursion mismatch";
          return false;
        }
      }
  }

  // K on W(A2), both bases, against localization.
  WeylGroup a2(CartanData::builtin('A', 2));
  auto e2 = a2.enumerate();
  for (Theory th : {Theory::KIdeal, Theory::KStructure}) {
    RestrictionTable table(a2, th);
    for (auto u : e2)
      for (auto v : e2) {
        auto sol = localization_solve(a2, u, v, th, &table);
        for (auto w : e2) {
          KElem direct = structure_constant_K(a2, u, v, w, th);
          auto it = sol.find(w);
          KElem loc = it == sol.end() ? KElem(2) : it->second.k;
          if (direct != loc) {
            detail = "K formula vs localization mismatch";
            return false;
          }
        }
      }
  }
  return true;
}

bool degeneration(std::string& detail) {
  WeylGroup a2(CartanData::builtin('A', 2));
  auto e2 = a2.enumerate();
  for (auto u : e2)
    for (auto v : e2)
      for (auto w : e2) {
        int d = u.length() + v.length() - w.length();
        QHPoly c = to_rational(structure_constant_H(a2, u, v, w));
        if (associated_graded(structure_constant_K(a2, u, v, w,
                                                   Theory::KIdeal), d) != c ||
            associated_graded(structure_constant_K(a2, u, v, w,
                                                   Theory::KStructure), d) !=
                c) {
          detail = "A2 degeneration mismatch";
          return false;
        }
      }

  WeylGroup a3(CartanData::builtin('A', 3));
  auto e3 = a3.enumerate();
  std::mt19937_64 rng(20260811);
  std::uniform_int_distribution<size_t> pick(0, e3.size() - 1);
  std::vector<std::array<size_t, 3>> triples;
  for (int rep = 0; rep < 200; ++rep)
    triples.push_back({pick(rng), pick(rng), pick(rng)});
  std::vector<char> good = parallel_map<char>(triples.size(), [&](size_t t) {
    WeylElement u = e3[triples[t][0]], v = e3[triples[t][1]],
                w = e3[triples[t][2]];
    int d = u.length() + v.length() - w.length();
    QHPoly c = to_rational(structure_constant_H(a3, u, v, w));
    bool ok =
        associated_graded(structure_constant_K(a3, u, v, w, Theory::KIdeal),
                          d) == c &&
        associated_graded(
            structure_constant_K(a3, u, v, w, Theory::KStructure), d) == c;
    return ok ? '\1' : '\0';
  });
  for (char ok : good)
    if (!ok) {
      detail = "A3 random-triple degeneration mismatch";
      return false;
    }
  return true;
}

bool positivity(std::string& detail) {
  for (const char* tag : {"A3", "B2"}) {
    WeylGroup g(CartanData::from_type_string(tag));
    auto elems = g.enumerate();
    size_t n = elems.size();
    std::vector<char> good = parallel_map<char>(n, [&](size_t wi) {
      auto table = c_table_for_w(g, elems[wi], elems[wi].canonical_word());
      for (const auto& [key, val] : table)
        for (const auto& [e, coeff] : val.terms())
          if (coeff < 0) return '\0';
      return '\1';
    });
    for (char ok : good)
      if (!ok) {
        detail = std::string("negative monomial in ") + tag;
        return false;
      }
  }
  return true;
}

bool bott_samelson(std::string& detail) {
  WeylGroup a2(CartanData::builtin('A', 2));
  auto e2 = a2.enumerate();

  // products of dual classes expand with the b / d / d-circle constants
  for (auto w : e2) {
    Word q = w.canonical_word();
    Mask full = (Mask(1) << q.size()) - 1;
    auto red = subwords_by_product(a2, q, SubwordMode::ReducedOrdinary);
    auto dem = subwords_by_product(a2, q, SubwordMode::Demazure);
    for (auto u : e2)
      for (auto v : e2) {
        HPoly csum(2);
        if (red.count(u) && red.count(v))
          for (Mask r : red.at(u))
            for (Mask s : red.at(v))
              csum += bs_structure_constant(a2, q, r, s, full, Theory::H).h;
        if (csum != structure_constant_H(a2, u, v, w)) {
          detail = "cs=sum-of-bs failed";
          return false;
        }
        KElem asum(2), osum(2);
        if (dem.count(u) && dem.count(v))
          for (Mask r : dem.at(u))
            for (Mask s : dem.at(v)) {
              KElem d =
                  bs_structure_constant(a2, q, r, s, full, Theory::KIdeal).k;
              int sign = (std::popcount(r) + std::popcount(s) - u.length() -
                          v.length()) & 1;
              asum += sign ? -d : d;
              osum += bs_structure_constant(a2, q, r, s, full,
                                            Theory::KStructure).k;
            }
        if (asum != structure_constant_K(a2, u, v, w, Theory::KIdeal) ||
            osum != structure_constant_K(a2, u, v, w, Theory::KStructure)) {
          detail = "as=sum-of-ds failed";
          return false;
        }
      }
  }

  // first-letter recursions for tau / tau-circle restrictions, |Q| <= 4
  for (int len = 1; len <= 4; ++len) {
    size_t total_words = size_t(1) << len;  // letters in {1,2}
    for (size_t code = 0; code < total_words; ++code) {
      Word q;
      size_t c = code;
      for (int t = 0; t < len; ++t) {
        q.letters.push_back(static_cast<int>(c % 2));
        c /= 2;
      }
      int a = q[0];
      WeylElement ra = a2.generator(a);
      Word q0(std::vector<int>(q.letters.begin() + 1, q.letters.end()));
      for (Mask u = 0; u < (Mask(1) << len); ++u)
        for (Mask j = 1; j < (Mask(1) << len); j += 2) {  // J starts with r_a
          Mask j0 = j >> 1, u0 = u >> 1;
          KElem to = bs_restriction(a2, q, u, j, Theory::KStructure).k;
          KElem ti = bs_restriction(a2, q, u, j, Theory::KIdeal).k;
          KElem io = bs_restriction(a2, q0, u0, j0, Theory::KStructure).k;
          KElem ii = bs_restriction(a2, q0, u0, j0, Theory::KIdeal).k;
          bool ok;
          if (u & 1) {
            ok = to == k_one_minus_e_neg(a, 2) * weyl_act_k(a2, ra, io) &&
                 ti == k_one_minus_e_neg(a, 2) * weyl_act_k(a2, ra, ii);
          } else {
            ok = to == k_e_alpha(a, 2, -1) * weyl_act_k(a2, ra, io) &&
                 ti == weyl_act_k(a2, ra, ii);
          }
          if (!ok) {
            detail = "restriction recursion failed";
            return false;
          }
        }
    }
  }

  // Woods-Hole duality over all words of length <= 5 in A2 and B2,
  // 20 seeded rational samples per case.
  for (const char* tag : {"A2", "B2"}) {
    WeylGroup g(CartanData::from_type_string(tag));
    std::vector<Word> words;
    words.push_back(Word{});
    for (int len = 1; len <= 5; ++len) {
      size_t total_words = size_t(1) << len;
      for (size_t code = 0; code < total_words; ++code) {
        Word q;
        size_t c = code;
        for (int t = 0; t < len; ++t) {
          q.letters.push_back(static_cast<int>(c % 2));
          c /= 2;
        }
        words.push_back(q);
      }
    }
    std::vector<char> good = parallel_map<char>(words.size(), [&](size_t wi) {
      const Word& q = words[wi];
      size_t total = size_t(1) << q.size();
      SampleStream stream(g.rank(), 90210 + wi);
      std::vector<std::map<Mask, KElem>> fam(total);
      for (Mask v = 0; v < total; ++v)
        fam[v] = bs_restriction_family(g, q, v, Theory::KStructure);
      int done = 0;
      while (done < 20) {
        RationalSample s = stream.next();
        bool valid = true;
        for (Mask v = 0; v < total && valid; ++v)
          for (Mask r = 0; r < total && valid; ++r) {
            auto val = woods_hole_pair(g, q, fam[v], r, s, Sheaf::Structure);
            if (!val) {
              valid = false;  // denominator hit zero: resample
              break;
            }
            if (*val != (v == r ? Rat(1) : Rat(0))) return '\0';
          }
        if (valid) ++done;
      }
      return '\1';
    });
    for (char ok : good)
      if (!ok) {
        detail = std::string("Woods-Hole duality failed in ") + tag;
        return false;
      }
  }
  return true;
}

bool word_independence(std::string& detail) {
  WeylGroup a3(CartanData::builtin('A', 3));
  auto elems = a3.enumerate();
  size_t n = elems.size();
  std::vector<char> good = parallel_map<char>(n, [&](size_t wi) {
    WeylElement w = elems[wi];
    Word canonical = w.canonical_word();
    auto base_c = c_table_for_w(a3, w, canonical);
    auto base_a = [&](Theory th) {
      std::map<std::pair<uint32_t, uint32_t>, KElem> out;
      for (auto u : elems)
        for (auto v : elems) {
          KElem val = structure_constant_K(a3, u, v, w, th, &canonical);
          if (!val.is_zero()) out[{u.id(), v.id()}] = std::move(val);
        }
      return out;
    };
    auto base_ai = base_a(Theory::KIdeal);
    for (const Word& q : a3.reduced_words(w)) {
      if (c_table_for_w(a3, w, q) != base_c) return '\0';
      for (auto u : elems)
        for (auto v : elems) {
          KElem val = structure_constant_K(a3, u, v, w, Theory::KIdeal, &q);
          auto it = base_ai.find({u.id(), v.id()});
          if (it == base_ai.end() ? !val.is_zero() : val != it->second)
            return '\0';
        }
    }
    // one non-reduced word with the same Demazure product
    if (!w.is_identity()) {
      Word doubled = canonical;
      doubled.letters.insert(doubled.letters.begin(), canonical[0]);
      for (auto u : elems)
        for (auto v : elems) {
          KElem val =
              structure_constant_K(a3, u, v, w, Theory::KIdeal, &doubled);
          auto it = base_ai.find({u.id(), v.id()});
          if (it == base_ai.end() ? !val.is_zero() : val != it->second)
            return '\0';
        }
    }
    return '\1';
  });
  for (char ok : good)
    if (!ok) {
      detail = "a word choice changed a structure constant";
      return false;
    }
  return true;
}

}  // namespace

int main() {
  int threads = resolve_threads(0);
  std::printf("acceptance suite (%d worker%s)\n", threads,
              threads == 1 ? "" : "s");
  criterion(1, "golden examples", 1.0, golden_examples);
  criterion(2, "operator identity suite", 60.0, operator_identities);
  criterion(3, "oracle equivalence", threads >= 8 ? 120.0 : 600.0,
            oracle_equivalence);
  criterion(4, "associated-graded degeneration", 0, degeneration);
  criterion(5, "Graham positivity (empirical)", 0, positivity);
  criterion(6, "Bott-Samelson suite", 0, bott_samelson);
  criterion(7, "word independence", 0, word_independence);
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
