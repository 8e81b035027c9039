#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "schub/weyl.hpp"

using namespace schub;

namespace {

Word W(std::vector<int> one_based) {
  for (auto& l : one_based) --l;
  return Word(std::move(one_based));
}

}  // namespace

TEST_CASE("builtin Cartan matrices") {
  CartanData a2 = CartanData::builtin('A', 2);
  CHECK(a2.entry(0, 1) == -1);
  CHECK(a2.entry(1, 0) == -1);
  CartanData b2 = CartanData::builtin('B', 2);
  CHECK(b2.entry(0, 1) == -1);
  CHECK(b2.entry(1, 0) == -2);
  CHECK(b2.coxeter_order(0, 1) == 4);
  CartanData g2 = CartanData::builtin('G', 2);
  CHECK(g2.coxeter_order(0, 1) == 6);
  CartanData d2 = CartanData::builtin('D', 2);
  CHECK(d2.entry(0, 1) == 0);
  CHECK(d2.coxeter_order(0, 1) == 2);
  CHECK_THROWS_AS(CartanData::builtin('E', 6), DomainError);
  CHECK_THROWS_AS(CartanData::from_matrix(2, {2, 1, 1, 2}), DomainError);
  CHECK_THROWS_AS(CartanData::from_matrix(2, {2, -1, 0, 2}), DomainError);
}

TEST_CASE("reflection on weights") {
  CartanData a2 = CartanData::builtin('A', 2);
  Weight a1 = Weight::simple_root(0, 2), alpha2 = Weight::simple_root(1, 2);
  CHECK(a2.reflect(0, a1) == -a1);
  CHECK(a2.reflect(0, alpha2) == a1 + alpha2);
  CHECK(a2.reflect(0, a1 + alpha2) == alpha2);
  // involution on a spread of weights
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      Weight lam(std::vector<int32_t>{x, y});
      for (int i = 0; i < 2; ++i) CHECK(a2.reflect(i, a2.reflect(i, lam)) == lam);
    }
}

TEST_CASE("generator matrices satisfy the Coxeter relations") {
  for (const char* tag : {"A3", "B3", "C3", "D4", "G2"}) {
    WeylGroup g(CartanData::from_type_string(tag));
    int n = g.rank();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int m = g.cartan().coxeter_order(i, j);
        REQUIRE(m >= 2);
        WeylElement x = g.identity();
        for (int t = 0; t < m; ++t)
          x = g.right_mul(x, t % 2 == 0 ? i : j);
        WeylElement y = g.identity();
        for (int t = 0; t < m; ++t)
          y = g.right_mul(y, t % 2 == 0 ? j : i);
        CHECK(x == y);
        WeylElement sq = g.multiply(x, x);
        CHECK(sq == g.identity());
      }
  }
}

TEST_CASE("element_of_word basics") {
  WeylGroup a2(CartanData::builtin('A', 2));
  CHECK(a2.element_of_word(Word{}) == a2.identity());
  CHECK(a2.element_of_word(W({1, 2, 1})) == a2.element_of_word(W({2, 1, 2})));
  WeylGroup a1(CartanData::builtin('A', 1));
  CHECK(a1.element_of_word(W({1, 1})) == a1.identity());
}

TEST_CASE("length and canonical word") {
  WeylGroup a2(CartanData::builtin('A', 2));
  CHECK(a2.identity().length() == 0);
  CHECK(a2.identity().canonical_word().empty());

  auto elems = a2.enumerate();
  CHECK(elems.size() == 6);
  int maxlen = 0;
  for (auto e : elems) maxlen = std::max(maxlen, e.length());
  CHECK(maxlen == 3);

  WeylElement x = a2.element_of_word(W({1, 1, 2}));
  CHECK(x.length() == 1);
  CHECK(x.canonical_word() == W({2}));

  // canonical word is lexicographically least among all reduced words
  for (auto e : elems) {
    auto words = a2.reduced_words(e);
    CHECK(*std::min_element(words.begin(), words.end()) == e.canonical_word());
  }
}

TEST_CASE("demazure product folding") {
  WeylGroup a2(CartanData::builtin('A', 2));
  WeylElement w0 = a2.element_of_word(W({1, 2, 1}));
  CHECK(a2.demazure_product(W({1, 2, 1, 2})) == w0);
  CHECK(a2.demazure_product(W({1, 2})) == a2.element_of_word(W({1, 2})));
  WeylGroup a1(CartanData::builtin('A', 1));
  CHECK(a1.demazure_product(W({1, 1})) == a1.generator(0));
}

TEST_CASE("demazure product ignores doubled letters") {
  WeylGroup a3(CartanData::builtin('A', 3));
  std::vector<Word> words = {W({1, 2, 3}), W({1, 2, 1, 3, 2}), W({2, 2}),
                             W({3, 1, 2, 3, 1})};
  for (const Word& q : words) {
    WeylElement base = a3.demazure_product(q);
    for (size_t k = 0; k < q.size(); ++k) {
      Word doubled = q;
      doubled.letters.insert(doubled.letters.begin() + k, q[k]);
      CHECK(a3.demazure_product(doubled) == base);
    }
  }
}

TEST_CASE("bruhat order") {
  WeylGroup a2(CartanData::builtin('A', 2));
  WeylElement e = a2.identity();
  WeylElement r1 = a2.generator(0);
  WeylElement r1r2 = a2.element_of_word(W({1, 2}));
  WeylElement r2r1 = a2.element_of_word(W({2, 1}));
  for (auto w : a2.enumerate()) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(r1, r1r2));
  CHECK(!bruhat_leq(r1r2, r2r1));
  CHECK(!bruhat_leq(r2r1, r1r2));
}

TEST_CASE("reduced words of W(A3) match brute force") {
  WeylGroup a3(CartanData::builtin('A', 3));
  auto elems = a3.enumerate();
  CHECK(elems.size() == 24);
  for (auto w : elems) {
    auto words = a3.reduced_words(w);
    std::set<Word> found(words.begin(), words.end());
    CHECK(found.size() == words.size());
    for (const Word& q : words) {
      CHECK(static_cast<int>(q.size()) == w.length());
      CHECK(a3.element_of_word(q) == w);
    }
    // brute force over all words of length l(w)
    size_t count = 0;
    size_t totalWords = 1;
    for (int t = 0; t < w.length(); ++t) totalWords *= 3;
    for (size_t code = 0; code < totalWords; ++code) {
      size_t c = code;
      Word q;
      for (int t = 0; t < w.length(); ++t) {
        q.letters.push_back(static_cast<int>(c % 3));
        c /= 3;
      }
      if (a3.element_of_word(q) == w) {
        ++count;
        CHECK(found.count(q) == 1);
      }
    }
    CHECK(count == words.size());
  }
}

TEST_CASE("subwords with product: worked cases") {
  WeylGroup a2(CartanData::builtin('A', 2));
  Word q121 = W({1, 2, 1});
  auto masks = subwords_with_product(a2, q121, a2.generator(0),
                                     SubwordMode::ReducedOrdinary);
  REQUIRE(masks.size() == 2);
  CHECK(mask_to_string(masks[0], 3) == "100");
  CHECK(mask_to_string(masks[1], 3) == "001");

  auto masks2 = subwords_with_product(a2, q121, a2.element_of_word(W({1, 2})),
                                      SubwordMode::ReducedOrdinary);
  REQUIRE(masks2.size() == 1);
  CHECK(mask_to_string(masks2[0], 3) == "110");

  WeylGroup a3(CartanData::builtin('A', 3));
  Word q = W({1, 2, 3, 1, 2});
  auto masks3 = subwords_with_product(a3, q, a3.element_of_word(W({1, 2, 1})),
                                      SubwordMode::Demazure);
  std::set<std::string> strs;
  for (Mask m : masks3) strs.insert(mask_to_string(m, 5));
  CHECK((strs == std::set<std::string>{"11010", "01011", "11011"}));
}

TEST_CASE("full mask always demazure-produces the demazure product") {
  WeylGroup b2(CartanData::builtin('B', 2));
  std::vector<Word> words = {W({1, 2, 1, 2, 1}), W({2, 2, 1}), W({1, 1}),
                             W({2, 1, 2, 1, 2, 1})};
  for (const Word& q : words) {
    WeylElement target = b2.demazure_product(q);
    auto masks = subwords_with_product(b2, q, target, SubwordMode::Demazure);
    Mask full = (Mask(1) << q.size()) - 1;
    CHECK(std::count(masks.begin(), masks.end(), full) == 1);
  }
}

TEST_CASE("GCM file round trip") {
  std::istringstream in("2\n2 -1\n-2 2\n");
  CartanData c = CartanData::from_stream(in);
  CHECK(c == CartanData::builtin('B', 2));
}
