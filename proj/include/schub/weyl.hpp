#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schub/cartan.hpp"

namespace schub {

class WeylGroup;

// A word in the simple generators; letters are 0-based internally
// (the CLI speaks 1-based).
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}
  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](size_t k) const { return letters[k]; }
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// A subword is a set of positions of an ambient word, as a bitmask
// (bit k set <=> position k taken). Positions, not letters, identify it.
using Mask = uint32_t;

// Handle to an interned element of a WeylGroup. Elements are immutable
// after interning; the handle is a cheap value type.
class WeylElement {
 public:
  WeylElement() : group_(nullptr), id_(0) {}
  const WeylGroup* group() const { return group_; }
  uint32_t id() const { return id_; }
  int length() const;
  const Word& canonical_word() const;          // lex-least reduced word
  const std::vector<int32_t>& matrix() const;  // action on root coordinates
  bool is_identity() const { return id_ == 0; }

  bool operator==(const WeylElement& o) const {
    return group_ == o.group_ && id_ == o.id_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  // Deterministic total order: (length, canonical word).
  bool operator<(const WeylElement& o) const;

 private:
  friend class WeylGroup;
  WeylElement(const WeylGroup* g, uint32_t id) : group_(g), id_(id) {}
  const WeylGroup* group_;
  uint32_t id_;
};

std::ostream& operator<<(std::ostream& os, const WeylElement& w);

enum class SubwordMode { ReducedOrdinary, Demazure };

// The Weyl group of a GCM, with elements represented by their faithful
// integer-matrix action on the root lattice and interned on first use.
// Lengths and canonical reduced words are computed when an element is
// interned; generator-product caches fill lazily. All caches are
// synchronized, so a group can be shared across threads.
class WeylGroup {
 public:
  explicit WeylGroup(CartanData cartan);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }

  WeylElement identity() const;
  WeylElement generator(int i) const;
  WeylElement multiply(WeylElement a, WeylElement b) const;
  WeylElement inverse(WeylElement a) const;
  WeylElement right_mul(WeylElement a, int i) const;  // a r_i
  WeylElement left_mul(int i, WeylElement a) const;   // r_i a

  // i is a right descent of w iff w(alpha_i) is a negative root
  // (all coordinates <= 0), iff l(w r_i) = l(w) - 1.
  bool is_right_descent(WeylElement w, int i) const;
  bool is_left_descent(WeylElement w, int i) const;

  Weight act(WeylElement w, const Weight& lambda) const;

  WeylElement element_of_word(const Word& q) const;
  // Left fold of the rule  x * r  ->  x r if longer, else x.
  WeylElement demazure_product(const Word& q) const;

  // All elements, sorted by (length, canonical word). Throws DomainError if
  // the group has more than `cap` elements (infinite-type guard).
  std::vector<WeylElement> enumerate(size_t cap = 1u << 20) const;

  // All reduced words of w, in lexicographic order.
  std::vector<Word> reduced_words(WeylElement w) const;

  size_t interned_count() const;

  // Rehydrates a handle from a previously obtained id (bounds-checked).
  WeylElement element_by_id(uint32_t id) const;

 private:
  struct Elem;
  const Elem& elem(uint32_t id) const;
  uint32_t intern(const std::vector<int32_t>& mat) const;
  friend class WeylElement;

  CartanData cartan_;
  mutable std::mutex mu_;
  // Chunked element store: blocks never move, so readers only need the
  // release/acquire pair on count_ after obtaining an id.
  static constexpr int kBlockBits = 10;
  static constexpr size_t kBlockSize = size_t(1) << kBlockBits;
  static constexpr size_t kMaxBlocks = 4096;
  mutable std::array<std::atomic<Elem*>, kMaxBlocks> blocks_{};
  mutable std::atomic<size_t> count_{0};
  mutable std::unordered_map<std::string, uint32_t> index_;  // packed matrix

 public:
  ~WeylGroup();
};

// Bruhat order via the descent lifting property.
bool bruhat_leq(WeylElement u, WeylElement w);

// All subword bitmasks of q whose (ordinary-reduced or Demazure) product is
// `target`, in ascending bitmask order; bit k corresponds to position k.
// In ReducedOrdinary mode only subwords that are reduced words count.
std::vector<Mask> subwords_with_product(const WeylGroup& g, const Word& q,
                                        WeylElement target, SubwordMode mode);

// Positions of a mask in ascending order.
std::vector<int> mask_positions(Mask m, size_t len);
std::string mask_to_string(Mask m, size_t len);  // e.g. "110" for positions 1,2
Mask mask_from_string(const std::string& s);

}  // namespace schub
