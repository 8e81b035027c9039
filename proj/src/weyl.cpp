#include "schub/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <ostream>

#include "schub/error.hpp"

namespace schub {

namespace {

using MatV = std::vector<int32_t>;

MatV identity_matrix(int n) {
  MatV m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// Column j of the generator matrix is e_j - a_{ij} e_i.
MatV generator_matrix(const CartanData& c, int i) {
  int n = c.rank();
  MatV m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[i * n + j] -= c.entry(i, j);
  return m;
}

MatV mat_mul(const MatV& a, const MatV& b, int n) {
  MatV r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int32_t aik = a[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
    }
  return r;
}

// In-place M <- M * M_{r_i}: col_j -= a_{ij} col_i (j != i), col_i <- -col_i.
void right_mul_gen_inplace(const CartanData& c, MatV& m, int i) {
  int n = c.rank();
  std::vector<int32_t> coli(n);
  for (int r = 0; r < n; ++r) coli[r] = m[r * n + i];
  for (int j = 0; j < n; ++j) {
    int32_t a = c.entry(i, j);
    if (!a) continue;
    for (int r = 0; r < n; ++r) m[r * n + j] -= a * coli[r];
  }
}

// In-place M <- M_{r_i} * M: row_i -= sum_j a_{ij} row_j.
void left_mul_gen_inplace(const CartanData& c, MatV& m, int i) {
  int n = c.rank();
  std::vector<int32_t> acc(n, 0);
  for (int j = 0; j < n; ++j) {
    int32_t a = c.entry(i, j);
    if (!a) continue;
    for (int col = 0; col < n; ++col) acc[col] += a * m[j * n + col];
  }
  for (int col = 0; col < n; ++col) m[i * n + col] -= acc[col];
}

// w(alpha_i) is a negative root iff column i is componentwise <= 0.
bool column_nonpositive(const MatV& m, int n, int i) {
  for (int r = 0; r < n; ++r)
    if (m[r * n + i] > 0) return false;
  return true;
}

bool is_identity_matrix(const MatV& m, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i * n + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string pack_key(const MatV& m) {
  std::string s(m.size() * sizeof(int32_t), '\0');
  std::memcpy(s.data(), m.data(), s.size());
  return s;
}

constexpr int kMaxStrips = 1 << 20;

// Strips right descents until the identity. Returns the length and, if
// requested, the inverse matrix (product of the stripped generators in
// strip order).
int strip_length(const CartanData& c, MatV m, MatV* inverse_out) {
  int n = c.rank();
  MatV inv = identity_matrix(n);
  int len = 0;
  while (!is_identity_matrix(m, n)) {
    int d = -1;
    for (int i = 0; i < n; ++i) {
      if (column_nonpositive(m, n, i)) {
        d = i;
        break;
      }
    }
    SCHUB_INTERNAL_CHECK(d >= 0, "non-identity element with no right descent");
    right_mul_gen_inplace(c, m, d);
    if (inverse_out) right_mul_gen_inplace(c, inv, d);
    ++len;
    SCHUB_INTERNAL_CHECK(len < kMaxStrips, "descent stripping did not terminate");
  }
  if (inverse_out) *inverse_out = std::move(inv);
  return len;
}

// Lex-least reduced word: always peel the smallest left descent.
// Left descents of w are the i with w^{-1}(alpha_i) negative.
Word canonical_word_of(const CartanData& c, MatV m, MatV minv) {
  int n = c.rank();
  std::vector<int> letters;
  while (!is_identity_matrix(m, n)) {
    int d = -1;
    for (int i = 0; i < n; ++i) {
      if (column_nonpositive(minv, n, i)) {
        d = i;
        break;
      }
    }
    SCHUB_INTERNAL_CHECK(d >= 0, "non-identity element with no left descent");
    letters.push_back(d);
    left_mul_gen_inplace(c, m, d);
    right_mul_gen_inplace(c, minv, d);
  }
  return Word(std::move(letters));
}

}  // namespace

struct WeylGroup::Elem {
  MatV mat;
  int length = 0;
  Word canonical;
  std::unique_ptr<std::atomic<int32_t>[]> right_cache;
  std::unique_ptr<std::atomic<int32_t>[]> left_cache;
  mutable std::atomic<int32_t> inverse_cache{-1};
};

WeylGroup::WeylGroup(CartanData cartan) : cartan_(std::move(cartan)) {
  intern(identity_matrix(rank()));
}

WeylGroup::~WeylGroup() {
  for (auto& b : blocks_) delete[] b.load(std::memory_order_relaxed);
}

const WeylGroup::Elem& WeylGroup::elem(uint32_t id) const {
  SCHUB_INTERNAL_CHECK(id < count_.load(std::memory_order_acquire),
                       "element id out of range");
  Elem* block = blocks_[id >> kBlockBits].load(std::memory_order_acquire);
  return block[id & (kBlockSize - 1)];
}

uint32_t WeylGroup::intern(const MatV& mat) const {
  std::string key = pack_key(mat);
  std::lock_guard<std::mutex> lk(mu_);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;

  size_t id = count_.load(std::memory_order_relaxed);
  SCHUB_REQUIRE(id < kMaxBlocks * kBlockSize, "too many Weyl group elements");
  size_t b = id >> kBlockBits;
  Elem* block = blocks_[b].load(std::memory_order_relaxed);
  if (!block) {
    block = new Elem[kBlockSize];
    blocks_[b].store(block, std::memory_order_release);
  }
  Elem& e = block[id & (kBlockSize - 1)];
  e.mat = mat;
  MatV inv;
  e.length = strip_length(cartan_, mat, &inv);
  e.canonical = canonical_word_of(cartan_, mat, std::move(inv));
  int n = rank();
  e.right_cache = std::make_unique<std::atomic<int32_t>[]>(n);
  e.left_cache = std::make_unique<std::atomic<int32_t>[]>(n);
  for (int i = 0; i < n; ++i) {
    e.right_cache[i].store(-1, std::memory_order_relaxed);
    e.left_cache[i].store(-1, std::memory_order_relaxed);
  }
  count_.store(id + 1, std::memory_order_release);
  index_.emplace(std::move(key), static_cast<uint32_t>(id));
  return static_cast<uint32_t>(id);
}

WeylElement WeylGroup::identity() const { return WeylElement(this, 0); }

WeylElement WeylGroup::generator(int i) const {
  SCHUB_REQUIRE(i >= 0 && i < rank(), "generator index out of range: " << i + 1);
  return WeylElement(this, intern(generator_matrix(cartan_, i)));
}

WeylElement WeylGroup::multiply(WeylElement a, WeylElement b) const {
  SCHUB_REQUIRE(a.group() == this && b.group() == this,
                "elements from a different group");
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  return WeylElement(this, intern(mat_mul(a.matrix(), b.matrix(), rank())));
}

WeylElement WeylGroup::inverse(WeylElement a) const {
  SCHUB_REQUIRE(a.group() == this, "element from a different group");
  const Elem& ea = elem(a.id());
  int32_t c = ea.inverse_cache.load(std::memory_order_acquire);
  if (c >= 0) return WeylElement(this, static_cast<uint32_t>(c));
  MatV inv;
  strip_length(cartan_, a.matrix(), &inv);
  uint32_t id = intern(inv);
  ea.inverse_cache.store(static_cast<int32_t>(id), std::memory_order_release);
  return WeylElement(this, id);
}

WeylElement WeylGroup::right_mul(WeylElement a, int i) const {
  SCHUB_REQUIRE(a.group() == this, "element from a different group");
  SCHUB_REQUIRE(i >= 0 && i < rank(), "generator index out of range: " << i + 1);
  const Elem& ea = elem(a.id());
  int32_t c = ea.right_cache[i].load(std::memory_order_acquire);
  if (c >= 0) return WeylElement(this, static_cast<uint32_t>(c));
  MatV m = a.matrix();
  right_mul_gen_inplace(cartan_, m, i);
  uint32_t id = intern(m);
  ea.right_cache[i].store(static_cast<int32_t>(id), std::memory_order_release);
  return WeylElement(this, id);
}

WeylElement WeylGroup::left_mul(int i, WeylElement a) const {
  SCHUB_REQUIRE(a.group() == this, "element from a different group");
  SCHUB_REQUIRE(i >= 0 && i < rank(), "generator index out of range: " << i + 1);
  const Elem& ea = elem(a.id());
  int32_t c = ea.left_cache[i].load(std::memory_order_acquire);
  if (c >= 0) return WeylElement(this, static_cast<uint32_t>(c));
  MatV m = a.matrix();
  left_mul_gen_inplace(cartan_, m, i);
  uint32_t id = intern(m);
  ea.left_cache[i].store(static_cast<int32_t>(id), std::memory_order_release);
  return WeylElement(this, id);
}

bool WeylGroup::is_right_descent(WeylElement w, int i) const {
  SCHUB_REQUIRE(i >= 0 && i < rank(), "generator index out of range: " << i + 1);
  return column_nonpositive(w.matrix(), rank(), i);
}

bool WeylGroup::is_left_descent(WeylElement w, int i) const {
  return left_mul(i, w).length() < w.length();
}

Weight WeylGroup::act(WeylElement w, const Weight& lambda) const {
  SCHUB_REQUIRE(lambda.rank() == rank(), "weight rank mismatch");
  int n = rank();
  const MatV& m = w.matrix();
  Weight r = Weight::zero(n);
  for (int row = 0; row < n; ++row) {
    int64_t s = 0;
    for (int col = 0; col < n; ++col)
      s += static_cast<int64_t>(m[row * n + col]) * lambda.coords[col];
    r.coords[row] = static_cast<int32_t>(s);
  }
  return r;
}

WeylElement WeylGroup::element_of_word(const Word& q) const {
  WeylElement x = identity();
  for (int letter : q.letters) x = right_mul(x, letter);
  return x;
}

WeylElement WeylGroup::demazure_product(const Word& q) const {
  WeylElement x = identity();
  for (int letter : q.letters) {
    WeylElement y = right_mul(x, letter);
    if (y.length() > x.length()) x = y;
  }
  return x;
}

std::vector<WeylElement> WeylGroup::enumerate(size_t cap) const {
  std::vector<WeylElement> out;
  std::vector<uint32_t> frontier{0};
  std::unordered_map<uint32_t, bool> seen{{0, true}};
  out.push_back(identity());
  while (!frontier.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t id : frontier) {
      for (int i = 0; i < rank(); ++i) {
        WeylElement y = right_mul(WeylElement(this, id), i);
        if (!seen.count(y.id())) {
          seen[y.id()] = true;
          out.push_back(y);
          next.push_back(y.id());
          SCHUB_REQUIRE(out.size() <= cap,
                        "group enumeration exceeded cap " << cap
                        << " (infinite type?)");
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> WeylGroup::reduced_words(WeylElement w) const {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int i = 0; i < rank(); ++i) {
    WeylElement v = left_mul(i, w);
    if (v.length() != w.length() - 1) continue;
    for (const Word& tail : reduced_words(v)) {
      Word word;
      word.letters.reserve(tail.size() + 1);
      word.letters.push_back(i);
      word.letters.insert(word.letters.end(), tail.letters.begin(),
                          tail.letters.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

size_t WeylGroup::interned_count() const {
  return count_.load(std::memory_order_acquire);
}

WeylElement WeylGroup::element_by_id(uint32_t id) const {
  SCHUB_INTERNAL_CHECK(id < count_.load(std::memory_order_acquire),
                       "element id out of range");
  return WeylElement(this, id);
}

int WeylElement::length() const { return group_->elem(id_).length; }

const Word& WeylElement::canonical_word() const {
  return group_->elem(id_).canonical;
}

const std::vector<int32_t>& WeylElement::matrix() const {
  return group_->elem(id_).mat;
}

bool WeylElement::operator<(const WeylElement& o) const {
  if (length() != o.length()) return length() < o.length();
  return canonical_word() < o.canonical_word();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    os << w[k] + 1;
  }
  if (w.empty()) os << "e";
  return os;
}

std::ostream& operator<<(std::ostream& os, const WeylElement& w) {
  return os << w.canonical_word();
}

bool bruhat_leq(WeylElement u, WeylElement w) {
  SCHUB_REQUIRE(u.group() == w.group(), "elements from different groups");
  const WeylGroup& g = *u.group();
  while (true) {
    if (u.length() > w.length()) return false;
    if (u == w) return true;
    if (w.is_identity()) return false;
    int i = w.canonical_word()[0];  // a left descent of w
    WeylElement wp = g.left_mul(i, w);
    WeylElement up = g.left_mul(i, u);
    if (up.length() < u.length()) u = up;
    w = wp;
  }
}

namespace {

void subword_dfs(const WeylGroup& g, const Word& q, WeylElement target,
                 SubwordMode mode, size_t pos, WeylElement cur, Mask mask,
                 std::vector<Mask>& out) {
  int remaining = static_cast<int>(q.size() - pos);
  if (target.length() - cur.length() > remaining) return;
  if (!bruhat_leq(cur, target)) return;
  if (pos == q.size()) {
    if (cur == target) out.push_back(mask);
    return;
  }
  subword_dfs(g, q, target, mode, pos + 1, cur, mask, out);
  WeylElement nxt = g.right_mul(cur, q[pos]);
  if (nxt.length() == cur.length() + 1) {
    subword_dfs(g, q, target, mode, pos + 1, nxt, mask | (Mask(1) << pos), out);
  } else if (mode == SubwordMode::Demazure) {
    subword_dfs(g, q, target, mode, pos + 1, cur, mask | (Mask(1) << pos), out);
  }
}

}  // namespace

std::vector<Mask> subwords_with_product(const WeylGroup& g, const Word& q,
                                        WeylElement target, SubwordMode mode) {
  SCHUB_REQUIRE(q.size() <= 31, "word too long for bitmask subwords");
  for (int letter : q.letters)
    SCHUB_REQUIRE(letter >= 0 && letter < g.rank(),
                  "word letter out of range: " << letter + 1);
  std::vector<Mask> out;
  subword_dfs(g, q, target, mode, 0, g.identity(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> mask_positions(Mask m, size_t len) {
  std::vector<int> out;
  for (size_t k = 0; k < len; ++k)
    if (m & (Mask(1) << k)) out.push_back(static_cast<int>(k));
  return out;
}

std::string mask_to_string(Mask m, size_t len) {
  std::string s(len, '0');
  for (size_t k = 0; k < len; ++k)
    if (m & (Mask(1) << k)) s[k] = '1';
  return s;
}

Mask mask_from_string(const std::string& s) {
  SCHUB_REQUIRE(s.size() <= 31, "mask string too long");
  Mask m = 0;
  for (size_t k = 0; k < s.size(); ++k) {
    SCHUB_REQUIRE(s[k] == '0' || s[k] == '1',
                  "mask must be a 0/1 string, got '" << s << "'");
    if (s[k] == '1') m |= Mask(1) << k;
  }
  return m;
}

}  // namespace schub
