#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nestchroma {

// fixed-capacity bitset sized at construction; all binary ops assume equal capacity
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int capacity() const { return bits_; }

  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  // any strict total order; used to group equal rows deterministically
  bool operator<(const Bitset& o) const { return words_ < o.words_; }

  // first set bit at index >= from, or -1
  int next(int from) const {
    if (from >= bits_) return -1;
    int w = from >> 6;
    uint64_t cur = words_[w] & (~uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w >= static_cast<int>(words_.size())) return -1;
      cur = words_[w];
    }
  }
  int first() const { return next(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace nestchroma
