#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "revccs/errors.hpp"

namespace revccs {

// Fixed-capacity set of event indices, used for configurations.
class EventSet {
 public:
  static constexpr std::size_t kCapacity = 128;

  EventSet() = default;

  static EventSet of(std::initializer_list<std::size_t> events) {
    EventSet s;
    for (auto e : events) s.insert(e);
    return s;
  }

  static void check_index(std::size_t e) {
    if (e >= kCapacity) {
      throw Error(ErrorKind::CapacityExceeded,
                  "event index " + std::to_string(e) + " exceeds capacity " +
                      std::to_string(kCapacity));
    }
  }

  void insert(std::size_t e) {
    check_index(e);
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  void erase(std::size_t e) {
    if (e < kCapacity) words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }
  bool contains(std::size_t e) const {
    return e < kCapacity && ((words_[e / 64] >> (e % 64)) & 1U);
  }
  EventSet with(std::size_t e) const {
    EventSet s = *this;
    s.insert(e);
    return s;
  }
  EventSet without(std::size_t e) const {
    EventSet s = *this;
    s.erase(e);
    return s;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  bool empty() const { return words_[0] == 0 && words_[1] == 0; }

  bool subset_of(const EventSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  EventSet operator|(const EventSet& o) const {
    EventSet s;
    s.words_[0] = words_[0] | o.words_[0];
    s.words_[1] = words_[1] | o.words_[1];
    return s;
  }
  EventSet operator&(const EventSet& o) const {
    EventSet s;
    s.words_[0] = words_[0] & o.words_[0];
    s.words_[1] = words_[1] & o.words_[1];
    return s;
  }
  EventSet operator-(const EventSet& o) const {
    EventSet s;
    s.words_[0] = words_[0] & ~o.words_[0];
    s.words_[1] = words_[1] & ~o.words_[1];
    return s;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= words_[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  // Ordered by cardinality first, then by bit pattern.
  friend std::strong_ordering operator<=>(const EventSet& a, const EventSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }
  friend bool operator==(const EventSet& a, const EventSet& b) = default;

 private:
  std::uint64_t words_[2] = {0, 0};
};

struct EventSetHash {
  std::size_t operator()(const EventSet& s) const { return s.hash(); }
};

}  // namespace revccs
