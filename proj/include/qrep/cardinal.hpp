#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

class CardinalRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Cardinals up to aleph_1, enough for countable quivers.
class Cardinal {
 public:
  enum class Kind : std::uint8_t { Finite, Aleph0, Aleph1 };

  constexpr Cardinal() = default;

  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Kind::Finite, n); }
  static constexpr Cardinal aleph0() { return Cardinal(Kind::Aleph0, 0); }
  static constexpr Cardinal aleph1() { return Cardinal(Kind::Aleph1, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  // Only meaningful for finite cardinals.
  constexpr std::uint64_t value() const { return n_; }

  Cardinal successor() const;
  std::string to_string() const;
  static Cardinal parse(const std::string& text);

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.n_ <=> b.n_;
  }

 private:
  constexpr Cardinal(Kind k, std::uint64_t n) : kind_(k), n_(n) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t n_ = 0;
};

// A multiset of cardinals. `unbounded_finite` stands for an infinite
// family of finite members with no largest element.
struct CardinalFamily {
  std::vector<Cardinal> members;
  bool unbounded_finite = false;

  void add(Cardinal c) { members.push_back(c); }
  bool empty() const { return members.empty() && !unbounded_finite; }
};

// sup of the family, bumped to the successor when the sup is attained.
// The empty family has size 0.
Cardinal cardinal_size(const CardinalFamily& family);
Cardinal cardinal_size(const std::vector<Cardinal>& members);

Cardinal cardinal_sup(const CardinalFamily& family);

}  // namespace qrep
