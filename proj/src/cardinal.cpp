#include "qrep/cardinal.hpp"

#include <algorithm>
#include <limits>

namespace qrep {

Cardinal Cardinal::successor() const {
  switch (kind_) {
    case Kind::Finite:
      if (n_ == std::numeric_limits<std::uint64_t>::max()) return aleph0();
      return finite(n_ + 1);
    case Kind::Aleph0:
      return aleph1();
    case Kind::Aleph1:
      break;
  }
  throw CardinalRangeError("successor of aleph1 is outside the representable range");
}

std::string Cardinal::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(n_);
    case Kind::Aleph0:
      return "aleph0";
    case Kind::Aleph1:
      return "aleph1";
  }
  return "?";
}

Cardinal Cardinal::parse(const std::string& text) {
  if (text == "aleph0" || text == "Aleph0") return aleph0();
  if (text == "aleph1" || text == "Aleph1") return aleph1();
  std::size_t used = 0;
  const auto n = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument("not a cardinal: " + text);
  return finite(n);
}

Cardinal cardinal_sup(const CardinalFamily& family) {
  Cardinal sup = Cardinal::finite(0);
  for (const auto& c : family.members) sup = std::max(sup, c);
  if (family.unbounded_finite && sup.is_finite()) sup = Cardinal::aleph0();
  return sup;
}

Cardinal cardinal_size(const CardinalFamily& family) {
  if (family.empty()) return Cardinal::finite(0);
  const Cardinal sup = cardinal_sup(family);
  const bool attained =
      std::find(family.members.begin(), family.members.end(), sup) != family.members.end();
  return attained ? sup.successor() : sup;
}

Cardinal cardinal_size(const std::vector<Cardinal>& members) {
  CardinalFamily family;
  family.members = members;
  return cardinal_size(family);
}

}  // namespace qrep
