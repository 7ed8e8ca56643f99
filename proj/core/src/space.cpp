#include "padic/space.hpp"

#include <string_view>

namespace padic {

CompactSpace CompactSpace::finite(std::int64_t n) {
  if (n < 1) throw Error("CompactSpace::finite: need at least one point");
  return CompactSpace(Kind::Finite, n, 0, 0);
}

CompactSpace CompactSpace::zp_level(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw Error("CompactSpace::zp_level: p must be prime");
  if (k < 0) throw Error("CompactSpace::zp_level: level must be >= 0");
  const Integer count = int_pow(p, k);
  if (count > 1'000'000) throw Error("CompactSpace::zp_level: p^k too large for the finite model");
  return CompactSpace(Kind::ZpLevel, count.convert_to<std::int64_t>(), k, p);
}

std::int64_t CompactSpace::level() const {
  if (kind_ != Kind::ZpLevel) throw Error("level(): not a zp_level space");
  return level_;
}

std::int64_t CompactSpace::prime() const {
  if (kind_ != Kind::ZpLevel) throw Error("prime(): not a zp_level space");
  return prime_;
}

std::string CompactSpace::str() const {
  if (kind_ == Kind::Finite) return "finite:" + std::to_string(count_);
  return "zp:" + std::to_string(level_);
}

CompactSpace CompactSpace::parse(std::string_view text, std::int64_t p) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("space '" + std::string(text) + "': expected finite:<n> or zp:<k>");
  }
  const std::string_view head = text.substr(0, colon);
  const std::string tail(text.substr(colon + 1));
  std::int64_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoll(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(tail);
  } catch (const std::exception&) {
    throw ParseError("space '" + std::string(text) + "': bad count/level field");
  }
  if (head == "finite") return finite(n);
  if (head == "zp") return zp_level(p, n);
  throw ParseError("space '" + std::string(text) + "': unknown kind '" + std::string(head) + "'");
}

}  // namespace padic
