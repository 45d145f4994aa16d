// SignMask: a subset of an indexed ground set as a bit pattern, doubling as a
// sign vector. Bit k set means element k is in the subset and epsilon_k = -1.
#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "signcount/common.hpp"

namespace signcount {

struct SignMask {
  std::uint64_t bits = 0;
  int width = 0;  // ground-set size m, 0 <= m <= 63

  SignMask() = default;
  SignMask(std::uint64_t b, int m) : bits(b), width(m) {
    assert(m >= 0 && m <= 63);
    assert(m == 64 || (b >> m) == 0);  // no set bit at position >= m
  }

  bool test(int k) const { return (bits >> k) & 1; }
  int sign(int k) const { return test(k) ? -1 : +1; }
  int popcount() const { return std::popcount(bits); }

  SignMask complement() const {
    std::uint64_t all = (width == 64) ? ~0ull : ((1ull << width) - 1);
    return SignMask(bits ^ all, width);
  }

  friend bool operator==(const SignMask&, const SignMask&) = default;
};

// (-1)^|A|, the product of the signs
inline int parity_sign(SignMask mask) { return popcount_parity_sign(mask.bits); }

// "(+1,-1,...)" rendering used for witness reporting
std::string to_pm_string(SignMask mask);

}  // namespace signcount
