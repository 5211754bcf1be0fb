#ifndef UECSP_BIGINT_HPP
#define UECSP_BIGINT_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace uecsp {

// Minimal unsigned big integer: base 2^32 limbs, little endian.  Supports
// exactly what the generalized-Stirling recurrence needs: addition and
// multiplication by a machine word.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<uint32_t>(v));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
  }

  BigUint times(uint32_t k) const {
    BigUint r;
    if (k == 0 || is_zero()) return r;
    r.limbs_.resize(limbs_.size());
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t p = static_cast<uint64_t>(limbs_[i]) * k + carry;
      r.limbs_[i] = static_cast<uint32_t>(p);
      carry = p >> 32;
    }
    while (carry) {
      r.limbs_.push_back(static_cast<uint32_t>(carry));
      carry >>= 32;
    }
    return r;
  }

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }

  double to_double() const {
    double r = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
      r = r * 4294967296.0 + *it;
    return r;
  }

  // natural log; 0 maps to -inf
  double log() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    size_t n = limbs_.size();
    double top = 0;
    size_t used = n > 3 ? 3 : n;
    for (size_t i = 0; i < used; ++i)
      top = top * 4294967296.0 + limbs_[n - 1 - i];
    return std::log(top) + 32.0 * std::log(2.0) * (n - used);
  }

  std::string to_string() const {  // decimal, for debugging and goldens
    if (is_zero()) return "0";
    std::vector<uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
      uint64_t rem = 0;
      for (size_t i = work.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<uint32_t>(cur / 10);
        rem = cur % 10;
      }
      digits.push_back(static_cast<char>('0' + rem));
      while (!work.empty() && work.back() == 0) work.pop_back();
    }
    return std::string(digits.rbegin(), digits.rend());
  }

private:
  std::vector<uint32_t> limbs_;
};

} // namespace uecsp

#endif
