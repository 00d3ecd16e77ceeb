#pragma once

// Character degree sets of PSL(2,q) and SL(2,q) from the closed formulas,
// plus degree-set products for direct products of groups.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "degraph/arith.hpp"

namespace degraph {

// A prime power q = u^alpha with q >= 4, the field-size parameter.
struct PrimePowerQ {
  std::uint64_t q;
  std::uint64_t u;
  unsigned alpha;

  static PrimePowerQ of(std::uint64_t q) {
    if (q < 4) throw std::invalid_argument("PrimePowerQ: q must be >= 4");
    auto d = prime_power_decompose(q);
    if (!d) throw std::invalid_argument("PrimePowerQ: q must be a prime power");
    return {q, d->prime, d->exponent};
  }
};

// Finite set of positive integers containing 1; the value type for cd(G).
class DegreeSet {
 public:
  DegreeSet() : values_{1} {}

  explicit DegreeSet(std::vector<std::uint64_t> values) {
    for (std::uint64_t v : values)
      if (v == 0) throw std::invalid_argument("DegreeSet: degrees must be positive");
    values.push_back(1);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    values_ = std::move(values);
  }

  const std::vector<std::uint64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(std::uint64_t d) const {
    return std::binary_search(values_.begin(), values_.end(), d);
  }

  friend bool operator==(const DegreeSet& a, const DegreeSet& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<std::uint64_t> values_;
};

// cd(PSL(2,q)). Branch order: validity, then q = 5, then u = 2, then the
// general odd case with epsilon = (-1)^((q-1)/2).
inline DegreeSet cd_psl2(const PrimePowerQ& q) {
  if (q.q == 5) return DegreeSet({1, 3, 4, 5});
  if (q.u == 2) return DegreeSet({1, q.q - 1, q.q, q.q + 1});
  bool eps_plus = ((q.q - 1) / 2) % 2 == 0;
  std::uint64_t half = eps_plus ? (q.q + 1) / 2 : (q.q - 1) / 2;
  return DegreeSet({1, q.q - 1, q.q, q.q + 1, half});
}

inline DegreeSet cd_psl2(std::uint64_t q) { return cd_psl2(PrimePowerQ::of(q)); }

// cd(SL(2,q)); for odd q > 5 both halves (q-1)/2 and (q+1)/2 occur.
inline DegreeSet cd_sl2(const PrimePowerQ& q) {
  if (q.q == 5) return DegreeSet({1, 2, 3, 4, 5, 6});
  if (q.u == 2) return cd_psl2(q);
  return DegreeSet({1, q.q - 1, q.q, q.q + 1, (q.q - 1) / 2, (q.q + 1) / 2});
}

inline DegreeSet cd_sl2(std::uint64_t q) { return cd_sl2(PrimePowerQ::of(q)); }

// { a*b : a in A, b in B }, deduplicated ascending; overflow is rejected.
inline DegreeSet product_degree_set(const DegreeSet& a, const DegreeSet& b) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size() * b.size());
  for (std::uint64_t x : a.values())
    for (std::uint64_t y : b.values()) {
      std::uint64_t prod;
      if (detail::mul_overflows(x, y, prod))
        throw std::overflow_error("product_degree_set: degree product overflows 64 bits");
      out.push_back(prod);
    }
  return DegreeSet(std::move(out));
}

}  // namespace degraph
