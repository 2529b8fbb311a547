#pragma once

#include <cstdint>
#include <random>

#include "kummer/classify.hpp"

namespace kummer {

// Seeded source; draws are reduced with plain modulo so replay does not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_(); }
  long uniform(long lo, long hi);  // inclusive
  bool coin() { return (g_() & 1) != 0; }

 private:
  std::mt19937_64 g_;
};

// Random element of A^x: small rational p-adic unit, optionally times a
// u-polynomial of Gauss valuation 0, plus a z-multiple.
FieldElem random_unit(const Field& K, Rng& rng);
// Random nonzero element of K with small coefficients, values roughly in [-2, 3].
FieldElem random_element(const Field& K, Rng& rng);

// Draws x = sum r_i m_i mu^i in B with mu = case_generator; when unit is set,
// retries until w(x) = 0 and x is outside K. SamplerExhausted after 64 tries.
ExtElem sample_integral(const Extension& e, const ExtensionReport& r, Rng& rng, bool unit = true);

}  // namespace kummer
