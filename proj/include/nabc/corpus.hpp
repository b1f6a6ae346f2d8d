#pragma once

#include <cstdint>
#include <vector>

#include "nabc/instance.hpp"

namespace nabc {

enum class Coprimality { pairwise, kwise, none };
enum class CharMode { zero, positive, mixed };

struct CorpusSpec {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  /// Positive characteristic uses PRIME_FIELD; the p-adic prime doubles as p.
  CharMode chars = CharMode::zero;
  std::uint32_t p = 3;
  unsigned m = 1;
  /// Instances have n + 1 functions.
  unsigned n = 2;
  unsigned degree = 4;
  Coprimality mode = Coprimality::pairwise;
  /// Every other instance is built from two independent zero-sum groups.
  bool vanishing_subsums = false;
};

/// Random products of distinct low-degree factors, closed by f_n = -(f_0 + ... + f_{n-1}).
/// Same spec gives the same instances. Throws GUARD_EXCEEDED (n > 12, degree > 10,
/// m above the variable cap).
std::vector<Instance> generate_corpus(const CorpusSpec& spec);

}  // namespace nabc
