#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grt/alphabet.hpp"
#include "grt/numeric.hpp"

namespace grt {

/// Word strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& word);

/// Lyndon words of total degree `degree`, in lexicographic order.
std::vector<Word> lyndon_words(const GradedAlphabet& alphabet, int degree);

/// (u, v) with w = uv and v the longest proper Lyndon suffix. Throws
/// Error(AtomicWord) for single letters.
std::pair<Word, Word> standard_factorization(const Word& word);

/// Dimension of the degree-n part of the free Lie algebra on k letters of
/// degree 1: (1/n) sum_{d|n} mu(d) k^{n/d}.
Integer witt_dim(unsigned num_letters, unsigned degree);

using DimensionTable = std::map<int, Integer>;

/// Dimensions of the free Lie algebra on one generator per listed degree,
/// for every degree 1..max_degree. Computed from the generating function
/// 1/(1 - g(t)) by Möbius inversion, cross-checked against Lyndon
/// enumeration when the enumeration is small and against the PBW product
/// identity always.
DimensionTable weighted_witt_dims(const std::vector<int>& generator_degrees, int max_degree);

/// Möbius-inversion route on its own.
DimensionTable necklace_dims(const std::vector<int>& generator_degrees, int max_degree);

/// Counts Lyndon words by degree with a prenecklace search; nullopt once more
/// than `node_budget` prefixes have been visited.
std::optional<DimensionTable> lyndon_count_dims(const std::vector<int>& generator_degrees,
                                                int max_degree,
                                                std::uint64_t node_budget = 5'000'000);

/// Checks prod_n (1 - t^n)^{-dims[n]} == 1/(1 - g(t)) through t^max_degree.
bool pbw_identity_holds(const std::vector<int>& generator_degrees, const DimensionTable& dims,
                        int max_degree);

/// Tate weight of the degree-n graded piece.
constexpr int weight_of_degree(int degree) { return -2 * degree; }

}  // namespace grt
