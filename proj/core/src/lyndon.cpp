#include "grt/lyndon.hpp"

#include <algorithm>

#include "grt/error.hpp"

namespace grt {

bool is_lyndon(const Word& word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t i = 1; i < n; ++i) {
    // compare word with its rotation starting at i
    for (std::size_t k = 0; k < n; ++k) {
      char a = word[k], b = word[(i + k) % n];
      if (a < b) break;
      if (a > b) return false;
      if (k + 1 == n) return false;  // equal rotation: periodic
    }
  }
  return true;
}

namespace {

// Prenecklace search (Fredricksen-Kessler-Maiorana) bounded by total degree.
// `period` is the length of the longest Lyndon prefix; the prefix is Lyndon
// exactly when period == size.
template <class Visit>
bool extend_prenecklaces(Word& prefix, std::size_t period, int degree, int max_degree,
                         const std::vector<int>& letter_degrees, Visit& visit,
                         std::uint64_t& budget) {
  if (budget == 0) return false;
  --budget;
  visit(prefix, period == prefix.size(), degree);
  const std::size_t t = prefix.size();
  const auto lo = static_cast<unsigned char>(prefix[t - period]);
  for (std::size_t c = lo; c < letter_degrees.size(); ++c) {
    if (degree + letter_degrees[c] > max_degree) continue;
    prefix.push_back(static_cast<char>(c));
    bool ok = extend_prenecklaces(prefix, c == lo ? period : t + 1, degree + letter_degrees[c],
                                  max_degree, letter_degrees, visit, budget);
    prefix.pop_back();
    if (!ok) return false;
  }
  return true;
}

template <class Visit>
bool for_each_prenecklace(const std::vector<int>& letter_degrees, int max_degree, Visit visit,
                          std::uint64_t budget) {
  Word prefix;
  for (std::size_t c = 0; c < letter_degrees.size(); ++c) {
    if (letter_degrees[c] > max_degree) continue;
    prefix.assign(1, static_cast<char>(c));
    if (!extend_prenecklaces(prefix, 1, letter_degrees[c], max_degree, letter_degrees, visit,
                             budget))
      return false;
  }
  return true;
}

}  // namespace

std::vector<Word> lyndon_words(const GradedAlphabet& alphabet, int degree) {
  if (degree < 1) throw Error(ErrorCode::Precondition, "degree must be >= 1");
  std::vector<int> degrees;
  for (const auto& l : alphabet.letters()) degrees.push_back(l.degree);
  std::vector<Word> out;
  for_each_prenecklace(
      degrees, degree,
      [&](const Word& w, bool lyndon, int d) {
        if (lyndon && d == degree) out.push_back(w);
      },
      UINT64_MAX);
  // DFS emits prefixes before extensions and letters in increasing order,
  // which is lexicographic order already; keep the sort as a guard.
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& word) {
  if (word.size() < 2)
    throw Error(ErrorCode::AtomicWord, "standard factorization needs length >= 2");
  for (std::size_t i = 1; i < word.size(); ++i) {
    Word suffix = word.substr(i);
    if (is_lyndon(suffix)) return {word.substr(0, i), suffix};
  }
  // last letter is always Lyndon
  throw Error(ErrorCode::Internal, "no Lyndon suffix found");
}

Integer witt_dim(unsigned num_letters, unsigned degree) {
  if (num_letters < 1 || degree < 1)
    throw Error(ErrorCode::Precondition, "witt_dim needs num_letters >= 1 and degree >= 1");
  Integer sum = 0;
  const Integer k = num_letters;
  for (unsigned d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Integer term = power(k, degree / d);
    sum += mu > 0 ? term : Integer(-term);
  }
  return sum / degree;
}

namespace {

std::vector<Integer> generator_counts(const std::vector<int>& degrees, int max_degree) {
  std::vector<Integer> g(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::Precondition, "generator degrees must be >= 1");
    if (d <= max_degree) g[static_cast<std::size_t>(d)] += 1;
  }
  return g;
}

}  // namespace

DimensionTable necklace_dims(const std::vector<int>& generator_degrees, int max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::Precondition, "max_degree must be >= 1");
  const auto N = static_cast<std::size_t>(max_degree);
  auto g = generator_counts(generator_degrees, max_degree);
  // words[n] = number of words of degree n = [t^n] 1/(1 - g(t))
  std::vector<Integer> words(N + 1, 0);
  words[0] = 1;
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t d = 1; d <= n; ++d)
      if (g[d] != 0) words[n] += g[d] * words[n - d];
  // p[n] = [t^n] t g'(t) / (1 - g(t)) = sum_{d|n} d * dims[d]
  std::vector<Integer> p(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t d = 1; d <= n; ++d)
      if (g[d] != 0) p[n] += Integer(static_cast<unsigned long>(d)) * g[d] * words[n - d];
  DimensionTable dims;
  for (std::size_t n = 1; n <= N; ++n) {
    Integer s = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      int mu = moebius(n / d);
      if (mu > 0) s += p[d];
      if (mu < 0) s -= p[d];
    }
    dims[static_cast<int>(n)] = s / static_cast<unsigned long>(n);
  }
  return dims;
}

std::optional<DimensionTable> lyndon_count_dims(const std::vector<int>& generator_degrees,
                                                int max_degree, std::uint64_t node_budget) {
  if (max_degree < 1) throw Error(ErrorCode::Precondition, "max_degree must be >= 1");
  std::vector<int> degrees = generator_degrees;
  std::sort(degrees.begin(), degrees.end());
  DimensionTable dims;
  for (int n = 1; n <= max_degree; ++n) dims[n] = 0;
  bool complete = for_each_prenecklace(
      degrees, max_degree,
      [&](const Word&, bool lyndon, int d) {
        if (lyndon) dims[d] += 1;
      },
      node_budget);
  if (!complete) return std::nullopt;
  return dims;
}

bool pbw_identity_holds(const std::vector<int>& generator_degrees, const DimensionTable& dims,
                        int max_degree) {
  const auto N = static_cast<std::size_t>(max_degree);
  auto g = generator_counts(generator_degrees, max_degree);
  std::vector<Integer> lhs(N + 1, 0);
  lhs[0] = 1;
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t d = 1; d <= n; ++d)
      if (g[d] != 0) lhs[n] += g[d] * lhs[n - d];
  // product of (1 - t^n)^{-a} = sum_k C(a + k - 1, k) t^{nk}
  std::vector<Integer> rhs(N + 1, 0);
  rhs[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    auto it = dims.find(static_cast<int>(n));
    if (it == dims.end() || it->second == 0) continue;
    const Integer& a = it->second;
    std::vector<Integer> factor(N + 1, 0);
    Integer binom = 1;  // C(a + k - 1, k)
    for (std::size_t k = 0; k * n <= N; ++k) {
      if (k > 0) binom = binom * (a + static_cast<unsigned long>(k) - 1) / static_cast<unsigned long>(k);
      factor[k * n] = binom;
    }
    std::vector<Integer> next(N + 1, 0);
    for (std::size_t i = 0; i <= N; ++i) {
      if (rhs[i] == 0) continue;
      for (std::size_t j = 0; i + j <= N; j += n) next[i + j] += rhs[i] * factor[j];
    }
    rhs = std::move(next);
  }
  return lhs == rhs;
}

DimensionTable weighted_witt_dims(const std::vector<int>& generator_degrees, int max_degree) {
  DimensionTable dims = necklace_dims(generator_degrees, max_degree);
  if (!pbw_identity_holds(generator_degrees, dims, max_degree))
    throw Error(ErrorCode::Internal, "PBW identity fails for computed dimensions");
  if (auto counted = lyndon_count_dims(generator_degrees, max_degree, 200'000)) {
    if (*counted != dims)
      throw Error(ErrorCode::Internal, "Lyndon enumeration disagrees with necklace formula");
  }
  return dims;
}

}  // namespace grt
