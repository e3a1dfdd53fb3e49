#include "grt/malcev.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "grt/error.hpp"

namespace grt {

namespace {

constexpr int kMaxClass = 12;

void require_compatible(const NilpotentElement& a, const NilpotentElement& b) {
  if (a.nil_class() != b.nil_class())
    throw Error(ErrorCode::ClassMismatch, "elements have classes " +
                                              std::to_string(a.nil_class()) + " and " +
                                              std::to_string(b.nil_class()));
  if (a.alphabet() && b.alphabet() && !same_alphabet(a.alphabet(), b.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "elements live over different alphabets");
}

std::vector<std::pair<Word, Rational>> compute_dynkin_terms(int d) {
  std::map<Word, Rational> acc;
  // Sequences of blocks A^r B^s with r + s >= 1 and total length d.
  std::vector<std::pair<int, int>> blocks;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      const int k = static_cast<int>(blocks.size());
      Integer denom = Integer(k) * d;
      Word w;
      for (auto [r, s] : blocks) {
        denom *= factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(s));
        w.append(static_cast<std::size_t>(r), 0);
        w.append(static_cast<std::size_t>(s), 1);
      }
      if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) return;
      Rational c(k % 2 ? 1 : -1, 1);
      c /= denom;
      acc[w] += c;
      return;
    }
    for (int r = 0; r <= left; ++r)
      for (int s = (r == 0 ? 1 : 0); r + s <= left; ++s) {
        blocks.emplace_back(r, s);
        self(self, left - r - s);
        blocks.pop_back();
      }
  };
  rec(rec, d);
  std::vector<std::pair<Word, Rational>> out;
  for (auto& [w, c] : acc)
    if (!is_zero(c)) out.emplace_back(w, c);
  return out;
}

// Lyndon lattice coordinates of a homogeneous component, as integers.
std::vector<Integer> integral_coordinates(const LieElement& e, const std::vector<Word>& basis,
                                          int degree) {
  std::vector<Integer> row(basis.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto it = e.terms().find(BasisKey{degree, basis[j]});
    if (it == e.terms().end()) continue;
    if (it->second.get_den() != 1)
      throw Error(ErrorCode::Unsupported,
                  "degree-" + std::to_string(degree) +
                      " commutator lattice has non-integral Lyndon coordinates");
    row[j] = it->second.get_num();
  }
  return row;
}

std::vector<FiltrationRow> nilpotent_report(const std::vector<NilpotentElement>& gens,
                                            int max_m) {
  const int c = gens.front().nil_class();
  const AlphabetPtr alphabet = gens.front().alphabet();
  for (const auto& g : gens) require_compatible(gens.front(), g);
  if (max_m > c + 1)
    throw Error(ErrorCode::Precondition, "max_m must be at most class + 1 = " + std::to_string(c + 1));

  std::vector<FiltrationRow> rows;
  // Left-normed commutators of every length, built one generator at a time.
  std::vector<NilpotentElement> level = gens;
  for (int m = 1; m <= max_m; ++m) {
    if (m > 1) {
      if (level.size() * gens.size() > 100000)
        throw Error(ErrorCode::Unsupported, "too many iterated commutators");
      std::vector<NilpotentElement> next;
      next.reserve(level.size() * gens.size());
      for (const auto& a : level)
        for (const auto& g : gens) next.push_back(group_commutator(a, g));
      level = std::move(next);
    }
    const auto basis = lyndon_words(*alphabet, m);
    IntMatrix lattice(0, basis.size());
    for (const auto& e : level) {
      auto coords = integral_coordinates(e.value().component(m), basis, m);
      bool nonzero = false;
      for (const auto& v : coords) nonzero |= v != 0;
      if (nonzero) lattice.append_row(coords);
    }
    FiltrationRow row;
    row.m = m;
    if (basis.empty() || lattice.rows() == 0) {
      rows.push_back(row);
      continue;
    }
    row.rank = rank(lattice);
    row.d_mod_l = quotient_invariants(lattice, basis.size()).torsion;
    row.torsion = quotient_invariants(saturation_basis(lattice), basis.size()).torsion;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

NilpotentElement::NilpotentElement(LieElement value, int nil_class)
    : value_(value.truncated(nil_class)), class_(nil_class) {
  if (nil_class < 1) throw Error(ErrorCode::Precondition, "class must be positive");
  if (nil_class > kMaxClass)
    throw Error(ErrorCode::Precondition, "class above " + std::to_string(kMaxClass));
}

NilpotentElement NilpotentElement::identity(AlphabetPtr alphabet, int nil_class) {
  return NilpotentElement(LieElement(std::move(alphabet)), nil_class);
}

const std::vector<std::pair<Word, Rational>>& dynkin_terms(int degree) {
  if (degree < 1 || degree > kMaxClass)
    throw Error(ErrorCode::Precondition, "Dynkin terms are tabulated for degrees 1.." +
                                             std::to_string(kMaxClass));
  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<Word, Rational>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, compute_dynkin_terms(degree)).first;
  return it->second;
}

NilpotentElement bch(const NilpotentElement& a, const NilpotentElement& b) {
  require_compatible(a, b);
  const int c = a.nil_class();
  const AlphabetPtr alphabet = a.alphabet() ? a.alphabet() : b.alphabet();
  if (a.value().is_zero()) return NilpotentElement(b.value(), c);
  if (b.value().is_zero()) return a;
  LieElement out(alphabet);
  std::map<Word, LieElement> nested;
  auto nest = [&](auto&& self, const Word& w) -> const LieElement& {
    if (auto it = nested.find(w); it != nested.end()) return it->second;
    LieElement value = w.size() == 1 ? (w[0] == 0 ? a.value() : b.value())
                                     : bracket(w[0] == 0 ? a.value() : b.value(),
                                               self(self, w.substr(1)), c);
    return nested.emplace(w, std::move(value)).first->second;
  };
  for (int d = 1; d <= c; ++d)
    for (const auto& [w, coeff] : dynkin_terms(d)) {
      const LieElement& term = nest(nest, w);
      if (!term.is_zero()) out += coeff * term;
    }
  return NilpotentElement(std::move(out), c);
}

NilpotentElement inverse(const NilpotentElement& a) {
  return NilpotentElement(-a.value(), a.nil_class());
}

NilpotentElement group_commutator(const NilpotentElement& a, const NilpotentElement& b) {
  return bch(bch(bch(a, b), inverse(a)), inverse(b));
}

NilpotentElement word_to_group(const std::string& word, const AlphabetPtr& alphabet,
                               int nil_class) {
  NilpotentElement acc = NilpotentElement::identity(alphabet, nil_class);
  std::size_t i = 0;
  while (i < word.size()) {
    if (std::isspace(static_cast<unsigned char>(word[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < word.size() && (std::isalnum(static_cast<unsigned char>(word[i])) || word[i] == '_'))
      ++i;
    if (i == start) throw ParseError(start, "expected a generator name");
    const std::string name = word.substr(start, i - start);
    auto idx = alphabet->index_of(name);
    if (!idx)
      throw Error(ErrorCode::UnknownGenerator,
                  "unknown generator '" + name + "' at position " + std::to_string(start));
    long exponent = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      const std::size_t num_start = i;
      if (i < word.size() && word[i] == '-') ++i;
      const std::size_t digits = i;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
      if (i == digits || i - digits > 9) throw ParseError(num_start, "expected an integer exponent");
      exponent = std::stol(word.substr(num_start, i - num_start));
    }
    if (i < word.size() && !std::isspace(static_cast<unsigned char>(word[i])))
      throw ParseError(i, "unexpected character");
    LieElement g = LieElement::basis(alphabet, letter_word(*idx), Rational(exponent));
    acc = bch(acc, NilpotentElement(std::move(g), nil_class));
  }
  return acc;
}

AlphabetPtr free_group_alphabet(int generators) {
  if (generators < 1 || generators > 26)
    throw Error(ErrorCode::Unsupported, "free groups need 1..26 generators");
  if (generators == 2) return GradedAlphabet::xy();
  std::vector<std::string> names;
  for (int i = 0; i < generators; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GradedAlphabet::uniform(names);
}

std::vector<FiltrationRow> filtration_report(const FilteredGroupSpec& spec, int max_m) {
  if (max_m < 1) throw Error(ErrorCode::Precondition, "max_m must be positive");
  return std::visit(
      [&](const auto& s) -> std::vector<FiltrationRow> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FreeGroupSpec>) {
          if (s.nil_class < 1 || s.nil_class > 8)
            throw Error(ErrorCode::Unsupported, "free group class must be 1..8");
          auto alphabet = free_group_alphabet(s.generators);
          std::vector<NilpotentElement> gens;
          for (int i = 0; i < s.generators; ++i)
            gens.emplace_back(LieElement::basis(alphabet, letter_word(static_cast<std::size_t>(i)),
                                                Rational(1)),
                              s.nil_class);
          return nilpotent_report(gens, max_m);
        } else if constexpr (std::is_same_v<T, LatticeTimesCyclicSpec>) {
          if (s.rank < 0 || s.torsion < 1)
            throw Error(ErrorCode::Unsupported, "need rank >= 0 and torsion order >= 1");
          // Abelian: L^2 = 0, while D^m for m >= 2 is the torsion subgroup.
          std::vector<Integer> cyclic;
          if (s.torsion > 1) cyclic.push_back(s.torsion);
          std::vector<FiltrationRow> rows;
          for (int m = 1; m <= max_m; ++m) {
            FiltrationRow row;
            row.m = m;
            if (m == 1) {
              row.rank = static_cast<std::size_t>(s.rank);
              row.lcs_torsion = cyclic;
            } else {
              row.d_mod_l = cyclic;
              row.lcs_torsion = std::vector<Integer>{};
            }
            rows.push_back(std::move(row));
          }
          return rows;
        } else {
          if (s.generators.empty())
            throw Error(ErrorCode::Unsupported, "subgroup needs at least one generator");
          return nilpotent_report(s.generators, max_m);
        }
      },
      spec);
}

}  // namespace grt
