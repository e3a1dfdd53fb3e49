#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grt/lie.hpp"
#include "grt/linalg.hpp"

namespace grt {

/// Element of the free nilpotent Lie algebra of class c, read as a group
/// element through exp/log coordinates.
class NilpotentElement {
 public:
  /// Components of degree above `nil_class` are dropped.
  NilpotentElement(LieElement value, int nil_class);
  static NilpotentElement identity(AlphabetPtr alphabet, int nil_class);

  const LieElement& value() const noexcept { return value_; }
  int nil_class() const noexcept { return class_; }
  const AlphabetPtr& alphabet() const noexcept { return value_.alphabet(); }

  friend bool operator==(const NilpotentElement& a, const NilpotentElement& b) {
    return a.class_ == b.class_ && a.value_ == b.value_;
  }

 private:
  LieElement value_;
  int class_;
};

/// Dynkin coefficients of log(e^A e^B) in degree d: words over {0 = A, 1 = B}
/// standing for right-nested brackets [l1,[l2,[...,ld]]]. Cached.
const std::vector<std::pair<Word, Rational>>& dynkin_terms(int degree);

NilpotentElement bch(const NilpotentElement& a, const NilpotentElement& b);
NilpotentElement inverse(const NilpotentElement& a);
/// a b a^-1 b^-1.
NilpotentElement group_commutator(const NilpotentElement& a, const NilpotentElement& b);

/// Product of whitespace-separated tokens `g`, `g^-1`, `g^k`. The empty word
/// is the identity.
NilpotentElement word_to_group(const std::string& word, const AlphabetPtr& alphabet,
                               int nil_class);

struct FreeGroupSpec {
  int generators = 2;
  int nil_class = 2;
};
struct LatticeTimesCyclicSpec {
  int rank = 1;
  Integer torsion = 2;
};
struct SubgroupOfNilpotentSpec {
  std::vector<NilpotentElement> generators;
};
using FilteredGroupSpec =
    std::variant<FreeGroupSpec, LatticeTimesCyclicSpec, SubgroupOfNilpotentSpec>;

/// Alphabet used for FreeGroup(k, c): x, y for k = 2, otherwise a, b, c, ...
AlphabetPtr free_group_alphabet(int generators);

struct FiltrationRow {
  int m = 0;
  /// Rank of the degree-m lattice of the lower central series.
  std::size_t rank = 0;
  /// Torsion of the D-graded quotient (empty: the saturation is torsion-free).
  std::vector<Integer> torsion;
  /// Invariants of D^m / L^m.
  std::vector<Integer> d_mod_l;
  /// Torsion of the L-graded quotient, where the family knows it directly.
  std::optional<std::vector<Integer>> lcs_torsion;
};

/// Rows m = 1..max_m. For nilpotent ambients the degree-m lattice is the
/// Z-span of degree-m parts of m-fold left-normed commutators of the
/// generators, and D^m is its saturation (induced-graded filtration).
std::vector<FiltrationRow> filtration_report(const FilteredGroupSpec& spec, int max_m);

}  // namespace grt
