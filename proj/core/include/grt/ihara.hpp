#pragma once

#include <cstdint>
#include <tuple>
#include <optional>
#include <utility>
#include <vector>

#include "grt/derivation.hpp"
#include "grt/lie.hpp"
#include "grt/linalg.hpp"

namespace grt {

/// Default and absolute degree caps for stable-derivation computations.
inline constexpr int kIharaDefaultDegreeCap = 12;
inline constexpr int kIharaHardDegreeCap = 16;

/// Homogeneous f in p_n (n >= 2) parametrizing the derivation D_f with
/// D_f(x) = 0 and D_f(y) = [y, f].
class IharaElement {
 public:
  /// Checks shape only (two letters of degree 1, homogeneous of degree >= 2).
  explicit IharaElement(LieElement f);
  /// Same, allowing the zero element of the given degree.
  IharaElement(LieElement f, int degree);

  const LieElement& f() const noexcept { return f_; }
  int degree() const noexcept { return degree_; }
  Derivation derivation() const;

  friend bool operator==(const IharaElement& a, const IharaElement& b) { return a.f_ == b.f_; }

 private:
  LieElement f_;
  int degree_;
};

/// [y, f] lies in [z, p_n] for z = -x - y. Evaluated by mapping through the
/// automorphism x -> -x - y, y -> y, which turns the condition into
/// membership in [x, p], a coordinate subspace of the Lyndon basis.
bool satisfies_special_condition(const LieElement& f);

/// Same condition decided by solving [z, g] = [y, f] for g in tensor-algebra
/// coordinates; independent of the Lyndon bracket tables.
bool special_condition_by_expansion(const LieElement& f);

/// Stuffle (double-shuffle) primitivity of f(x, -y) with the usual
/// y^n correction term.
bool satisfies_stuffle_condition(const LieElement& f);

/// Both conditions: membership in the stable derivation algebra D_n.
bool is_stable_derivation(const LieElement& f);

/// The linear system cutting out D_n: integer rows over the Lyndon basis of
/// degree n (stuffle relations followed by special-condition rows).
SmallIntRows stable_derivation_system(int n);

/// Basis of D_n as primitive integral vectors in the Lyndon basis (one per
/// non-pivot column, first nonzero coefficient positive). Cached.
std::vector<IharaElement> special_basis(int n);

/// dim D_n computed from the same system modulo a prime.
std::size_t stable_dimension_mod(int n, std::uint64_t prime);

/// Generator of the rank-one lattice D_m (m odd >= 3) with positive
/// coefficient on ad(x)^{m-1}(y).
IharaElement soule_generator(int m);

/// <f, g> = D_f(g) - D_g(f) + [f, g] over any coefficient ring.
template <class K>
BasicLieElement<K> ihara_bracket_of(const BasicLieElement<K>& f, const BasicLieElement<K>& g) {
  AlphabetPtr alphabet = f.alphabet() ? f.alphabet() : g.alphabet();
  BasicLieElement<K> zero(alphabet);
  if (f.is_zero() || g.is_zero()) return zero;
  BasicLieElement<K> y(alphabet);
  y.add_basis_term(BasisKey{(*alphabet)[1].degree, letter_word(1)},
                   one_like(f.terms().begin()->second));
  BasicLieElement<K> df_y = bracket(y, f);
  BasicLieElement<K> dg_y = bracket(y, g);
  return apply_derivation(zero, df_y, g) - apply_derivation(zero, dg_y, f) + bracket(f, g);
}

/// Ihara bracket of stable derivations. Operands outside D raise
/// Error(Precondition); the result is re-checked and Error(Internal) signals a
/// failed check.
IharaElement ihara_bracket(const IharaElement& f, const IharaElement& g);

using IharaCombination = std::vector<std::pair<Integer, IharaElement>>;

struct CongruenceReport {
  Integer modulus;
  bool divisible = false;
  /// Lyndon coordinates of the combination (nonzero entries, basis order).
  std::vector<std::pair<Word, Integer>> coefficients;
  std::vector<std::pair<Word, Integer>> nondivisible_coefficients;
  /// Result of recomputing the combination with coefficients reduced mod m.
  std::optional<bool> modular_check;
  /// When not divisible: a sign pattern on the combination entries (the only
  /// unimodular changes of rank-one lattice bases) that makes it divisible.
  std::optional<std::vector<int>> sign_change;
};

/// Divisibility of an integer combination of same-degree elements.
CongruenceReport check_congruence(const IharaCombination& combo, const Integer& modulus);

/// Same check, also recomputing each bracket <f_a, f_b> from generators
/// reduced mod m. `pairs` lists (coefficient, a, b).
CongruenceReport check_bracket_congruence(
    const std::vector<std::tuple<Integer, IharaElement, IharaElement>>& pairs,
    const Integer& modulus);

/// 2<D3, D9> - 27<D5, D7> at the given modulus.
CongruenceReport ihara_691_congruence(const Integer& modulus);

struct FreenessRow {
  int degree = 0;
  std::size_t dimension = 0;  // dim D_n
  Integer free_model;         // free Lie algebra on one generator per odd degree >= 3
};

/// Rows for degrees 2..max_degree. Degrees are computed independently on up
/// to `threads` workers and returned in degree order.
std::vector<FreenessRow> freeness_table(int max_degree, unsigned threads = 1,
                                        int degree_cap = kIharaDefaultDegreeCap);

}  // namespace grt
