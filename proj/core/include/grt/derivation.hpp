#pragma once

#include <map>

#include "grt/lie.hpp"
#include "grt/linalg.hpp"

namespace grt {

/// Degree-d derivation of the free Lie algebra on two generators, stored by
/// the images of the generators. Raises degree by d; its weight is -2d.
class Derivation {
 public:
  /// Validates that each nonzero image is homogeneous of degree
  /// deg(generator) + degree.
  Derivation(LieElement image_x, LieElement image_y, int degree);

  const LieElement& image_x() const noexcept { return image_x_; }
  const LieElement& image_y() const noexcept { return image_y_; }
  int degree() const noexcept { return degree_; }
  int weight() const noexcept { return weight_of_degree(degree_); }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  bool is_zero() const { return image_x_.is_zero() && image_y_.is_zero(); }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.degree_ == b.degree_ && a.image_x_ == b.image_x_ && a.image_y_ == b.image_y_;
  }

 private:
  AlphabetPtr alphabet_;
  LieElement image_x_;
  LieElement image_y_;
  int degree_;
};

/// Leibniz extension of generator images to an arbitrary element, recursing
/// over standard bracketings. Works over any coefficient ring.
template <class K>
BasicLieElement<K> apply_derivation(const BasicLieElement<K>& image_x,
                                    const BasicLieElement<K>& image_y,
                                    const BasicLieElement<K>& e) {
  AlphabetPtr alphabet = e.alphabet() ? e.alphabet() : image_x.alphabet();
  BasicLieElement<K> out(alphabet);
  if (e.is_zero()) return out;
  if (alphabet->size() != 2)
    throw Error(ErrorCode::AlphabetMismatch, "derivations act on two-generator algebras");
  for (const auto* img : {&image_x, &image_y})
    if (img->alphabet() && !same_alphabet(img->alphabet(), alphabet))
      throw Error(ErrorCode::AlphabetMismatch, "derivation and element use different alphabets");

  const K one = one_like(e.terms().begin()->second);
  auto sigma = [&](const Word& w) {
    BasicLieElement<K> s(alphabet);
    s.add_basis_term(BasisKey{alphabet->degree(w), w}, one);
    return s;
  };
  std::map<Word, BasicLieElement<K>> memo;
  auto on_basis = [&](auto&& self, const Word& w) -> BasicLieElement<K> {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    BasicLieElement<K> value(alphabet);
    if (w.size() == 1) {
      value = w[0] == 0 ? image_x : image_y;
    } else {
      auto [u, v] = standard_factorization(w);
      value = bracket(self(self, u), sigma(v)) + bracket(sigma(u), self(self, v));
    }
    memo.emplace(w, value);
    return value;
  };
  for (const auto& [key, c] : e.terms()) out += c * on_basis(on_basis, key.word);
  return out;
}

LieElement apply(const Derivation& d, const LieElement& e);

/// [d1, d2] = d1 d2 - d2 d1, determined on generators.
Derivation der_bracket(const Derivation& d1, const Derivation& d2);

/// Adjoint derivation ad_v; v must be homogeneous and nonzero or zero.
Derivation inner(const LieElement& v);

/// Zero derivation of the given degree over x, y.
Derivation zero_derivation(const AlphabetPtr& alphabet, int degree);

/// Matrix (rows: Lyndon coordinates of (ad_v(x), ad_v(y)) in degree n+1
/// twice over; columns: Lyndon basis of degree n) of the inner map in degree n.
IntMatrix inner_map_matrix(int degree);

/// dim Der_n - rank(inner map), computed from the matrix.
std::size_t outder_dim(int degree);
/// Counting formula 2 w(n+1) - w(n) for the same quantity.
Integer outder_dim_formula(int degree);

}  // namespace grt
