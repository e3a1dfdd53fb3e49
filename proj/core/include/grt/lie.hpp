#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grt/alphabet.hpp"
#include "grt/error.hpp"
#include "grt/lyndon.hpp"
#include "grt/numeric.hpp"

namespace grt {

/// Sparse integer combination of words, sorted by word.
using IntCombo = std::vector<std::pair<Word, std::int64_t>>;

/// [sigma(u), sigma(v)] in the Lyndon basis, for Lyndon words u and v. The
/// structure constants depend only on letter order, so one table serves every
/// alphabet and every coefficient ring.
std::shared_ptr<const IntCombo> lyndon_bracket(const Word& u, const Word& v);

/// Expansion of the standard bracketing sigma(w) in the tensor algebra.
std::shared_ptr<const IntCombo> sigma_expansion(const Word& w);

/// Basis label ordered by (degree, lexicographic word).
struct BasisKey {
  int degree = 0;
  Word word;
  auto operator<=>(const BasisKey&) const = default;
};

template <class K>
class BasicLieElement {
 public:
  using Coefficient = K;
  using Terms = std::map<BasisKey, K>;

  BasicLieElement() = default;
  explicit BasicLieElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  /// coeff * sigma(word); `word` must be Lyndon over the alphabet.
  static BasicLieElement basis(AlphabetPtr alphabet, const Word& word, K coeff) {
    BasicLieElement e(std::move(alphabet));
    e.add_term(word, std::move(coeff));
    return e;
  }

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds coeff * sigma(word), validating the word.
  void add_term(const Word& word, const K& coeff) {
    require_alphabet();
    for (char c : word)
      if (static_cast<unsigned char>(c) >= alphabet_->size())
        throw Error(ErrorCode::AlphabetMismatch, "letter outside alphabet");
    if (!is_lyndon(word)) throw Error(ErrorCode::Precondition, "basis words must be Lyndon");
    add_basis_term(BasisKey{alphabet_->degree(word), word}, coeff);
  }

  /// Unchecked accumulate; `key` must be a valid Lyndon basis label.
  void add_basis_term(const BasisKey& key, const K& coeff) {
    if (grt::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (grt::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::optional<K> coefficient(const Word& word) const {
    if (!alphabet_) return std::nullopt;
    auto it = terms_.find(BasisKey{alphabet_->degree(word), word});
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  std::set<int> degrees() const {
    std::set<int> out;
    for (const auto& [key, c] : terms_) out.insert(key.degree);
    return out;
  }

  bool is_homogeneous() const { return degrees().size() <= 1; }

  /// Degree of a nonzero homogeneous element; nullopt for zero, throws
  /// Error(NotHomogeneous) otherwise.
  std::optional<int> degree() const {
    auto ds = degrees();
    if (ds.empty()) return std::nullopt;
    if (ds.size() > 1) throw Error(ErrorCode::NotHomogeneous, "element is not homogeneous");
    return *ds.begin();
  }

  BasicLieElement component(int degree) const {
    BasicLieElement out(alphabet_);
    for (const auto& [key, c] : terms_)
      if (key.degree == degree) out.terms_.emplace(key, c);
    return out;
  }

  /// Drops every component of degree above `max_degree`.
  BasicLieElement truncated(int max_degree) const {
    BasicLieElement out(alphabet_);
    for (const auto& [key, c] : terms_)
      if (key.degree <= max_degree) out.terms_.emplace(key, c);
    return out;
  }

  BasicLieElement& operator+=(const BasicLieElement& other) {
    adopt_alphabet(other);
    for (const auto& [key, c] : other.terms_) add_basis_term(key, c);
    return *this;
  }
  BasicLieElement& operator-=(const BasicLieElement& other) {
    adopt_alphabet(other);
    for (const auto& [key, c] : other.terms_) add_basis_term(key, -c);
    return *this;
  }
  BasicLieElement operator-() const {
    BasicLieElement out(alphabet_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
  }
  friend BasicLieElement operator+(BasicLieElement a, const BasicLieElement& b) { return a += b; }
  friend BasicLieElement operator-(BasicLieElement a, const BasicLieElement& b) { return a -= b; }
  friend BasicLieElement operator*(const K& s, const BasicLieElement& a) {
    BasicLieElement out(a.alphabet_);
    if (grt::is_zero(s)) return out;
    for (const auto& [key, c] : a.terms_) out.add_basis_term(key, s * c);
    return out;
  }
  friend bool operator==(const BasicLieElement& a, const BasicLieElement& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || same_alphabet(a.alphabet_, b.alphabet_));
  }

 private:
  void require_alphabet() const {
    if (!alphabet_) throw Error(ErrorCode::AlphabetMismatch, "element has no alphabet");
  }
  void adopt_alphabet(const BasicLieElement& other) {
    if (!alphabet_) {
      alphabet_ = other.alphabet_;
    } else if (other.alphabet_ && !same_alphabet(alphabet_, other.alphabet_)) {
      throw Error(ErrorCode::AlphabetMismatch, "elements live over different alphabets");
    }
  }

  AlphabetPtr alphabet_;
  Terms terms_;
};

using LieElement = BasicLieElement<Rational>;
using ModLieElement = BasicLieElement<ModInt>;

/// Lie bracket in the Lyndon basis. With `cap`, components of degree above
/// the cap are dropped.
template <class K>
BasicLieElement<K> bracket(const BasicLieElement<K>& a, const BasicLieElement<K>& b,
                           std::optional<int> cap = std::nullopt) {
  if (a.alphabet() && b.alphabet() && !same_alphabet(a.alphabet(), b.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "bracket of elements over different alphabets");
  BasicLieElement<K> out(a.alphabet() ? a.alphabet() : b.alphabet());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int d = ka.degree + kb.degree;
      if (cap && d > *cap) continue;
      if (ka.word == kb.word) continue;
      auto combo = lyndon_bracket(ka.word, kb.word);
      if (combo->empty()) continue;
      const K prod = ca * cb;
      for (const auto& [w, s] : *combo) out.add_basis_term(BasisKey{d, w}, scaled(prod, s));
    }
  }
  return out;
}

/// The generator named `name` with coefficient 1.
LieElement generator(const AlphabetPtr& alphabet, const std::string& name);

/// Reduces integral (or m-coprime-denominator) coefficients modulo m.
ModLieElement reduce_mod(const LieElement& e, std::uint64_t modulus);

/// Element of the free associative algebra (tensor algebra).
template <class K>
class BasicAssocPoly {
 public:
  using Terms = std::map<Word, K>;

  BasicAssocPoly() = default;
  explicit BasicAssocPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Word& word, const K& coeff) {
    if (grt::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (!inserted) {
      it->second += coeff;
      if (grt::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coefficient_or(const Word& word, const K& zero) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? zero : it->second;
  }

  BasicAssocPoly truncated(int max_degree) const {
    BasicAssocPoly out(alphabet_);
    for (const auto& [w, c] : terms_)
      if (alphabet_->degree(w) <= max_degree) out.terms_.emplace(w, c);
    return out;
  }

  BasicAssocPoly& operator+=(const BasicAssocPoly& o) {
    if (!alphabet_) alphabet_ = o.alphabet_;
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  BasicAssocPoly& operator-=(const BasicAssocPoly& o) {
    if (!alphabet_) alphabet_ = o.alphabet_;
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend BasicAssocPoly operator+(BasicAssocPoly a, const BasicAssocPoly& b) { return a += b; }
  friend BasicAssocPoly operator-(BasicAssocPoly a, const BasicAssocPoly& b) { return a -= b; }
  friend BasicAssocPoly operator*(const K& s, const BasicAssocPoly& a) {
    BasicAssocPoly out(a.alphabet_);
    for (const auto& [w, c] : a.terms_) out.add_term(w, s * c);
    return out;
  }
  friend BasicAssocPoly operator*(const BasicAssocPoly& a, const BasicAssocPoly& b) {
    BasicAssocPoly out(a.alphabet_ ? a.alphabet_ : b.alphabet_);
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) out.add_term(u + v, c * d);
    return out;
  }
  friend bool operator==(const BasicAssocPoly& a, const BasicAssocPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  AlphabetPtr alphabet_;
  Terms terms_;
};

using AssocPoly = BasicAssocPoly<Rational>;
using ModAssocPoly = BasicAssocPoly<ModInt>;

template <class K>
BasicAssocPoly<K> commutator(const BasicAssocPoly<K>& a, const BasicAssocPoly<K>& b) {
  return a * b - b * a;
}

/// Image in the tensor algebra: sigma(w) expanded as iterated commutators.
template <class K>
BasicAssocPoly<K> expand_assoc(const BasicLieElement<K>& e) {
  BasicAssocPoly<K> out(e.alphabet());
  for (const auto& [key, c] : e.terms())
    for (const auto& [w, s] : *sigma_expansion(key.word)) out.add_term(w, scaled(c, s));
  return out;
}

/// Inverse of expand_assoc by triangular elimination: the least word of
/// sigma(w) is w with coefficient 1. Throws Error(NotALiePolynomial) when a
/// non-Lyndon word survives.
template <class K>
BasicLieElement<K> project_lyndon(const BasicAssocPoly<K>& p) {
  if (!p.alphabet() && !p.is_zero())
    throw Error(ErrorCode::AlphabetMismatch, "polynomial has no alphabet");
  BasicLieElement<K> out(p.alphabet());
  auto residual = p.terms();
  while (!residual.empty()) {
    auto it = residual.begin();
    const Word w = it->first;
    const K c = it->second;
    if (!is_lyndon(w))
      throw Error(ErrorCode::NotALiePolynomial,
                  "word '" + p.alphabet()->spell(w) + "' survives elimination");
    out.add_basis_term(BasisKey{p.alphabet()->degree(w), w}, c);
    for (const auto& [v, s] : *sigma_expansion(w)) {
      auto [jt, inserted] = residual.try_emplace(v, -scaled(c, s));
      if (!inserted) {
        jt->second -= scaled(c, s);
        if (grt::is_zero(jt->second)) residual.erase(jt);
      }
    }
  }
  return out;
}

/// Standard bracketing of a Lyndon word using letter names, e.g. "[x,[x,y]]".
std::string bracketing(const GradedAlphabet& alphabet, const Word& lyndon_word);

/// Canonical text: terms by (degree, word), lowest-terms coefficients, basis
/// elements as standard bracketings; "0" for the zero element.
std::string to_string(const LieElement& e);
std::string to_string(const ModLieElement& e);
std::string to_string(const AssocPoly& p);

}  // namespace grt
