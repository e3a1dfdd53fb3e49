#include "grt/derivation.hpp"

namespace grt {

namespace {

void check_image(const LieElement& image, int expected_degree, const char* which) {
  if (image.is_zero()) return;
  auto d = image.degree();  // throws on inhomogeneous
  if (*d != expected_degree)
    throw Error(ErrorCode::Precondition, std::string("image of ") + which + " has degree " +
                                             std::to_string(*d) + ", expected " +
                                             std::to_string(expected_degree));
}

}  // namespace

Derivation::Derivation(LieElement image_x, LieElement image_y, int degree)
    : image_x_(std::move(image_x)), image_y_(std::move(image_y)), degree_(degree) {
  alphabet_ = image_x_.alphabet() ? image_x_.alphabet() : image_y_.alphabet();
  if (!alphabet_) alphabet_ = GradedAlphabet::xy();
  if (alphabet_->size() != 2)
    throw Error(ErrorCode::AlphabetMismatch, "derivations act on two-generator algebras");
  if (image_x_.alphabet() && image_y_.alphabet() &&
      !same_alphabet(image_x_.alphabet(), image_y_.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "generator images use different alphabets");
  if (degree < 0) throw Error(ErrorCode::Precondition, "derivation degree must be >= 0");
  if (!image_x_.alphabet()) image_x_ = LieElement(alphabet_);
  if (!image_y_.alphabet()) image_y_ = LieElement(alphabet_);
  check_image(image_x_, (*alphabet_)[0].degree + degree, "x");
  check_image(image_y_, (*alphabet_)[1].degree + degree, "y");
}

LieElement apply(const Derivation& d, const LieElement& e) {
  if (e.alphabet() && !same_alphabet(e.alphabet(), d.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "derivation and element use different alphabets");
  if (e.is_zero()) return LieElement(d.alphabet());
  return apply_derivation(d.image_x(), d.image_y(), e);
}

Derivation der_bracket(const Derivation& d1, const Derivation& d2) {
  if (!same_alphabet(d1.alphabet(), d2.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "derivations use different alphabets");
  LieElement ix = apply(d1, d2.image_x()) - apply(d2, d1.image_x());
  LieElement iy = apply(d1, d2.image_y()) - apply(d2, d1.image_y());
  return Derivation(std::move(ix), std::move(iy), d1.degree() + d2.degree());
}

Derivation inner(const LieElement& v) {
  AlphabetPtr alphabet = v.alphabet() ? v.alphabet() : GradedAlphabet::xy();
  if (v.is_zero()) return zero_derivation(alphabet, 0);
  if (!v.is_homogeneous())
    throw Error(ErrorCode::NotHomogeneous, "inner derivation needs a homogeneous element");
  const int n = *v.degree();
  return Derivation(bracket(v, generator(alphabet, (*alphabet)[0].name)),
                    bracket(v, generator(alphabet, (*alphabet)[1].name)), n);
}

Derivation zero_derivation(const AlphabetPtr& alphabet, int degree) {
  return Derivation(LieElement(alphabet), LieElement(alphabet), degree);
}

IntMatrix inner_map_matrix(int degree) {
  if (degree < 1) throw Error(ErrorCode::Precondition, "degree must be >= 1");
  auto alphabet = GradedAlphabet::xy();
  auto source = lyndon_words(*alphabet, degree);
  auto target = lyndon_words(*alphabet, degree + 1);
  std::map<Word, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of[target[i]] = i;
  IntMatrix m(2 * target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    auto d = inner(LieElement::basis(alphabet, source[j], Rational(1)));
    for (const auto& [key, c] : d.image_x().terms()) m(row_of.at(key.word), j) = to_integer(c);
    for (const auto& [key, c] : d.image_y().terms())
      m(target.size() + row_of.at(key.word), j) = to_integer(c);
  }
  return m;
}

std::size_t outder_dim(int degree) {
  IntMatrix m = inner_map_matrix(degree);
  return m.rows() - rank(m);
}

Integer outder_dim_formula(int degree) {
  if (degree < 1) throw Error(ErrorCode::Precondition, "degree must be >= 1");
  const auto n = static_cast<unsigned>(degree);
  return 2 * witt_dim(2, n + 1) - witt_dim(2, n);
}

}  // namespace grt
