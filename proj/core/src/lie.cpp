#include "grt/lie.hpp"

#include <algorithm>
#include <unordered_map>

#include "grt/detail/cache.hpp"

namespace grt {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Unsupported, "structure constant overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Unsupported, "structure constant overflow");
  return r;
}

IntCombo normalize(std::unordered_map<Word, std::int64_t>& acc) {
  IntCombo out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (c != 0) out.emplace_back(w, c);
  std::sort(out.begin(), out.end());
  return out;
}

void accumulate(std::unordered_map<Word, std::int64_t>& acc, const IntCombo& combo,
                std::int64_t scale) {
  for (const auto& [w, c] : combo) {
    auto& slot = acc[w];
    slot = checked_add(slot, checked_mul(c, scale));
  }
}

detail::ConcurrentCache<std::string, IntCombo>& bracket_cache() {
  static detail::ConcurrentCache<std::string, IntCombo> cache;
  return cache;
}

detail::ConcurrentCache<Word, IntCombo>& expansion_cache() {
  static detail::ConcurrentCache<Word, IntCombo> cache;
  return cache;
}

IntCombo compute_lyndon_bracket(const Word& u, const Word& v) {
  if (u == v) return {};
  if (u > v) {
    IntCombo r = *lyndon_bracket(v, u);
    for (auto& [w, c] : r) c = -c;
    return r;
  }
  // u < v, so uv is Lyndon. Its standard factorization is (u, v) exactly
  // when u is a letter or the right factor of u is >= v.
  if (u.size() == 1) return {{u + v, 1}};
  auto [u1, u2] = standard_factorization(u);
  if (u2 >= v) return {{u + v, 1}};
  // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
  std::unordered_map<Word, std::int64_t> acc;
  for (const auto& [w, c] : *lyndon_bracket(u2, v)) accumulate(acc, *lyndon_bracket(u1, w), c);
  for (const auto& [w, c] : *lyndon_bracket(u1, v)) accumulate(acc, *lyndon_bracket(u2, w), -c);
  return normalize(acc);
}

IntCombo compute_sigma_expansion(const Word& w) {
  if (w.size() == 1) return {{w, 1}};
  auto [u, v] = standard_factorization(w);
  auto eu = sigma_expansion(u);
  auto ev = sigma_expansion(v);
  std::unordered_map<Word, std::int64_t> acc;
  acc.reserve(2 * eu->size() * ev->size());
  for (const auto& [a, c] : *eu) {
    for (const auto& [b, d] : *ev) {
      const std::int64_t p = checked_mul(c, d);
      auto& s1 = acc[a + b];
      s1 = checked_add(s1, p);
      auto& s2 = acc[b + a];
      s2 = checked_add(s2, -p);
    }
  }
  return normalize(acc);
}

template <class K>
std::string coefficient_text(const K& c);

template <>
std::string coefficient_text(const Rational& c) {
  return to_string(c);
}

template <>
std::string coefficient_text(const ModInt& c) {
  return to_string(c);
}

bool is_one(const Rational& c) { return c == 1; }
bool is_one(const ModInt& c) { return c.value() == 1 % c.modulus(); }
bool is_negative(const Rational& c) { return sgn(c) < 0; }
bool is_negative(const ModInt&) { return false; }
Rational absolute(const Rational& c) { return abs(c); }
ModInt absolute(const ModInt& c) { return c; }

template <class K>
std::string format_lie(const BasicLieElement<K>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : e.terms()) {
    const std::string atom = bracketing(*e.alphabet(), key.word);
    if (first) {
      out += is_one(c) ? atom : coefficient_text(c) + "*" + atom;
      first = false;
      continue;
    }
    out += is_negative(c) ? " - " : " + ";
    const K mag = absolute(c);
    out += is_one(mag) ? atom : coefficient_text(mag) + "*" + atom;
  }
  return out;
}

}  // namespace

std::shared_ptr<const IntCombo> lyndon_bracket(const Word& u, const Word& v) {
  std::string key = u;
  key.push_back('\x7f');
  key += v;
  return bracket_cache().get_or_compute(key, [&] { return compute_lyndon_bracket(u, v); });
}

std::shared_ptr<const IntCombo> sigma_expansion(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::Precondition, "empty word has no bracketing");
  return expansion_cache().get_or_compute(w, [&] { return compute_sigma_expansion(w); });
}

LieElement generator(const AlphabetPtr& alphabet, const std::string& name) {
  auto idx = alphabet->index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
  return LieElement::basis(alphabet, letter_word(*idx), Rational(1));
}

ModLieElement reduce_mod(const LieElement& e, std::uint64_t modulus) {
  ModLieElement out(e.alphabet());
  for (const auto& [key, c] : e.terms()) {
    ModInt num(modulus, c.get_num());
    ModInt den(modulus, c.get_den());
    out.add_basis_term(key, num * den.inverse());
  }
  return out;
}

std::string bracketing(const GradedAlphabet& alphabet, const Word& w) {
  if (w.size() == 1) return alphabet[static_cast<unsigned char>(w[0])].name;
  auto [u, v] = standard_factorization(w);
  return "[" + bracketing(alphabet, u) + "," + bracketing(alphabet, v) + "]";
}

std::string to_string(const LieElement& e) { return format_lie(e); }
std::string to_string(const ModLieElement& e) { return format_lie(e); }

std::string to_string(const AssocPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const std::string word = p.alphabet()->spell(w);
    if (first) {
      out += c == 1 ? word : to_string(c) + "*" + word;
      first = false;
      continue;
    }
    out += sgn(c) < 0 ? " - " : " + ";
    Rational mag = abs(c);
    out += mag == 1 ? word : to_string(mag) + "*" + word;
  }
  return out;
}

}  // namespace grt
