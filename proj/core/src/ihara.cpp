#include "grt/ihara.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "grt/detail/cache.hpp"

namespace grt {

namespace {

constexpr std::uint64_t kSelectionPrime = 2147483647;

void require_two_letters(const AlphabetPtr& alphabet) {
  if (!alphabet || alphabet->size() != 2 || (*alphabet)[0].degree != 1 ||
      (*alphabet)[1].degree != 1)
    throw Error(ErrorCode::AlphabetMismatch, "expected two generators of degree 1");
}

void require_degree(int n) {
  if (n < 2) throw Error(ErrorCode::Precondition, "degree must be at least 2");
  if (n > kIharaHardDegreeCap)
    throw Error(ErrorCode::Precondition,
                "degree " + std::to_string(n) + " exceeds the hard cap " +
                    std::to_string(kIharaHardDegreeCap));
}

// Image of sigma(w) under x -> -x - y, y -> y.
LieElement psi_image(const Word& w);

LieElement compute_psi_image(const Word& w) {
  const AlphabetPtr& ab = GradedAlphabet::xy();
  if (w.size() == 1) {
    LieElement out(ab);
    out.add_basis_term(BasisKey{1, letter_word(1)}, Rational(w[0] == 0 ? -1 : 1));
    if (w[0] == 0) out.add_basis_term(BasisKey{1, letter_word(0)}, Rational(-1));
    return out;
  }
  auto [u, v] = standard_factorization(w);
  return bracket(psi_image(u), psi_image(v));
}

LieElement psi_image(const Word& w) {
  static detail::ConcurrentCache<Word, LieElement> cache;
  return *cache.get_or_compute(w, [&] { return compute_psi_image(w); });
}

LieElement psi(const LieElement& f) {
  LieElement image(GradedAlphabet::xy());
  for (const auto& [key, c] : f.terms()) image += c * psi_image(key.word);
  LieElement out(f.alphabet());
  for (const auto& [key, c] : image.terms()) out.add_basis_term(key, c);
  return out;
}

// Words spanning ad_x(p): x followed by a Lyndon word.
bool in_ad_x_image(const Word& w) { return w.size() >= 2 && w[0] == 0 && is_lyndon(w.substr(1)); }

// --- stuffle relations -----------------------------------------------------
//
// A composition (k1,...,kr) of n is identified with the mask of its partial
// sums below n; its word x^{k1-1}y...x^{kr-1}y has y exactly at positions
// p with p+1 a partial sum.

struct StuffleRelations {
  int degree = 0;
  // Each relation is a functional on words ending in y, keyed by mask.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> relations;
};

using Composition = std::vector<int>;

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      self(self, left - k);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

Word mask_word(std::uint32_t mask, int n) {
  Word w(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p)
    if (p == n - 1 || ((mask >> (p + 1)) & 1u)) w[static_cast<std::size_t>(p)] = 1;
  return w;
}

StuffleRelations compute_stuffle_relations(int n) {
  StuffleRelations out;
  out.degree = n;
  const std::uint32_t all_cuts = (n >= 2) ? ((1u << n) - 2u) : 0u;  // bits 1..n-1
  std::vector<std::int64_t> acc(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> touched;

  const Composition* u = nullptr;
  const Composition* v = nullptr;
  auto walk = [&](auto&& self, std::size_t i, std::size_t j, int total,
                  std::uint32_t mask) -> void {
    if (i == u->size() && j == v->size()) {
      if (acc[mask] == 0) touched.push_back(mask);
      ++acc[mask];
      return;
    }
    auto step = [&](int part, std::size_t ni, std::size_t nj) {
      const int t = total + part;
      self(self, ni, nj, t, t < n ? (mask | (1u << t)) : mask);
    };
    if (i < u->size()) step((*u)[i], i + 1, j);
    if (j < v->size()) step((*v)[j], i, j + 1);
    if (i < u->size() && j < v->size()) step((*u)[i] + (*v)[j], i + 1, j + 1);
  };

  for (int a = 1; 2 * a <= n; ++a) {
    const auto left = compositions(a);
    const auto right = compositions(n - a);
    for (std::size_t iu = 0; iu < left.size(); ++iu) {
      for (std::size_t iv = (2 * a == n ? iu : 0); iv < right.size(); ++iv) {
        u = &left[iu];
        v = &right[iv];
        touched.clear();
        walk(walk, 0, 0, 0, 0u);
        std::sort(touched.begin(), touched.end());
        std::vector<std::pair<std::uint32_t, std::int64_t>> rel;
        std::int64_t correction = 0;
        for (std::uint32_t mask : touched) {
          const std::int64_t mult = acc[mask];
          acc[mask] = 0;
          if (mult == 0) continue;
          // sign (-1)^{#parts} from f(x,-y); factor n clears the 1/n below.
          const int parts = std::popcount(mask) + 1;
          rel.emplace_back(mask, (parts % 2 ? -1 : 1) * n * mult);
          // y^n term of the corrected series: (-1)^{n-1}/n (g | x^{n-1}y),
          // with (g | x^{n-1}y) = -(f | x^{n-1}y).
          if (mask == all_cuts) correction += (n % 2 ? -1 : 1) * mult;
        }
        if (correction != 0) {
          auto it = std::find_if(rel.begin(), rel.end(), [](const auto& t) { return t.first == 0; });
          if (it == rel.end())
            rel.insert(rel.begin(), {0u, correction});
          else
            it->second += correction;
        }
        std::erase_if(rel, [](const auto& t) { return t.second == 0; });
        if (!rel.empty()) out.relations.push_back(std::move(rel));
      }
    }
  }
  return out;
}

std::shared_ptr<const StuffleRelations> stuffle_relations(int n) {
  static detail::ConcurrentCache<int, StuffleRelations> cache;
  return cache.get_or_compute(n, [&] { return compute_stuffle_relations(n); });
}

// Dense table: for each mask, the coefficient of its word in sigma(B[j]).
std::vector<std::vector<std::int64_t>> mask_table(const std::vector<Word>& basis, int n) {
  std::vector<std::vector<std::int64_t>> table(std::size_t{1} << n,
                                               std::vector<std::int64_t>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [w, c] : *sigma_expansion(basis[j])) {
      if (w.back() != 1) continue;
      std::uint32_t mask = 0;
      for (int p = 0; p + 1 < n; ++p)
        if (w[static_cast<std::size_t>(p)] == 1) mask |= 1u << (p + 1);
      table[mask][j] = c;
    }
  }
  return table;
}

// Lyndon coordinates of [y, psi(sigma(B[j]))] on words outside ad_x(p).
SmallIntRows special_rows(const std::vector<Word>& basis, int n) {
  const AlphabetPtr& ab = GradedAlphabet::xy();
  const LieElement y = generator(ab, "y");
  auto targets = lyndon_words(*ab, n + 1);
  std::unordered_map<Word, std::size_t> row_of;
  for (const auto& w : targets)
    if (!in_ad_x_image(w)) row_of.emplace(w, row_of.size());
  SmallIntRows rows(row_of.size(), std::vector<std::int64_t>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const LieElement h = bracket(y, psi_image(basis[j]));
    for (const auto& [key, c] : h.terms()) {
      auto it = row_of.find(key.word);
      if (it == row_of.end()) continue;
      rows[it->second][j] = to_integer(c).get_si();
    }
  }
  std::erase_if(rows, [](const auto& r) {
    return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
  });
  return rows;
}

bool certify(const SmallIntRows& rows, const IntVector& v) {
  for (const auto& r : rows) {
    Integer acc = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0 && v[j] != 0) acc += Integer(static_cast<long>(r[j])) * v[j];
    if (acc != 0) return false;
  }
  return true;
}

IntMatrix to_int_matrix(const SmallIntRows& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer(static_cast<long>(rows[i][j]));
  return m;
}

// Exact kernel of the full system, solved on a subset of rows independent
// mod a prime and then checked against every row.
std::vector<IntVector> certified_kernel(const SmallIntRows& rows, std::size_t cols) {
  auto chosen = independent_rows_mod(rows, cols, kSelectionPrime);
  SmallIntRows picked;
  for (auto i : chosen) picked.push_back(rows[i]);
  auto kernel = kernel_basis(to_int_matrix(picked, cols));
  const bool ok = std::all_of(kernel.begin(), kernel.end(),
                              [&](const IntVector& v) { return certify(rows, v); });
  if (ok) return kernel;
  return kernel_basis(to_int_matrix(rows, cols));
}

LieElement from_coordinates(const std::vector<Word>& basis, const IntVector& v, int n) {
  LieElement f(GradedAlphabet::xy());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (v[j] != 0) f.add_basis_term(BasisKey{n, basis[j]}, Rational(v[j]));
  return f;
}

std::vector<IharaElement> compute_special_basis(int n) {
  const auto basis = lyndon_words(*GradedAlphabet::xy(), n);
  const auto rows = stable_derivation_system(n);
  std::vector<IharaElement> out;
  for (const auto& v : certified_kernel(rows, basis.size()))
    out.emplace_back(from_coordinates(basis, v, n), n);
  return out;
}

Integer integral_coefficient(const Rational& q) {
  if (q.get_den() != 1) throw Error(ErrorCode::Precondition, "coefficient is not integral");
  return q.get_num();
}

Word x_power_y(int m) {
  Word w(static_cast<std::size_t>(m), 0);
  w.back() = 1;
  return w;
}

bool divisible_by(const Integer& value, const Integer& modulus) {
  return mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

std::uint64_t small_modulus(const Integer& modulus) {
  if (modulus < 2) throw Error(ErrorCode::Precondition, "modulus must be at least 2");
  if (!modulus.fits_ulong_p() || modulus > Integer(static_cast<unsigned long>(1) << 62))
    throw Error(ErrorCode::Precondition, "modulus too large for modular recomputation");
  return modulus.get_ui();
}

}  // namespace

IharaElement::IharaElement(LieElement f) : f_(std::move(f)), degree_(0) {
  require_two_letters(f_.alphabet());
  auto d = f_.degree();
  if (!d) throw Error(ErrorCode::Precondition, "zero element needs an explicit degree");
  if (*d < 2) throw Error(ErrorCode::Precondition, "stable derivations start in degree 2");
  degree_ = *d;
}

IharaElement::IharaElement(LieElement f, int degree) : f_(std::move(f)), degree_(degree) {
  if (!f_.alphabet()) f_ = LieElement(GradedAlphabet::xy());
  require_two_letters(f_.alphabet());
  if (degree < 2) throw Error(ErrorCode::Precondition, "stable derivations start in degree 2");
  auto d = f_.degree();
  if (d && *d != degree) throw Error(ErrorCode::Precondition, "element has the wrong degree");
}

Derivation IharaElement::derivation() const {
  const LieElement y = generator(f_.alphabet(), (*f_.alphabet())[1].name);
  return Derivation(LieElement(f_.alphabet()), bracket(y, f_), degree_);
}

bool satisfies_special_condition(const LieElement& f) {
  if (f.is_zero()) return true;
  require_two_letters(f.alphabet());
  const LieElement y = LieElement::basis(f.alphabet(), letter_word(1), Rational(1));
  const LieElement h = bracket(y, psi(f));
  for (const auto& [key, c] : h.terms())
    if (!in_ad_x_image(key.word)) return false;
  return true;
}

bool special_condition_by_expansion(const LieElement& f) {
  if (f.is_zero()) return true;
  require_two_letters(f.alphabet());
  const int n = *f.degree();
  const AlphabetPtr& ab = f.alphabet();
  AssocPoly z(ab), y(ab);
  z.add_term(letter_word(0), Rational(-1));
  z.add_term(letter_word(1), Rational(-1));
  y.add_term(letter_word(1), Rational(1));

  const auto basis = lyndon_words(*ab, n);
  const auto targets = lyndon_words(*ab, n + 1);
  RatMatrix m(targets.size(), basis.size() + 1);
  auto fill = [&](const AssocPoly& p, std::size_t col) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      auto it = p.terms().find(targets[i]);
      if (it != p.terms().end()) m(i, col) = it->second;
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    AssocPoly s(ab);
    for (const auto& [w, c] : *sigma_expansion(basis[j])) s.add_term(w, Rational(c));
    fill(commutator(z, s), j);
  }
  fill(commutator(y, expand_assoc(f)), basis.size());
  RatMatrix a(targets.size(), basis.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) a(i, j) = m(i, j);
  return rank(a) == rank(m);
}

bool satisfies_stuffle_condition(const LieElement& f) {
  if (f.is_zero()) return true;
  require_two_letters(f.alphabet());
  const int n = *f.degree();
  require_degree(n);
  const AssocPoly e = expand_assoc(f);
  for (const auto& rel : stuffle_relations(n)->relations) {
    Rational acc = 0;
    for (const auto& [mask, c] : rel) {
      auto it = e.terms().find(mask_word(mask, n));
      if (it != e.terms().end()) acc += scaled(it->second, c);
    }
    if (!is_zero(acc)) return false;
  }
  return true;
}

bool is_stable_derivation(const LieElement& f) {
  return satisfies_stuffle_condition(f) && satisfies_special_condition(f);
}

SmallIntRows stable_derivation_system(int n) {
  require_degree(n);
  const auto basis = lyndon_words(*GradedAlphabet::xy(), n);
  const auto table = mask_table(basis, n);
  SmallIntRows rows;
  const auto rels = stuffle_relations(n);
  rows.reserve(rels->relations.size());
  std::vector<Int128> acc(basis.size());
  for (const auto& rel : rels->relations) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [mask, c] : rel) {
      const auto& col = table[mask];
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (col[j] != 0) acc[j] += static_cast<Int128>(c) * col[j];
    }
    std::vector<std::int64_t> row(basis.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (acc[j] > std::numeric_limits<std::int64_t>::max() ||
          acc[j] < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::Internal, "stuffle row entry overflows 64 bits");
      row[j] = static_cast<std::int64_t>(acc[j]);
      nonzero |= row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  for (auto& r : special_rows(basis, n)) rows.push_back(std::move(r));
  return rows;
}

std::vector<IharaElement> special_basis(int n) {
  require_degree(n);
  static detail::ConcurrentCache<int, std::vector<IharaElement>> cache;
  return *cache.get_or_compute(n, [&] { return compute_special_basis(n); });
}

std::size_t stable_dimension_mod(int n, std::uint64_t prime) {
  require_degree(n);
  if (!is_probable_prime(prime)) throw Error(ErrorCode::Precondition, "modulus must be prime");
  const std::size_t cols = lyndon_words(*GradedAlphabet::xy(), n).size();
  return cols - rank_mod(stable_derivation_system(n), cols, prime);
}

IharaElement soule_generator(int m) {
  if (m < 3 || m % 2 == 0)
    throw Error(ErrorCode::Precondition, "Soule generators exist for odd m >= 3 only");
  auto basis = special_basis(m);
  if (basis.size() != 1)
    throw Error(ErrorCode::NotOneDimensional, "D_" + std::to_string(m) + " has dimension " +
                                                  std::to_string(basis.size()));
  const LieElement& f = basis.front().f();
  auto lead = f.coefficient(x_power_y(m));
  if (!lead || is_zero(*lead))
    throw Error(ErrorCode::DegenerateLeadingTerm,
                "coefficient of ad(x)^" + std::to_string(m - 1) + "(y) vanishes");
  if (sgn(*lead) < 0) return IharaElement(-f, m);
  return basis.front();
}

IharaElement ihara_bracket(const IharaElement& f, const IharaElement& g) {
  for (const auto* e : {&f, &g})
    if (!e->f().is_zero() && !is_stable_derivation(e->f()))
      throw Error(ErrorCode::Precondition, "operand is not a stable derivation");
  LieElement h = ihara_bracket_of(f.f(), g.f());
  const int degree = f.degree() + g.degree();
  if (!h.is_zero() && !is_stable_derivation(h))
    throw Error(ErrorCode::Internal, "Ihara bracket left the stable derivation algebra");
  return IharaElement(std::move(h), degree);
}

CongruenceReport check_congruence(const IharaCombination& combo, const Integer& modulus) {
  if (modulus < 2) throw Error(ErrorCode::Precondition, "modulus must be at least 2");
  std::optional<int> degree;
  for (const auto& [c, e] : combo) {
    if (degree && *degree != e.degree())
      throw Error(ErrorCode::MixedDegrees, "combination mixes degrees " +
                                               std::to_string(*degree) + " and " +
                                               std::to_string(e.degree()));
    degree = e.degree();
  }

  auto evaluate = [&](const std::vector<int>& signs) {
    LieElement sum(GradedAlphabet::xy());
    for (std::size_t i = 0; i < combo.size(); ++i)
      sum += Rational(combo[i].first * signs[i]) * combo[i].second.f();
    return sum;
  };
  auto all_divisible = [&](const LieElement& sum) {
    return std::all_of(sum.terms().begin(), sum.terms().end(), [&](const auto& t) {
      return divisible_by(integral_coefficient(t.second), modulus);
    });
  };

  CongruenceReport report;
  report.modulus = modulus;
  const std::vector<int> plus(combo.size(), 1);
  const LieElement sum = evaluate(plus);
  for (const auto& [key, c] : sum.terms()) {
    Integer v = integral_coefficient(c);
    if (!divisible_by(v, modulus)) report.nondivisible_coefficients.emplace_back(key.word, v);
    report.coefficients.emplace_back(key.word, std::move(v));
  }
  report.divisible = report.nondivisible_coefficients.empty();

  if (modulus.fits_ulong_p() && modulus <= Integer(static_cast<unsigned long>(1) << 62)) {
    const std::uint64_t m = modulus.get_ui();
    ModLieElement reduced(GradedAlphabet::xy());
    for (const auto& [c, e] : combo) {
      Integer cm = c % modulus;
      if (cm < 0) cm += modulus;
      reduced += ModInt(m, cm) * reduce_mod(e.f(), m);
    }
    report.modular_check = reduced.is_zero();
  }

  if (!report.divisible && combo.size() >= 2 && combo.size() <= 20) {
    // Divisibility is invariant under a global sign, so fix the first entry.
    const std::size_t patterns = std::size_t{1} << (combo.size() - 1);
    for (std::size_t bits = 1; bits < patterns; ++bits) {
      std::vector<int> signs(combo.size(), 1);
      for (std::size_t i = 1; i < combo.size(); ++i)
        if ((bits >> (i - 1)) & 1u) signs[i] = -1;
      if (all_divisible(evaluate(signs))) {
        report.sign_change = signs;
        break;
      }
    }
  }
  return report;
}

CongruenceReport check_bracket_congruence(
    const std::vector<std::tuple<Integer, IharaElement, IharaElement>>& pairs,
    const Integer& modulus) {
  IharaCombination combo;
  for (const auto& [c, a, b] : pairs) combo.emplace_back(c, ihara_bracket(a, b));
  CongruenceReport report = check_congruence(combo, modulus);
  const std::uint64_t m = small_modulus(modulus);
  ModLieElement reduced(GradedAlphabet::xy());
  for (const auto& [c, a, b] : pairs) {
    Integer cm = c % modulus;
    if (cm < 0) cm += modulus;
    reduced += ModInt(m, cm) * ihara_bracket_of(reduce_mod(a.f(), m), reduce_mod(b.f(), m));
  }
  report.modular_check = reduced.is_zero();
  return report;
}

CongruenceReport ihara_691_congruence(const Integer& modulus) {
  const IharaElement f3 = soule_generator(3), f5 = soule_generator(5), f7 = soule_generator(7),
                     f9 = soule_generator(9);
  return check_bracket_congruence({{Integer(2), f3, f9}, {Integer(-27), f5, f7}}, modulus);
}

std::vector<FreenessRow> freeness_table(int max_degree, unsigned threads, int degree_cap) {
  if (degree_cap > kIharaHardDegreeCap)
    throw Error(ErrorCode::Precondition, "degree cap above the hard limit " +
                                             std::to_string(kIharaHardDegreeCap));
  if (max_degree > degree_cap)
    throw Error(ErrorCode::Precondition, "max degree " + std::to_string(max_degree) +
                                             " exceeds the cap " + std::to_string(degree_cap));
  if (max_degree < 2) return {};
  std::vector<int> gens;
  for (int d = 3; d <= max_degree; d += 2) gens.push_back(d);
  const DimensionTable model = gens.empty() ? DimensionTable{} : weighted_witt_dims(gens, max_degree);

  std::vector<FreenessRow> rows(static_cast<std::size_t>(max_degree - 1));
  std::atomic<int> next{2};
  auto work = [&] {
    for (int n = next++; n <= max_degree; n = next++) {
      FreenessRow& row = rows[static_cast<std::size_t>(n - 2)];
      row.degree = n;
      row.dimension = special_basis(n).size();
      auto it = model.find(n);
      row.free_model = it == model.end() ? Integer(0) : it->second;
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(max_degree - 1)));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < count; ++t)
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace grt
