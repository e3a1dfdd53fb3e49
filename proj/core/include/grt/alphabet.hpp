#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grt {

/// A word over an alphabet: each char holds a letter index (0-based), so the
/// usual string comparison is the lexicographic order on letter indices.
using Word = std::string;

/// Ordered generator set with positive integer degrees. Letter order is the
/// construction order and fixes every Lyndon/lexicographic convention.
class GradedAlphabet {
 public:
  struct Letter {
    std::string name;
    int degree = 1;
    bool operator==(const Letter&) const = default;
  };

  explicit GradedAlphabet(std::vector<Letter> letters);

  /// Letters named by `names`, all of degree 1.
  static std::shared_ptr<const GradedAlphabet> uniform(const std::vector<std::string>& names);
  /// The generators x < y of the fundamental Lie algebra.
  static std::shared_ptr<const GradedAlphabet> xy();
  /// Letters a3, a5, ... one per given degree, named "a<degree>" (suffixed on repeats).
  static std::shared_ptr<const GradedAlphabet> weighted(const std::vector<int>& degrees);
  /// Parses "x:1,y:1" or "x,y" (degree defaults to 1).
  static std::shared_ptr<const GradedAlphabet> parse(const std::string& spec);

  std::size_t size() const noexcept { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  int degree(const Word& word) const;
  std::string spell(const Word& word) const;

  bool operator==(const GradedAlphabet& other) const { return letters_ == other.letters_; }

 private:
  std::vector<Letter> letters_;
};

using AlphabetPtr = std::shared_ptr<const GradedAlphabet>;

/// True when both pointers denote the same alphabet (by identity or by value).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

inline Word letter_word(std::size_t index) { return Word(1, static_cast<char>(index)); }

}  // namespace grt
