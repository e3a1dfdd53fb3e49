#include "grt/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "grt/error.hpp"

namespace grt {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

GradedAlphabet::GradedAlphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorCode::Precondition, "alphabet must be nonempty");
  if (letters_.size() > 64) throw Error(ErrorCode::Unsupported, "at most 64 letters supported");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (!valid_identifier(l.name))
      throw Error(ErrorCode::Precondition, "invalid generator name '" + l.name + "'");
    if (!seen.insert(l.name).second)
      throw Error(ErrorCode::Precondition, "duplicate generator name '" + l.name + "'");
    if (l.degree < 1)
      throw Error(ErrorCode::Precondition, "generator degrees must be >= 1");
  }
}

AlphabetPtr GradedAlphabet::uniform(const std::vector<std::string>& names) {
  std::vector<Letter> letters;
  for (const auto& n : names) letters.push_back({n, 1});
  return std::make_shared<const GradedAlphabet>(std::move(letters));
}

AlphabetPtr GradedAlphabet::xy() {
  static const AlphabetPtr instance = uniform({"x", "y"});
  return instance;
}

AlphabetPtr GradedAlphabet::weighted(const std::vector<int>& degrees) {
  std::vector<Letter> letters;
  std::vector<int> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  int previous = -1, repeat = 0;
  for (int d : sorted) {
    repeat = d == previous ? repeat + 1 : 0;
    previous = d;
    std::string name = "a" + std::to_string(d);
    if (repeat > 0) name += "_" + std::to_string(repeat);
    letters.push_back({name, d});
  }
  return std::make_shared<const GradedAlphabet>(std::move(letters));
}

AlphabetPtr GradedAlphabet::parse(const std::string& spec) {
  std::vector<Letter> letters;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    auto colon = item.find(':');
    Letter l;
    l.name = trim(item.substr(0, colon));
    if (colon != std::string::npos) {
      std::string deg = trim(item.substr(colon + 1));
      try {
        std::size_t used = 0;
        l.degree = std::stoi(deg, &used);
        if (used != deg.size()) throw std::invalid_argument(deg);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Precondition, "bad degree in alphabet entry '" + item + "'");
      }
    }
    letters.push_back(l);
  }
  return std::make_shared<const GradedAlphabet>(std::move(letters));
}

std::optional<std::size_t> GradedAlphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return i;
  return std::nullopt;
}

int GradedAlphabet::degree(const Word& word) const {
  int d = 0;
  for (char c : word) d += letters_.at(static_cast<unsigned char>(c)).degree;
  return d;
}

std::string GradedAlphabet::spell(const Word& word) const {
  std::string out;
  bool multi = false;
  for (const auto& l : letters_) multi |= l.name.size() > 1;
  for (char c : word) {
    if (multi && !out.empty()) out += ' ';
    out += letters_.at(static_cast<unsigned char>(c)).name;
  }
  return out;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace grt
