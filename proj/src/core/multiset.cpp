#include "core/multiset.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace definetti {

namespace {

bool valid_symbol(const std::string& symbol) {
  if (symbol.empty()) return false;
  const std::string reserved = "*+,()[]|/\"\\";
  for (char c : symbol) {
    if (!std::isprint(static_cast<unsigned char>(c))) return false;
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (reserved.find(c) != std::string::npos) return false;
  }
  return true;
}

void check_alphabet(const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) {
    raise(ErrorCode::bad_argument, "multiset alphabet must be nonempty");
  }
  std::set<std::string> seen;
  for (const auto& symbol : alphabet) {
    if (!valid_symbol(symbol)) {
      raise(ErrorCode::bad_argument, "invalid alphabet symbol '" + symbol + "'");
    }
    if (!seen.insert(symbol).second) {
      raise(ErrorCode::bad_argument, "duplicate alphabet symbol '" + symbol + "'");
    }
  }
}

}  // namespace

Multiset::Multiset(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)), counts_(alphabet_.size(), 0) {
  check_alphabet(alphabet_);
}

Multiset Multiset::from_counts(std::vector<std::string> alphabet,
                               std::vector<std::int64_t> counts) {
  Multiset m(std::move(alphabet));
  if (counts.size() != m.alphabet_.size()) {
    raise(ErrorCode::bad_argument, "count vector does not match alphabet size");
  }
  for (std::int64_t c : counts) {
    if (c < 0) {
      raise(ErrorCode::bad_argument, "negative multiplicity");
    }
  }
  m.counts_ = std::move(counts);
  return m;
}

Multiset Multiset::parse(const std::string& text) {
  const auto bad = [&]() -> void {
    raise(ErrorCode::parse_error, "not a multiset: '" + text + "'");
  };
  std::vector<std::string> alphabet;
  std::vector<std::int64_t> counts;
  std::size_t i = 0;
  while (true) {
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) bad();
    std::int64_t count = 0;
    try {
      count = std::stoll(text.substr(digits_start, i - digits_start));
    } catch (const std::exception&) {
      bad();
    }
    if (i >= text.size() || text[i] != '*') bad();
    ++i;
    std::size_t symbol_start = i;
    while (i < text.size() && text[i] != '+') ++i;
    if (i == symbol_start) bad();
    std::string symbol = text.substr(symbol_start, i - symbol_start);
    alphabet.push_back(std::move(symbol));
    counts.push_back(count);
    if (i == text.size()) break;
    ++i;  // skip '+'
    if (i == text.size()) bad();
  }
  return from_counts(std::move(alphabet), std::move(counts));
}

std::size_t Multiset::index_of(const std::string& symbol) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == symbol) return i;
  }
  raise(ErrorCode::bad_argument, "symbol '" + symbol + "' not in alphabet");
}

std::int64_t Multiset::count(const std::string& symbol) const {
  return counts_[index_of(symbol)];
}

std::int64_t Multiset::count_at(std::size_t index) const {
  if (index >= counts_.size()) {
    raise(ErrorCode::bad_argument, "alphabet index out of bounds");
  }
  return counts_[index];
}

std::int64_t Multiset::size() const {
  std::int64_t total = 0;
  for (std::int64_t c : counts_) total += c;
  return total;
}

Multiset Multiset::adding(const std::string& symbol, std::int64_t n) const {
  return adding_at(index_of(symbol), n);
}

Multiset Multiset::adding_at(std::size_t index, std::int64_t n) const {
  if (index >= counts_.size()) {
    raise(ErrorCode::bad_argument, "alphabet index out of bounds");
  }
  if (n < 0) {
    raise(ErrorCode::bad_argument, "cannot add a negative multiplicity");
  }
  Multiset m = *this;
  m.counts_[index] += n;
  return m;
}

Multiset Multiset::removing(const std::string& symbol) const {
  return removing_at(index_of(symbol));
}

Multiset Multiset::removing_at(std::size_t index) const {
  if (index >= counts_.size()) {
    raise(ErrorCode::bad_argument, "alphabet index out of bounds");
  }
  if (counts_[index] <= 0) {
    raise(ErrorCode::bad_argument,
          "cannot remove '" + alphabet_[index] + "': multiplicity is zero");
  }
  Multiset m = *this;
  m.counts_[index] -= 1;
  return m;
}

std::string Multiset::text() const {
  std::string out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (i > 0) out += "+";
    out += std::to_string(counts_[i]);
    out += "*";
    out += alphabet_[i];
  }
  return out;
}

Multiset accumulate(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& sequence) {
  Multiset m(alphabet);
  std::vector<std::int64_t> counts(alphabet.size(), 0);
  for (const auto& symbol : sequence) {
    counts[m.index_of(symbol)] += 1;
  }
  return Multiset::from_counts(alphabet, std::move(counts));
}

const std::vector<std::string>& binary_alphabet() {
  static const std::vector<std::string> alphabet = {"0", "1"};
  return alphabet;
}

Multiset binary_multiset(std::int64_t ones, std::int64_t zeros) {
  return Multiset::from_counts(binary_alphabet(), {zeros, ones});
}

bool is_binary(const Multiset& m) { return m.alphabet() == binary_alphabet(); }

Multiset accumulate_bits(const std::vector<int>& bits) {
  std::int64_t ones = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      raise(ErrorCode::bad_argument, "bit must be 0 or 1");
    }
    ones += b;
  }
  return binary_multiset(ones, static_cast<std::int64_t>(bits.size()) - ones);
}

Multiset BinaryCountIso::to_multiset(std::int64_t ones) const {
  if (size < 0) {
    raise(ErrorCode::bad_argument, "negative multiset size");
  }
  if (ones < 0 || ones > size) {
    raise(ErrorCode::out_of_range,
          "ones count " + std::to_string(ones) + " outside [0, " +
              std::to_string(size) + "]");
  }
  return binary_multiset(ones, size - ones);
}

std::int64_t BinaryCountIso::ones(const Multiset& m) const {
  if (!is_binary(m)) {
    raise(ErrorCode::bad_argument, "not a binary multiset: " + m.text());
  }
  if (m.size() != size) {
    raise(ErrorCode::bad_argument,
          "multiset has size " + std::to_string(m.size()) + ", expected " +
              std::to_string(size));
  }
  return m.counts()[1];
}

std::int64_t ones_count(const Multiset& m) {
  if (!is_binary(m)) {
    raise(ErrorCode::bad_argument, "not a binary multiset: " + m.text());
  }
  return m.counts()[1];
}

}  // namespace definetti
