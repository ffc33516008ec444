#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace definetti {

/// Multiset over an explicit, ordered alphabet.  Counts are kept for every
/// alphabet symbol, including zeros, so that multisets of the same size over
/// the same alphabet always serialize to comparable text.  The canonical text
/// form joins "<count>*<symbol>" terms with '+' in alphabet order, e.g.
/// "1*B+2*W"; it round-trips through parse().
class Multiset {
 public:
  /// Empty multiset (all counts zero).  The alphabet must be nonempty, with
  /// unique printable symbols avoiding the delimiter characters *+,()[]|/ .
  explicit Multiset(std::vector<std::string> alphabet);

  static Multiset from_counts(std::vector<std::string> alphabet,
                              std::vector<std::int64_t> counts);

  /// Inverse of text().
  static Multiset parse(const std::string& text);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  std::size_t index_of(const std::string& symbol) const;
  std::int64_t count(const std::string& symbol) const;
  std::int64_t count_at(std::size_t index) const;

  /// Total number of elements counted with multiplicity.
  std::int64_t size() const;

  Multiset adding(const std::string& symbol, std::int64_t n = 1) const;
  Multiset adding_at(std::size_t index, std::int64_t n = 1) const;
  /// Removes one occurrence; the count must be positive.
  Multiset removing(const std::string& symbol) const;
  Multiset removing_at(std::size_t index) const;

  std::string text() const;

  bool operator==(const Multiset& o) const = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::int64_t> counts_;
};

inline std::string atom_key(const Multiset& m) { return m.text(); }

/// Frequency count of a symbol sequence: order-forgetting accumulator.
/// Every sequence element must belong to the alphabet.
Multiset accumulate(const std::vector<std::string>& alphabet,
                    const std::vector<std::string>& sequence);

/// The two-symbol alphabet ["0", "1"] used for bit sequences; by convention
/// symbol "1" plays the role of heads / black.
const std::vector<std::string>& binary_alphabet();

/// Multiset ones|"1"> + zeros|"0"> over the binary alphabet.
Multiset binary_multiset(std::int64_t ones, std::int64_t zeros);

bool is_binary(const Multiset& m);

/// Frequency count of a bit sequence (entries must be 0 or 1).
Multiset accumulate_bits(const std::vector<int>& bits);

/// Size-K binary multisets are determined by their ones count; this is the
/// isomorphism k <-> k|1> + (K-k)|0> and its inverse.
struct BinaryCountIso {
  std::int64_t size;

  Multiset to_multiset(std::int64_t ones) const;
  std::int64_t ones(const Multiset& m) const;
};

/// Ones count of any binary multiset.
std::int64_t ones_count(const Multiset& m);

}  // namespace definetti
