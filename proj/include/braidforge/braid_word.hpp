#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidforge {

/// sigma_index^sign, with index in [1, n-1] and sign +1 or -1.
struct ArtinLetter {
  int index = 1;
  int sign = 1;

  ArtinLetter inverse() const { return {index, -sign}; }
  /// Signed form: i for sigma_i, -i for its inverse.
  int as_signed() const { return sign * index; }
  static ArtinLetter from_signed(int g) { return g > 0 ? ArtinLetter{g, 1} : ArtinLetter{-g, -1}; }

  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

/// A word in the Artin generators of B_n. The strand count belongs to the
/// value; the empty word is the identity. Letters are read left to right,
/// the leftmost letter acting first.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<ArtinLetter> letters);

  /// Builds from signed generator indices, e.g. {1, -2} for sigma_1 sigma_2^-1.
  static BraidWord from_signed(int strands, const std::vector<int>& gens);

  int strands() const { return strands_; }
  const std::vector<ArtinLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<ArtinLetter> letters_;
};

/// Images of 0..n-1; image[i] is the final position of the strand that
/// starts at position i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  /// 1-based images, as printed and serialized.
  std::vector<int> one_based() const;

  bool is_identity() const;
  Permutation inverse() const;
  /// `first` followed by `second`: i -> second[first[i]].
  static Permutation then(const Permutation& first, const Permutation& second);
  /// Sorted cycle lengths.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Grammar: WORD := ITEM*; ITEM := (INT | "(" WORD ")") ("^" SIGNED_INT)?
BraidWord parse_word(std::string_view text, int strands);
std::string format_word(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert_word(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
std::int64_t exponent_sum(const BraidWord& w);
Permutation underlying_permutation(const BraidWord& w);

/// Shifts every generator index by `offset` and places the result in B_strands.
BraidWord embed_word(const BraidWord& w, int offset, int strands);

}  // namespace braidforge
