#include "braidforge/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "braidforge/error.hpp"

namespace braidforge {

namespace {

void check_letter(const ArtinLetter& a, int strands) {
  if (a.index < 1 || a.index > strands - 1 || (a.sign != 1 && a.sign != -1))
    throw InvalidArgument("generator " + std::to_string(a.as_signed()) + " out of range for B_" +
                          std::to_string(strands));
}

// Recursive-descent reader for the word grammar. Groups are expanded eagerly.
class WordParser {
 public:
  WordParser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  std::vector<ArtinLetter> parse() {
    auto letters = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return letters;
  }

 private:
  std::vector<ArtinLetter> parse_sequence() {
    std::vector<ArtinLetter> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      auto item = parse_item();
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  std::vector<ArtinLetter> parse_item() {
    std::vector<ArtinLetter> base;
    const std::size_t start = pos_;
    if (text_[pos_] == '(') {
      ++pos_;
      base = parse_sequence();
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("missing ')'", start);
      ++pos_;
    } else {
      const long long g = parse_int();
      if (g == 0) throw ParseError("generator index must be nonzero", start);
      if (g > strands_ - 1 || -g > strands_ - 1)
        throw ParseError("generator " + std::to_string(g) + " out of range [1, " +
                             std::to_string(strands_ - 1) + "]",
                         start);
      base.push_back(ArtinLetter::from_signed(static_cast<int>(g)));
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const long long e = parse_int();
      return repeat(base, e);
    }
    return base;
  }

  static std::vector<ArtinLetter> repeat(const std::vector<ArtinLetter>& base, long long e) {
    std::vector<ArtinLetter> unit = base;
    if (e < 0) {
      std::reverse(unit.begin(), unit.end());
      for (auto& a : unit) a = a.inverse();
      e = -e;
    }
    std::vector<ArtinLetter> out;
    out.reserve(unit.size() * static_cast<std::size_t>(e));
    for (long long r = 0; r < e; ++r) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  long long parse_int() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", start);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc() || value > 1'000'000) throw ParseError("integer too large", start);
    return negative ? -value : value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw InvalidArgument("strand count must be at least 1");
}

BraidWord::BraidWord(int strands, std::vector<ArtinLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw InvalidArgument("strand count must be at least 1");
  for (const auto& a : letters_) check_letter(a, strands_);
}

BraidWord BraidWord::from_signed(int strands, const std::vector<int>& gens) {
  std::vector<ArtinLetter> letters;
  letters.reserve(gens.size());
  for (int g : gens) {
    if (g == 0) throw InvalidArgument("generator index must be nonzero");
    letters.push_back(ArtinLetter::from_signed(g));
  }
  return BraidWord(strands, std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = i;
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 0; i < size(); ++i) p.images_[static_cast<std::size_t>((*this)[i])] = i;
  return p;
}

Permutation Permutation::then(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) throw StrandMismatch(first.size(), second.size());
  Permutation p;
  p.images_.resize(first.images_.size());
  for (int i = 0; i < first.size(); ++i) p.images_[static_cast<std::size_t>(i)] = second[first[i]];
  return p;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)[j]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 1) throw InvalidArgument("strand count must be at least 1");
  return BraidWord(strands, WordParser(text, strands).parse());
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (const auto& a : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a.as_signed());
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  std::vector<ArtinLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert_word(const BraidWord& w) {
  std::vector<ArtinLetter> letters(w.letters().rbegin(), w.letters().rend());
  for (auto& a : letters) a = a.inverse();
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<ArtinLetter> stack;
  stack.reserve(w.length());
  for (const auto& a : w.letters()) {
    if (!stack.empty() && stack.back() == a.inverse())
      stack.pop_back();
    else
      stack.push_back(a);
  }
  return BraidWord(w.strands(), std::move(stack));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (const auto& a : w.letters()) sum += a.sign;
  return sum;
}

Permutation underlying_permutation(const BraidWord& w) {
  // strand_at[pos] is the strand currently occupying position pos.
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
  for (int i = 0; i < w.strands(); ++i) strand_at[static_cast<std::size_t>(i)] = i;
  for (const auto& a : w.letters())
    std::swap(strand_at[static_cast<std::size_t>(a.index - 1)],
              strand_at[static_cast<std::size_t>(a.index)]);
  std::vector<int> images(strand_at.size());
  for (int pos = 0; pos < w.strands(); ++pos)
    images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(pos)])] = pos;
  return Permutation(std::move(images));
}

BraidWord embed_word(const BraidWord& w, int offset, int strands) {
  if (offset < 0 || offset + w.strands() > strands)
    throw InvalidArgument("embedding does not fit in B_" + std::to_string(strands));
  std::vector<ArtinLetter> letters = w.letters();
  for (auto& a : letters) a.index += offset;
  return BraidWord(strands, std::move(letters));
}

}  // namespace braidforge
