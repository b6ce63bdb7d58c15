#include "braidforge/random.hpp"

#include <cstdlib>

namespace braidforge {

BraidWord random_word(Rng& rng, int strands, int length) {
  std::vector<ArtinLetter> letters;
  if (strands < 2) return BraidWord(strands);
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    letters.push_back({rng.uniform(1, strands - 1), rng.coin() ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

namespace {

using Letters = std::vector<ArtinLetter>;

bool adjacent(const ArtinLetter& a, const ArtinLetter& b) { return std::abs(a.index - b.index) == 1; }

// One attempted move at position j; returns false when it does not apply.
bool try_move(Letters& w, int kind, std::size_t j, Rng& rng, int strands) {
  switch (kind) {
    case 0: {  // insert x x^-1
      const ArtinLetter x{rng.uniform(1, strands - 1), rng.coin() ? 1 : -1};
      const auto at = w.begin() + static_cast<std::ptrdiff_t>(std::min(j, w.size()));
      w.insert(at, {x, x.inverse()});
      return true;
    }
    case 1:  // delete x x^-1
      if (j + 1 < w.size() && w[j + 1] == w[j].inverse()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j), w.begin() + static_cast<std::ptrdiff_t>(j + 2));
        return true;
      }
      return false;
    case 2:  // far commutation
      if (j + 1 < w.size() && std::abs(w[j].index - w[j + 1].index) >= 2) {
        std::swap(w[j], w[j + 1]);
        return true;
      }
      return false;
    case 3:  // a b a = b a b, uniform sign
      if (j + 2 < w.size() && w[j] == w[j + 2] && w[j].sign == w[j + 1].sign && adjacent(w[j], w[j + 1])) {
        std::swap(w[j], w[j + 1]);
        w[j + 2] = w[j];
        return true;
      }
      return false;
    case 4: {  // a b a^-1 = b^-1 a b for positive a, b adjacent; and back
      if (j + 2 >= w.size()) return false;
      const ArtinLetter x = w[j], y = w[j + 1], z = w[j + 2];
      if (x.sign > 0 && y.sign > 0 && z == x.inverse() && adjacent(x, y)) {
        w[j] = y.inverse();
        w[j + 1] = x;
        w[j + 2] = y;
        return true;
      }
      if (x.sign < 0 && y.sign > 0 && z == x.inverse() && adjacent(x, y)) {
        w[j] = y;
        w[j + 1] = z;
        w[j + 2] = y.inverse();
        return true;
      }
      return false;
    }
    default:
      return false;
  }
}

}  // namespace

BraidWord random_rewrite(const BraidWord& w, Rng& rng, int moves) {
  if (w.strands() < 2) return w;
  Letters letters = w.letters();
  for (int done = 0, attempts = 0; done < moves && attempts < 50 * moves + 50; ++attempts) {
    const int kind = rng.uniform(0, 4);
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(letters.size())));
    if (try_move(letters, kind, j, rng, w.strands())) ++done;
  }
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace braidforge

namespace braidforge {

qp::QPCertificate random_certificate(Rng& rng, int strands, int max_bands, int max_conjugator) {
  std::vector<qp::Band> bands;
  const int count = rng.uniform(0, max_bands);
  for (int i = 0; i < count; ++i) {
    auto conj = random_word(rng, strands, rng.uniform(0, max_conjugator));
    bands.push_back({std::move(conj), rng.uniform(1, strands - 1)});
  }
  return qp::QPCertificate(strands, std::move(bands));
}

}  // namespace braidforge
