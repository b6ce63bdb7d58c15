#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"
#include "garside_internal.hpp"

namespace braidforge {

namespace {

using detail::Nf;
using detail::Simple;

using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : k) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

Key key_of(const Nf& x) {
  Key k;
  k.reserve(1 + x.f.size() * static_cast<std::size_t>(x.n));
  k.push_back(x.p);
  for (const auto& s : x.f) k.insert(k.end(), s.begin(), s.end());
  return k;
}

// Each step conjugates x to m^-1 x m; the accumulated conjugator is the
// product of the m's in order.
struct Conjugator {
  std::vector<ArtinLetter> letters;

  void append_simple(const Simple& s) {
    const auto w = detail::simple_word(s);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  void append_simple_inverse(const Simple& s) {
    const auto w = invert_word(detail::simple_word(s));
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  void append(const Conjugator& other) {
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  }
  BraidWord word(int n) const { return free_reduce(BraidWord(n, letters)); }
};

// c(x) = Delta^p x_2 ... x_l tau^p(x_1), conjugator tau^p(x_1).
std::pair<Nf, Simple> cycle(const Nf& x) {
  Simple m = detail::tau_power(x.f.front(), x.p);
  std::vector<Simple> factors(x.f.begin() + 1, x.f.end());
  factors.push_back(m);
  return {detail::normalize(x.n, x.p, factors), std::move(m)};
}

// d(x) = Delta^p tau^p(x_l) x_1 ... x_{l-1}, conjugator x_l^-1.
std::pair<Nf, Simple> decycle(const Nf& x) {
  std::vector<Simple> factors;
  factors.push_back(detail::tau_power(x.f.back(), x.p));
  factors.insert(factors.end(), x.f.begin(), x.f.end() - 1);
  return {detail::normalize(x.n, x.p, factors), x.f.back()};
}

class UltraSummit {
 public:
  UltraSummit(int n, std::size_t budget) : n_(n), budget_(budget) {}

  // Conjugates x into its ultra summit set, accumulating the conjugator.
  Nf reach(Nf x, Conjugator& c) {
    if (x.f.empty()) return x;
    const int patience = n_ * (n_ - 1) / 2;
    for (int stall = 0; !x.f.empty() && stall < patience;) {
      auto [y, m] = cycle(x);
      c.append_simple(m);
      stall = y.p > x.p ? 0 : stall + 1;
      x = std::move(y);
    }
    for (int stall = 0; !x.f.empty() && stall < patience;) {
      auto [y, m] = decycle(x);
      c.append_simple_inverse(m);
      stall = y.sup() < x.sup() ? 0 : stall + 1;
      x = std::move(y);
    }
    if (x.f.empty()) return x;
    // Iterate cycling until the trajectory closes; the first repeated element
    // lies on a cycling orbit, hence in the ultra summit set.
    std::unordered_map<Key, std::size_t, KeyHash> seen;
    std::vector<Nf> path{x};
    std::vector<std::size_t> conj_len{c.letters.size()};
    seen.emplace(key_of(x), 0);
    for (;;) {
      if (path.size() > budget_) throw BudgetExceeded("cycling orbit exceeded the budget");
      auto [y, m] = cycle(path.back());
      c.append_simple(m);
      auto k = key_of(y);
      if (auto it = seen.find(k); it != seen.end()) {
        c.letters.resize(conj_len[it->second]);
        return path[it->second];
      }
      seen.emplace(std::move(k), path.size());
      conj_len.push_back(c.letters.size());
      path.push_back(std::move(y));
    }
  }

  bool contains(const Nf& x, int inf_s, int sup_s) {
    if (x.p != inf_s || x.sup() != sup_s) return false;
    const Key start = key_of(x);
    if (auto it = cache_.find(start); it != cache_.end()) return it->second;
    std::vector<Key> orbit{start};
    std::unordered_map<Key, bool, KeyHash> local{{start, true}};
    Nf y = x;
    bool member = false;
    for (;;) {
      if (orbit.size() > budget_) throw BudgetExceeded("cycling orbit exceeded the budget");
      y = cycle(y).first;
      Key k = key_of(y);
      if (k == start) {
        member = true;
        break;
      }
      // Reaching a known element, or a repeat other than x, means x is not
      // on a closed orbit.
      if (cache_.count(k) != 0 || local.count(k) != 0) break;
      local.emplace(k, true);
      orbit.push_back(std::move(k));
    }
    if (member) {
      for (auto& k : orbit) cache_[k] = true;
    } else {
      cache_[start] = false;
    }
    return member;
  }

 private:
  int n_;
  std::size_t budget_;
  std::unordered_map<Key, bool, KeyHash> cache_;
};

std::vector<Simple> nontrivial_simples(int n) {
  std::vector<Simple> out;
  Simple s = detail::identity_simple(n);
  while (std::next_permutation(s.begin(), s.end())) out.push_back(s);
  return out;
}

}  // namespace

ConjugacyResult is_conjugate(const BraidWord& a, const BraidWord& b, std::size_t budget) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  const int n = a.strands();
  ConjugacyResult result;
  if (exponent_sum(a) != exponent_sum(b) ||
      underlying_permutation(a).cycle_type() != underlying_permutation(b).cycle_type()) {
    result.verdict = ConjugacyVerdict::NotConjugate;
    return result;
  }
  const Nf na = detail::nf_of_word(a);
  const Nf nb = detail::nf_of_word(b);
  if (n < 2 || na == nb) {
    result.verdict = ConjugacyVerdict::Conjugate;
    result.witness = BraidWord(n);
    return result;
  }

  UltraSummit uss(n, budget);
  Conjugator ca;
  Conjugator cb;
  Nf ua;
  Nf ub;
  try {
    ua = uss.reach(na, ca);
    ub = uss.reach(nb, cb);
  } catch (const BudgetExceeded&) {
    result.verdict = ConjugacyVerdict::BudgetExceeded;
    return result;
  }
  const int inf_s = ua.p;
  const int sup_s = ua.sup();
  if (ub.p != inf_s || ub.sup() != sup_s) {
    result.verdict = ConjugacyVerdict::NotConjugate;
    return result;
  }

  // Breadth-first search of the ultra summit set of a, moving along
  // conjugations by simple elements that stay inside the set.
  struct Node {
    Nf x;
    std::size_t parent;
    Simple via;
  };
  std::vector<Node> nodes;
  std::unordered_map<Key, std::size_t, KeyHash> index;
  const Key target = key_of(ub);
  nodes.push_back({ua, 0, {}});
  index.emplace(key_of(ua), 0);
  std::optional<std::size_t> hit;
  if (key_of(ua) == target) hit = 0;

  const auto simples = nontrivial_simples(n);
  try {
    for (std::size_t head = 0; !hit && head < nodes.size(); ++head) {
      for (const auto& s : simples) {
        Nf y = detail::conjugate_by_simple(nodes[head].x, s);
        if (!uss.contains(y, inf_s, sup_s)) continue;
        Key k = key_of(y);
        if (index.count(k) != 0) continue;
        if (nodes.size() >= budget) throw BudgetExceeded("ultra summit set exceeded the budget");
        index.emplace(k, nodes.size());
        nodes.push_back({std::move(y), head, s});
        if (k == target) {
          hit = nodes.size() - 1;
          break;
        }
      }
    }
  } catch (const BudgetExceeded&) {
    result.verdict = ConjugacyVerdict::BudgetExceeded;
    result.explored = nodes.size();
    return result;
  }
  result.explored = nodes.size();
  if (!hit) {
    result.verdict = ConjugacyVerdict::NotConjugate;
    return result;
  }

  // e = s_1 ... s_m with e^-1 ua e = ub; then w = cb e^-1 ca^-1.
  std::vector<Simple> path;
  for (std::size_t i = *hit; i != 0; i = nodes[i].parent) path.push_back(nodes[i].via);
  std::reverse(path.begin(), path.end());
  Conjugator e;
  for (const auto& s : path) e.append_simple(s);
  const BraidWord w = free_reduce(
      concat(concat(cb.word(n), invert_word(e.word(n))), invert_word(ca.word(n))));
  if (!is_equal(concat(concat(w, a), invert_word(w)), b))
    throw std::logic_error("conjugacy witness failed verification");
  result.verdict = ConjugacyVerdict::Conjugate;
  result.witness = w;
  return result;
}

}  // namespace braidforge
