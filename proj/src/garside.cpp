#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"
#include "garside_internal.hpp"

namespace braidforge {

namespace detail {

Simple identity_simple(int n) {
  Simple s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Simple delta_simple(int n) {
  Simple s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = n - 1 - i;
  return s;
}

Simple generator_simple(int n, int i) {
  Simple s = identity_simple(n);
  std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
  return s;
}

bool is_identity(const Simple& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_delta(const Simple& s) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i)
    if (s[static_cast<std::size_t>(i)] != n - 1 - i) return false;
  return true;
}

// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
Simple tau(const Simple& s) {
  const int n = static_cast<int>(s.size());
  Simple t(s.size());
  for (int i = 0; i < n; ++i)
    t[static_cast<std::size_t>(i)] = n - 1 - s[static_cast<std::size_t>(n - 1 - i)];
  return t;
}

Simple tau_power(const Simple& s, int p) { return (p % 2 != 0) ? tau(s) : s; }

Simple inverse(const Simple& s) {
  Simple t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  return t;
}

Simple left_complement(const Simple& s) {
  // L s = Delta, so L[i] = s^-1[rev[i]].
  const Simple inv = inverse(s);
  const int n = static_cast<int>(s.size());
  Simple l(s.size());
  for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(n - 1 - i)];
  return l;
}

Simple right_complement(const Simple& s) {
  // s R = Delta, so R[j] = rev[s^-1[j]].
  const Simple inv = inverse(s);
  const int n = static_cast<int>(s.size());
  Simple r(s.size());
  for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = n - 1 - inv[static_cast<std::size_t>(j)];
  return r;
}

bool left_weight(Simple& a, Simple& b) {
  const int n = static_cast<int>(a.size());
  Simple ainv = inverse(a);
  bool changed = false;
  for (;;) {
    int found = -1;
    // i in S(b) (b starts with sigma_{i+1}) but not in F(a).
    for (int i = 0; i + 1 < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (b[u] > b[u + 1] && ainv[u] < ainv[u + 1]) {
        found = i;
        break;
      }
    }
    if (found < 0) return changed;
    const auto u = static_cast<std::size_t>(found);
    std::swap(a[static_cast<std::size_t>(ainv[u])], a[static_cast<std::size_t>(ainv[u + 1])]);
    std::swap(ainv[u], ainv[u + 1]);
    std::swap(b[u], b[u + 1]);
    changed = true;
  }
}

namespace {

void clean(Nf& x) {
  std::size_t lead = 0;
  while (lead < x.f.size() && is_delta(x.f[lead])) ++lead;
  if (lead > 0) {
    x.p += static_cast<int>(lead);
    x.f.erase(x.f.begin(), x.f.begin() + static_cast<std::ptrdiff_t>(lead));
  }
  while (!x.f.empty() && is_identity(x.f.back())) x.f.pop_back();
}

}  // namespace

void right_multiply(Nf& x, const Simple& s) {
  if (is_identity(s)) return;
  x.f.push_back(s);
  for (std::size_t j = x.f.size() - 1; j-- > 0;)
    if (!left_weight(x.f[j], x.f[j + 1])) break;
  clean(x);
}

void right_multiply_inverse(Nf& x, const Simple& s) {
  // x s^-1 = x (s^-1 Delta) Delta^-1 = Delta^-1 tau(x s^-1 Delta).
  right_multiply(x, right_complement(s));
  for (auto& g : x.f) g = tau(g);
  x.p -= 1;
}

Nf normalize(int n, int p, const std::vector<Simple>& factors) {
  Nf x{n, p, {}};
  for (const auto& s : factors) right_multiply(x, s);
  return x;
}

Nf nf_of_word(const BraidWord& w) {
  const int n = w.strands();
  Nf x{n, 0, {}};
  if (n < 2) return x;
  for (const auto& a : w.letters()) {
    const Simple g = generator_simple(n, a.index);
    if (a.sign > 0)
      right_multiply(x, g);
    else
      right_multiply_inverse(x, g);
  }
  return x;
}

NormalForm to_public(const Nf& x) {
  NormalForm nf;
  nf.strands = x.n;
  nf.delta_power = x.p;
  nf.factors.reserve(x.f.size());
  for (const auto& s : x.f) nf.factors.emplace_back(s);
  return nf;
}

Nf from_public(const NormalForm& nf) {
  Nf x{nf.strands, nf.delta_power, {}};
  for (const auto& s : nf.factors) {
    if (s.size() != nf.strands) throw InvalidArgument("factor size does not match strand count");
    x.f.push_back(s.images());
  }
  return x;
}

Nf conjugate_by_simple(const Nf& x, const Simple& s) {
  // s^-1 Delta^p X s = Delta^(p-1) tau^p(Delta s^-1) X s.
  std::vector<Simple> factors;
  factors.reserve(x.f.size() + 2);
  factors.push_back(tau_power(left_complement(s), x.p));
  factors.insert(factors.end(), x.f.begin(), x.f.end());
  factors.push_back(s);
  return normalize(x.n, x.p - 1, factors);
}

BraidWord simple_word(const Simple& s) {
  Simple a = s;
  std::vector<ArtinLetter> letters;
  const int n = static_cast<int>(a.size());
  for (;;) {
    int i = 0;
    while (i + 1 < n && a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)]) ++i;
    if (i + 1 >= n) break;
    letters.push_back({i + 1, 1});
    std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i + 1)]);
  }
  return BraidWord(std::max(n, 1), std::move(letters));
}

}  // namespace detail

BraidWord half_twist(int n) {
  if (n < 2) throw InvalidArgument("half twist needs at least 2 strands");
  std::vector<ArtinLetter> letters;
  for (int j = 1; j <= n - 1; ++j)
    for (int i = j; i >= 1; --i) letters.push_back({i, 1});
  return BraidWord(n, std::move(letters));
}

NormalForm normal_form(const BraidWord& w) { return detail::to_public(detail::nf_of_word(w)); }

BraidWord permutation_braid_word(const Permutation& p) { return detail::simple_word(p.images()); }

BraidWord nf_to_word(const NormalForm& nf) {
  BraidWord out(nf.strands);
  if (nf.delta_power != 0) {
    if (nf.strands < 2) throw InvalidArgument("Delta power on a single strand");
    out = power(half_twist(nf.strands), nf.delta_power);
  }
  for (const auto& s : nf.factors) {
    if (s.size() != nf.strands) throw InvalidArgument("factor size does not match strand count");
    out = concat(out, permutation_braid_word(s));
  }
  return out;
}

bool is_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  if (a == b) return true;
  if (exponent_sum(a) != exponent_sum(b)) return false;
  return detail::nf_of_word(a) == detail::nf_of_word(b);
}

std::pair<int, int> inf_sup(const BraidWord& w) {
  const auto x = detail::nf_of_word(w);
  return {x.p, x.sup()};
}

bool is_positive_braid(const BraidWord& w) {
  for (const auto& a : w.letters())
    if (a.sign < 0) return detail::nf_of_word(w).p >= 0;
  return true;
}

namespace {

bool central_nf(const detail::Nf& x) { return x.f.empty() && (x.p % 2 == 0 || x.n <= 2); }

}  // namespace

bool is_central(const BraidWord& w) { return central_nf(detail::nf_of_word(w)); }

BraidWord power(const BraidWord& w, int d) {
  const BraidWord unit = d < 0 ? invert_word(w) : w;
  std::vector<ArtinLetter> letters;
  letters.reserve(unit.length() * static_cast<std::size_t>(std::abs(d)));
  for (int r = 0; r < std::abs(d); ++r)
    letters.insert(letters.end(), unit.letters().begin(), unit.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

bool is_periodic(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw InvalidArgument("periodicity is defined for n >= 2");
  return is_central(power(w, n)) || is_central(power(w, n - 1));
}

BraidWord root_word(RootKind kind, int pw, int n) {
  if (n < 2) throw InvalidArgument("periodic roots need n >= 2");
  std::vector<ArtinLetter> letters;
  if (kind == RootKind::Gamma) letters.push_back({1, 1});
  for (int i = 1; i <= n - 1; ++i) letters.push_back({i, 1});
  return power(BraidWord(n, std::move(letters)), pw);
}

std::optional<PeriodicRoot> periodic_root(const BraidWord& w, int d, std::size_t budget) {
  if (d < 1) throw InvalidArgument("root degree must be at least 1");
  if (!is_periodic(w)) throw InvalidArgument("periodic_root requires a periodic braid");
  const int n = w.strands();
  const std::int64_t ab = exponent_sum(w);
  bool inconclusive = false;
  for (RootKind kind : {RootKind::Delta, RootKind::Gamma}) {
    // Ab(candidate^d) = d * i * Ab(candidate) must match Ab(w).
    const std::int64_t unit = static_cast<std::int64_t>(d) * (kind == RootKind::Delta ? n - 1 : n);
    if (ab % unit != 0) continue;
    const int i = static_cast<int>(ab / unit);
    const auto r = is_conjugate(power(root_word(kind, i, n), d), w, budget);
    if (r.verdict == ConjugacyVerdict::Conjugate) return PeriodicRoot{kind, i, *r.witness};
    if (r.verdict == ConjugacyVerdict::BudgetExceeded) inconclusive = true;
  }
  if (inconclusive) throw BudgetExceeded("periodic root search exceeded the conjugacy budget");
  return std::nullopt;
}

}  // namespace braidforge
