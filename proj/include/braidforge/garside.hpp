#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "braidforge/braid_word.hpp"

namespace braidforge {

/// Left normal form Delta^delta_power * x_1 ... x_l. Each factor is a
/// permutation braid other than 1 and Delta, stored as its permutation, and
/// consecutive factors are left-weighted. Equal elements have equal forms.
struct NormalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;

  int inf() const { return delta_power; }
  int sup() const { return delta_power + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Positive half twist Delta_n = s1 (s2 s1) (s3 s2 s1) ... ; n >= 2.
BraidWord half_twist(int n);

NormalForm normal_form(const BraidWord& w);
/// Delta^p as a word, followed by a positive word for every factor.
BraidWord nf_to_word(const NormalForm& nf);
/// Positive word of the permutation braid with the given permutation.
BraidWord permutation_braid_word(const Permutation& p);

bool is_equal(const BraidWord& a, const BraidWord& b);
std::pair<int, int> inf_sup(const BraidWord& w);
bool is_positive_braid(const BraidWord& w);
/// True iff w lies in the centre of B_n (a power of Delta^2, or anything in B_2).
bool is_central(const BraidWord& w);

/// d-fold concatenation; d < 0 concatenates the inverse word.
BraidWord power(const BraidWord& w, int d);

/// Some positive power of w is central. Decided by testing w^n and w^(n-1).
bool is_periodic(const BraidWord& w);

enum class ConjugacyVerdict { Conjugate, NotConjugate, BudgetExceeded };

struct ConjugacyResult {
  ConjugacyVerdict verdict = ConjugacyVerdict::NotConjugate;
  /// When conjugate: w with w a w^-1 = b.
  std::optional<BraidWord> witness;
  /// Ultra summit set elements visited.
  std::size_t explored = 0;
};

inline constexpr std::size_t kDefaultConjugacyBudget = 20000;

/// Conjugacy by ultra summit sets. The budget caps the number of summit-set
/// elements held in memory; running out yields BudgetExceeded, never a
/// NotConjugate verdict.
ConjugacyResult is_conjugate(const BraidWord& a, const BraidWord& b,
                             std::size_t budget = kDefaultConjugacyBudget);

enum class RootKind { Delta, Gamma };

/// delta = s1 s2 ... s_{n-1}, gamma = s1^2 s2 ... s_{n-1}.
BraidWord root_word(RootKind kind, int power, int n);

struct PeriodicRoot {
  RootKind kind = RootKind::Delta;
  int power = 0;
  /// w with w * root_word(kind, power)^d * w^-1 = the input braid.
  BraidWord conjugator;
};

/// A candidate c in {delta^i, gamma^i} whose d-th power is conjugate to w.
/// Requires is_periodic(w) and d >= 1; throws BudgetExceeded when a
/// conjugacy test is inconclusive.
std::optional<PeriodicRoot> periodic_root(const BraidWord& w, int d,
                                          std::size_t budget = kDefaultConjugacyBudget);

}  // namespace braidforge
