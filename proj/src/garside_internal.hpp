#pragma once

// Permutation-braid arithmetic shared by the normal form and conjugacy code.

#include <vector>

#include "braidforge/braid_word.hpp"
#include "braidforge/garside.hpp"

namespace braidforge::detail {

/// Permutation braid as raw images (see Permutation for the convention).
using Simple = std::vector<int>;

struct Nf {
  int n = 1;
  int p = 0;
  std::vector<Simple> f;

  int sup() const { return p + static_cast<int>(f.size()); }
  friend bool operator==(const Nf&, const Nf&) = default;
};

Simple identity_simple(int n);
Simple delta_simple(int n);
Simple generator_simple(int n, int i);  // sigma_i, 1-based i
bool is_identity(const Simple& s);
bool is_delta(const Simple& s);
Simple tau(const Simple& s);
Simple tau_power(const Simple& s, int p);
Simple inverse(const Simple& s);
/// Delta s^-1 and s^-1 Delta.
Simple left_complement(const Simple& s);
Simple right_complement(const Simple& s);

/// Makes (a, b) left-weighted in place by moving letters from b into a.
bool left_weight(Simple& a, Simple& b);

/// x <- x * s, keeping x in left normal form.
void right_multiply(Nf& x, const Simple& s);
/// x <- x * s^-1.
void right_multiply_inverse(Nf& x, const Simple& s);
/// Left normal form of Delta^p * f_1 * ... * f_r for arbitrary simple f_i.
Nf normalize(int n, int p, const std::vector<Simple>& factors);

Nf nf_of_word(const BraidWord& w);
NormalForm to_public(const Nf& x);
Nf from_public(const NormalForm& nf);

/// s^-1 x s.
Nf conjugate_by_simple(const Nf& x, const Simple& s);

BraidWord simple_word(const Simple& s);

}  // namespace braidforge::detail
