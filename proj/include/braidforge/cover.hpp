#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidforge/braid_word.hpp"
#include "braidforge/int_matrix.hpp"
#include "braidforge/laurent.hpp"

namespace braidforge::cover {

/// Topology of the k-fold cyclic cover of the disk branched over n points.
struct CoverData {
  int n = 0;
  int k = 0;
  int euler_char = 0;
  int boundary_components = 0;
  int genus = 0;
  int h1_rank = 0;
};

CoverData cover_data(int n, int k);

/// t_{i,l}^sign, the Dehn twist about the lifted curve with indices (i, l).
struct TwistLetter {
  int i = 1;
  int l = 1;
  int sign = 1;

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

class TwistWord {
 public:
  TwistWord(int n, int k, std::vector<TwistLetter> letters = {});

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<TwistLetter>& letters() const { return letters_; }

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  int n_;
  int k_;
  std::vector<TwistLetter> letters_;
};

/// Letters "t[i,l]" and "t[i,l]^-1" separated by whitespace.
TwistWord parse_twist_word(std::string_view text, int n, int k);
std::string format_twist_word(const TwistWord& w);

/// s_i -> t[i,1] ... t[i,k-1]; s_i^-1 -> t[i,k-1]^-1 ... t[i,1]^-1.
TwistWord lift_word(const BraidWord& b, int k);

/// Signs of the nonzero pairings on the basis e_{i,l} (index (i-1)(k-1)+l-1):
/// <e_{i,l}, e_{i,l+1}> = horizontal, <e_{i,l}, e_{i+1,l}> = vertical,
/// <e_{i,l}, e_{i+1,l+shift}> = diagonal. All other pairs are disjoint.
struct IntersectionConvention {
  int horizontal = 1;
  int vertical = 1;
  int diagonal = 1;
  int shift = 1;

  friend bool operator==(const IntersectionConvention&, const IntersectionConvention&) = default;
};

std::vector<IntersectionConvention> candidate_conventions();
/// Empty if the candidate passes the self-test, otherwise the failed check:
/// braid relations, deck symmetry, rank of the form, unimodular base change.
std::string convention_failure(const IntersectionConvention& c);
std::vector<IntersectionConvention> passing_conventions();
/// The passing convention with vertical = +1 and shift = -1; computed once.
const IntersectionConvention& intersection_convention();

IntMatrix intersection_form(int n, int k, const IntersectionConvention& c);
IntMatrix intersection_form(int n, int k);

/// e_{i,l} for l < k; for l = k the class -(e_{i,1} + ... + e_{i,k-1}).
IntVector twist_class(int i, int l, int n, int k);
/// Block diagonal, one companion block of 1 + t + ... + t^{k-1} per i.
IntMatrix deck_matrix(int n, int k);
/// x -> x + sign * <x, c> c with <x, y> = x^T J y.
IntMatrix transvection(const IntVector& c, const IntMatrix& form, int sign = 1);

/// Product of the letters' transvections in word order.
IntMatrix homology_rep(const TwistWord& w, const IntersectionConvention& c);
IntMatrix homology_rep(const TwistWord& w);

LaurentMatrix burau_reduced(const BraidWord& b);
/// Companion matrix of 1 + t + ... + t^{k-1}.
IntMatrix companion(int k);
/// burau_reduced(b) with t replaced by companion(k).
IntMatrix burau_at_companion(const BraidWord& b, int k);

/// Unimodular V with homology_rep(lift(s_i)) V = V burau_at_companion(s_i)
/// for every generator; cached per (n, k). Throws Error if none is found.
IntMatrix base_change(int n, int k);

/// Whether homology_rep(w) commutes with the deck matrix.
bool symmetry_check(const TwistWord& w);
/// Equality of the two homology actions; necessary for equality of the
/// mapping classes, not sufficient.
bool check_identity(const TwistWord& a, const TwistWord& b);

}  // namespace braidforge::cover
