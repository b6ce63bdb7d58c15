#pragma once

#include <utility>
#include <vector>

#include "braidforge/braid_word.hpp"
#include "braidforge/qp.hpp"

namespace braidforge::cabling {

/// Cycles of the tubular permutation, 0-based. Each cycle starts at its
/// smallest tube a_1 and follows a_{j+1} = perm(a_j); cycles are sorted by
/// their first element.
using Orbits = std::vector<std::vector<int>>;

Orbits orbit_structure(const BraidWord& tubular);

/// Tubes braided by `tubular`, each tube carrying `widths[a]` strands, with
/// one interior braid per orbit (indexed as in orbit_structure) placed at
/// the end of the word on the block of the orbit's first tube.
struct RegularForm {
  BraidWord tubular;
  std::vector<int> widths;
  std::vector<BraidWord> interiors;

  int strands() const;
};

/// Regular form with identity interiors.
RegularForm with_trivial_interiors(BraidWord tubular, std::vector<int> widths);

/// Throws InvalidArgument unless widths are positive and constant along
/// orbits and each interior lives on its orbit's width.
void validate(const RegularForm& rf);

/// Interior braid per tube position a: the braiding inside the tube that
/// starts at a, placed at the end of the word on the block of perm(a).
struct TubePositionAssignment {
  std::vector<BraidWord> interiors;

  std::vector<int> widths() const;
};

/// p*q letters; swaps the block [1..p] past [p+1..p+q]. Sign +1 gives
/// prod_{r=p..1} (s_r s_{r+1} ... s_{r+q-1}); sign -1 gives the inverse of
/// the (q, p) positive word, so the permutation is the same block swap.
BraidWord block_transposition(int p, int q, int sign);

/// Cabling of the tubular word alone, letter by letter, starting from the
/// given widths.
BraidWord cable_tubular(const BraidWord& tubular, const std::vector<int>& widths);

BraidWord assemble(const RegularForm& rf);
BraidWord assemble_general(const BraidWord& tubular, const TubePositionAssignment& assignment);

struct Normalized {
  RegularForm form;
  /// u with u * assemble_general(...) * u^-1 equal to assemble(form).
  BraidWord conjugator;
};

/// Collects b_{i,1} ... b_{i,r_i} onto the first tube of every orbit.
Normalized normalize_interiors(const BraidWord& tubular, const TubePositionAssignment& assignment);

/// Certificate for assemble(tubular braid, widths, interior braids), the
/// braids being the expansions of the given certificates. Every tubular band
/// must exchange tubes of equal width; otherwise InvalidArgument.
qp::QPCertificate cable_certificate(const qp::QPCertificate& tubular_cert,
                                    const std::vector<qp::QPCertificate>& interior_certs,
                                    const std::vector<int>& widths);

}  // namespace braidforge::cabling
