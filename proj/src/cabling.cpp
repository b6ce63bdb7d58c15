#include "braidforge/cabling.hpp"

#include <numeric>
#include <string>

#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"

namespace braidforge::cabling {

namespace {

int offset_of(const std::vector<int>& config, int position) {
  return std::accumulate(config.begin(), config.begin() + position, 0);
}

void append(std::vector<ArtinLetter>& out, const BraidWord& w, int offset) {
  for (const auto& a : w.letters()) out.push_back({a.index + offset, a.sign});
}

void check_widths(const Orbits& orbits, const std::vector<int>& widths, int m) {
  if (static_cast<int>(widths.size()) != m)
    throw InvalidArgument("expected " + std::to_string(m) + " widths, got " +
                          std::to_string(widths.size()));
  for (int w : widths)
    if (w < 1) throw InvalidArgument("tube widths must be positive");
  for (const auto& orbit : orbits)
    for (int a : orbit)
      if (widths[a] != widths[orbit.front()])
        throw InvalidArgument("widths differ along the orbit of tube " + std::to_string(orbit.front() + 1));
}

// Cables letters of `w` onto `out`, updating the running width configuration.
void cable_into(std::vector<ArtinLetter>& out, const BraidWord& w, std::vector<int>& config) {
  for (const auto& a : w.letters()) {
    const int j = a.index - 1;
    const int offset = offset_of(config, j);
    append(out, block_transposition(config[j], config[j + 1], a.sign), offset);
    std::swap(config[j], config[j + 1]);
  }
}

}  // namespace

Orbits orbit_structure(const BraidWord& tubular) {
  const auto perm = underlying_permutation(tubular);
  Orbits orbits;
  std::vector<bool> seen(static_cast<std::size_t>(perm.size()), false);
  for (int a = 0; a < perm.size(); ++a) {
    if (seen[a]) continue;
    std::vector<int> cycle;
    for (int x = a; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    orbits.push_back(std::move(cycle));
  }
  return orbits;
}

int RegularForm::strands() const { return std::accumulate(widths.begin(), widths.end(), 0); }

RegularForm with_trivial_interiors(BraidWord tubular, std::vector<int> widths) {
  const auto orbits = orbit_structure(tubular);
  RegularForm rf{std::move(tubular), std::move(widths), {}};
  if (rf.widths.size() != static_cast<std::size_t>(rf.tubular.strands()))
    throw InvalidArgument("expected one width per tube");
  for (const auto& orbit : orbits) rf.interiors.emplace_back(rf.widths.at(orbit.front()));
  return rf;
}

void validate(const RegularForm& rf) {
  const auto orbits = orbit_structure(rf.tubular);
  check_widths(orbits, rf.widths, rf.tubular.strands());
  if (rf.interiors.size() != orbits.size())
    throw InvalidArgument("expected " + std::to_string(orbits.size()) + " interior braids, got " +
                          std::to_string(rf.interiors.size()));
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (rf.interiors[i].strands() != rf.widths[orbits[i].front()])
      throw InvalidArgument("interior braid " + std::to_string(i) + " has " +
                            std::to_string(rf.interiors[i].strands()) + " strands, tube width is " +
                            std::to_string(rf.widths[orbits[i].front()]));
}

std::vector<int> TubePositionAssignment::widths() const {
  std::vector<int> out;
  out.reserve(interiors.size());
  for (const auto& b : interiors) out.push_back(b.strands());
  return out;
}

BraidWord block_transposition(int p, int q, int sign) {
  if (p < 1 || q < 1) throw InvalidArgument("block widths must be positive");
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  if (sign < 0) return invert_word(block_transposition(q, p, 1));
  std::vector<ArtinLetter> letters;
  letters.reserve(static_cast<std::size_t>(p) * q);
  for (int r = p; r >= 1; --r)
    for (int s = r; s <= r + q - 1; ++s) letters.push_back({s, 1});
  return BraidWord(p + q, std::move(letters));
}

BraidWord cable_tubular(const BraidWord& tubular, const std::vector<int>& widths) {
  if (widths.size() != static_cast<std::size_t>(tubular.strands()))
    throw InvalidArgument("expected one width per tube");
  auto config = widths;
  std::vector<ArtinLetter> letters;
  cable_into(letters, tubular, config);
  return BraidWord(std::accumulate(widths.begin(), widths.end(), 0), std::move(letters));
}

BraidWord assemble(const RegularForm& rf) {
  validate(rf);
  const auto orbits = orbit_structure(rf.tubular);
  auto config = rf.widths;
  std::vector<ArtinLetter> letters;
  cable_into(letters, rf.tubular, config);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    append(letters, rf.interiors[i], offset_of(config, orbits[i].front()));
  return BraidWord(rf.strands(), std::move(letters));
}

BraidWord assemble_general(const BraidWord& tubular, const TubePositionAssignment& assignment) {
  const auto widths = assignment.widths();
  check_widths(orbit_structure(tubular), widths, tubular.strands());
  const auto perm = underlying_permutation(tubular);
  auto config = widths;
  std::vector<ArtinLetter> letters;
  cable_into(letters, tubular, config);
  for (int a = 0; a < tubular.strands(); ++a)
    append(letters, assignment.interiors[a], offset_of(config, perm[a]));
  return BraidWord(std::accumulate(widths.begin(), widths.end(), 0), std::move(letters));
}

Normalized normalize_interiors(const BraidWord& tubular, const TubePositionAssignment& assignment) {
  const auto widths = assignment.widths();
  const auto orbits = orbit_structure(tubular);
  check_widths(orbits, widths, tubular.strands());
  const int n = std::accumulate(widths.begin(), widths.end(), 0);

  RegularForm rf{tubular, widths, {}};
  std::vector<ArtinLetter> conj;
  for (const auto& orbit : orbits) {
    const int r = static_cast<int>(orbit.size());
    BraidWord prefix(widths[orbit.front()]);
    // Step j moves b_1...b_j from the block of a_{j+1} to the block of a_{j+2}.
    for (int j = 0; j < r; ++j) {
      prefix = concat(prefix, assignment.interiors[orbit[j]]);
      if (j + 1 < r && !prefix.empty()) {
        std::vector<ArtinLetter> step;
        append(step, prefix, offset_of(widths, orbit[j + 1]));
        step.insert(step.end(), conj.begin(), conj.end());
        conj = std::move(step);
      }
    }
    rf.interiors.push_back(std::move(prefix));
  }
  Normalized out{std::move(rf), BraidWord(n, std::move(conj))};
  const auto general = assemble_general(tubular, assignment);
  const auto& u = out.conjugator;
  if (!is_equal(concat(concat(u, general), invert_word(u)), assemble(out.form)))
    throw Error("normalize_interiors: conjugation identity failed");
  return out;
}

qp::QPCertificate cable_certificate(const qp::QPCertificate& tubular_cert,
                                    const std::vector<qp::QPCertificate>& interior_certs,
                                    const std::vector<int>& widths) {
  const int m = tubular_cert.strands();
  const auto tubular = qp::expand(tubular_cert);
  const auto orbits = orbit_structure(tubular);
  check_widths(orbits, widths, m);
  if (interior_certs.size() != orbits.size())
    throw InvalidArgument("expected " + std::to_string(orbits.size()) + " interior certificates");
  const int n = std::accumulate(widths.begin(), widths.end(), 0);

  // A band w s_g w^-1 exchanging tubes of equal width leaves the width
  // configuration unchanged, so it cables to cab(w) T cab(w)^-1 with T the
  // positive block transposition; each letter of T gives one band.
  std::vector<qp::Band> out;
  for (const auto& band : tubular_cert.bands()) {
    auto config = widths;
    std::vector<ArtinLetter> conj;
    cable_into(conj, band.conjugator, config);
    const int j = band.gen - 1;
    if (config[j] != config[j + 1])
      throw InvalidArgument("tubular band exchanges tubes of unequal width");
    const int offset = offset_of(config, j);
    const BraidWord cabled(n, std::move(conj));
    const auto bt = block_transposition(config[j], config[j + 1], 1);
    for (const auto& x : bt.letters())
      out.push_back({cabled, x.index + offset});
  }

  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& c = interior_certs[i];
    const int width = widths[orbits[i].front()];
    if (c.strands() != width) throw StrandMismatch(c.strands(), width);
    const int offset = offset_of(widths, orbits[i].front());
    for (const auto& b : c.bands()) out.push_back({embed_word(b.conjugator, offset, n), b.gen + offset});
  }

  qp::QPCertificate result(n, std::move(out));
  std::vector<BraidWord> interiors;
  for (const auto& c : interior_certs) interiors.push_back(qp::expand(c));
  if (!qp::verify(result, assemble(RegularForm{tubular, widths, std::move(interiors)})))
    throw Error("cable_certificate: result does not verify");
  return result;
}

}  // namespace braidforge::cabling
