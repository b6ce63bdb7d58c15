#include "braidforge/qp.hpp"

#include <stdexcept>

#include "braidforge/error.hpp"

namespace braidforge::qp {

QPCertificate::QPCertificate(int strands, std::vector<Band> bands)
    : strands_(strands), bands_(std::move(bands)) {
  for (const auto& b : bands_) {
    if (b.conjugator.strands() != strands_) throw StrandMismatch(b.conjugator.strands(), strands_);
    if (b.gen < 1 || b.gen > strands_ - 1)
      throw InvalidArgument("band generator " + std::to_string(b.gen) + " out of range for B_" +
                            std::to_string(strands_));
  }
}

QPCertificate positive_word_certificate(const BraidWord& positive) {
  std::vector<Band> bands;
  bands.reserve(positive.length());
  for (const auto& a : positive.letters()) {
    if (a.sign < 0) throw InvalidArgument("word is not positive");
    bands.push_back({BraidWord(positive.strands()), a.index});
  }
  return QPCertificate(positive.strands(), std::move(bands));
}

BraidWord expand(const QPCertificate& cert) {
  std::vector<ArtinLetter> letters;
  for (const auto& b : cert.bands()) {
    const auto& c = b.conjugator.letters();
    letters.insert(letters.end(), c.begin(), c.end());
    letters.push_back({b.gen, 1});
    for (auto it = c.rbegin(); it != c.rend(); ++it) letters.push_back(it->inverse());
  }
  return BraidWord(cert.strands(), std::move(letters));
}

bool verify(const QPCertificate& cert, const BraidWord& b) {
  if (cert.strands() != b.strands()) throw StrandMismatch(cert.strands(), b.strands());
  return is_equal(expand(cert), b);
}

QPCertificate conjugate_certificate(const QPCertificate& cert, const BraidWord& u) {
  if (cert.strands() != u.strands()) throw StrandMismatch(cert.strands(), u.strands());
  std::vector<Band> bands;
  bands.reserve(cert.size());
  for (const auto& b : cert.bands()) bands.push_back({free_reduce(concat(u, b.conjugator)), b.gen});
  return QPCertificate(cert.strands(), std::move(bands));
}

BraidWord sigma1_connector(int i, int strands) {
  if (i < 1 || i > strands - 1) throw InvalidArgument("generator out of range");
  std::vector<ArtinLetter> letters;
  for (int j = i - 1; j >= 1; --j) {
    letters.push_back({j, 1});
    letters.push_back({j + 1, 1});
  }
  return BraidWord(strands, std::move(letters));
}

QPCertificate to_sigma1_form(const QPCertificate& cert) {
  std::vector<Band> bands;
  bands.reserve(cert.size());
  for (const auto& b : cert.bands())
    bands.push_back({concat(b.conjugator, sigma1_connector(b.gen, cert.strands())), 1});
  return QPCertificate(cert.strands(), std::move(bands));
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::NegativeExponentSum:
      return "NEGATIVE_EXPONENT_SUM";
    case Reason::ZeroExponentNonidentity:
      return "ZERO_EXPONENT_NONIDENTITY";
    case Reason::AbelianizationOneNotBand:
      return "ABELIANIZATION_ONE_NOT_BAND";
  }
  return "?";
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::QP:
      return "QP";
    case Verdict::Kind::NotQP:
      return "NOT_QP";
    case Verdict::Kind::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

namespace {

Verdict qp(QPCertificate cert) { return {Verdict::Kind::QP, std::move(cert), std::nullopt}; }
Verdict not_qp(Reason r) { return {Verdict::Kind::NotQP, std::nullopt, r}; }

}  // namespace

Verdict obstruct(const BraidWord& b, std::size_t budget) {
  const int n = b.strands();
  const auto ab = exponent_sum(b);
  const bool identity = ab == 0 && is_equal(b, BraidWord(n));
  if (identity) return qp(QPCertificate(n));
  if (ab < 0) return not_qp(Reason::NegativeExponentSum);
  if (ab == 0) return not_qp(Reason::ZeroExponentNonidentity);
  if (ab == 1) {
    // A single band is a conjugate of sigma_1.
    const auto r = is_conjugate(BraidWord::from_signed(n, {1}), b, budget);
    if (r.verdict == ConjugacyVerdict::BudgetExceeded) return {};
    if (r.verdict == ConjugacyVerdict::NotConjugate) return not_qp(Reason::AbelianizationOneNotBand);
    QPCertificate cert(n, {{*r.witness, 1}});
    if (!verify(cert, b)) throw std::logic_error("band certificate failed verification");
    return qp(std::move(cert));
  }
  const auto nf = normal_form(b);
  if (nf.delta_power >= 0) {
    auto cert = positive_word_certificate(nf_to_word(nf));
    if (!verify(cert, b)) throw std::logic_error("positive certificate failed verification");
    return qp(std::move(cert));
  }
  return {};
}

std::optional<QPCertificate> qp_root_periodic(const BraidWord& b, int d, std::size_t budget) {
  const auto root = periodic_root(b, d, budget);
  if (!root || root->power < 0) return std::nullopt;
  const auto c = root_word(root->kind, root->power, b.strands());
  // conj * c^d * conj^-1 = b, so conj * c * conj^-1 is a d-th root of b.
  return conjugate_certificate(positive_word_certificate(c), root->conjugator);
}

}  // namespace braidforge::qp
