#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/braid_word.hpp"
#include "braidforge/garside.hpp"

namespace braidforge::qp {

/// The band conjugator * sigma_gen * conjugator^-1.
struct Band {
  BraidWord conjugator;
  int gen = 1;

  friend bool operator==(const Band&, const Band&) = default;
};

/// Ordered product of bands; a witness that its expansion is quasipositive.
class QPCertificate {
 public:
  QPCertificate() = default;
  explicit QPCertificate(int strands) : strands_(strands) {}
  QPCertificate(int strands, std::vector<Band> bands);

  int strands() const { return strands_; }
  const std::vector<Band>& bands() const { return bands_; }
  std::size_t size() const { return bands_.size(); }

  friend bool operator==(const QPCertificate&, const QPCertificate&) = default;

 private:
  int strands_ = 1;
  std::vector<Band> bands_;
};

/// One certificate band per letter of a positive word.
QPCertificate positive_word_certificate(const BraidWord& positive);

BraidWord expand(const QPCertificate& cert);
bool verify(const QPCertificate& cert, const BraidWord& b);
/// Bandwise (w, i) -> (u w, i); certifies u * expand(cert) * u^-1.
QPCertificate conjugate_certificate(const QPCertificate& cert, const BraidWord& u);

/// Positive word c_i with c_i sigma_1 c_i^-1 = sigma_i:
/// c_i = (s_{i-1} s_i)(s_{i-2} s_{i-1}) ... (s_1 s_2).
BraidWord sigma1_connector(int i, int strands);
/// Rewrites every band over sigma_1.
QPCertificate to_sigma1_form(const QPCertificate& cert);

enum class Reason { NegativeExponentSum, ZeroExponentNonidentity, AbelianizationOneNotBand };

std::string to_string(Reason r);

struct Verdict {
  enum class Kind { QP, NotQP, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<QPCertificate> certificate;  // set iff kind == QP; always verified
  std::optional<Reason> reason;              // set iff kind == NotQP
};

std::string to_string(Verdict::Kind k);

/// Screens b against the cheap membership tests, in order: identity;
/// negative exponent sum; zero exponent sum; exponent sum one (QP iff b is
/// conjugate to sigma_1); positivity. Anything else is Unknown. An
/// inconclusive conjugacy search also yields Unknown.
Verdict obstruct(const BraidWord& b, std::size_t budget = kDefaultConjugacyBudget);

/// For periodic b: when some root x with x^d = b is conjugate to a
/// non-negative power of delta or gamma, a certificate for such an x
/// (expand(result)^d equals b). Throws InvalidArgument if b is not periodic.
std::optional<QPCertificate> qp_root_periodic(const BraidWord& b, int d,
                                              std::size_t budget = kDefaultConjugacyBudget);

}  // namespace braidforge::qp
