#include "braidforge/verification.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "braidforge/cabling.hpp"
#include "braidforge/cover.hpp"
#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/qp.hpp"
#include "braidforge/random.hpp"

namespace braidforge {

namespace {

// A check fills `detail` and returns whether it held.
using CheckFn = std::function<bool(Rng&, std::string&)>;

struct Check {
  std::string name;
  std::string description;
  std::optional<double> time_limit;
  CheckFn run;
};

BraidWord w(const char* text, int n) { return parse_word(text, n); }

std::string count_failures(int failures, int total) {
  return std::to_string(total - failures) + "/" + std::to_string(total) + " cases hold";
}

bool b4_identity(Rng&, std::string& detail) {
  const bool eq = is_equal(w("2 3 -2 1 2 -1", 4), w("2 1 3 2 -1 -1", 4));
  detail = eq ? "equal" : "not equal";
  return eq;
}

bool negative_obstruction(Rng&, std::string& detail) {
  const auto beta = w("(1 2)^6 1^-13", 3);
  const auto v = qp::obstruct(beta);
  const auto ab = exponent_sum(beta);
  detail = qp::to_string(v.kind) + (v.reason ? "/" + qp::to_string(*v.reason) : "") +
           ", exponent sum " + std::to_string(ab);
  return v.kind == qp::Verdict::Kind::NotQP && v.reason == qp::Reason::NegativeExponentSum && ab == -1;
}

bool cabling_example(Rng&, std::string& detail) {
  const auto target = w("2 1 3 2 -1 -1", 4);
  const auto assembled = cabling::assemble(cabling::RegularForm{w("1", 2), {2, 2}, {w("-1 -1", 2)}});
  const bool assembles = is_equal(assembled, target);
  // The bandwise product as a single static tube of width 4.
  const qp::QPCertificate interior(4, {{w("2", 4), 3}, {w("1", 4), 2}});
  const auto cert = cabling::cable_certificate(qp::QPCertificate(1), {interior}, {4});
  const bool verifies = qp::verify(cert, w("2 3 -2 1 2 -1", 4)) && qp::verify(cert, target);
  detail = std::string(assembles ? "assembly matches" : "assembly differs") + ", certificate with " +
           std::to_string(cert.size()) + " bands " + (verifies ? "verifies" : "fails");
  return assembles && verifies && cert.size() == 2;
}

bool chain_relations(Rng&, std::string& detail) {
  const auto a = cover::homology_rep(cover::lift_word(w("(1 2)^6", 3), 2));
  const auto b = cover::homology_rep(cover::lift_word(w("(1 2 3)^4", 4), 2));
  const bool ok_a = a == IntMatrix::identity(2);
  const bool ok_b = b == IntMatrix::identity(3);
  detail = std::string("(3,2): ") + (ok_a ? "identity" : "not identity") + ", (4,2): " +
           (ok_b ? "identity" : "not identity");
  return ok_a && ok_b;
}

bool lift_symmetry(Rng& rng, std::string& detail) {
  int failures = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = rng.uniform(2, 5), k = rng.uniform(2, 4);
    const auto b = random_word(rng, n, rng.uniform(0, 30));
    if (!cover::symmetry_check(cover::lift_word(b, k))) ++failures;
  }
  detail = count_failures(failures, 500);
  return failures == 0;
}

bool representation(Rng&, std::string& detail) {
  int failures = 0, total = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= 4; ++k)
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const auto lhs = j == i + 1 ? std::vector<int>{i, j, i} : std::vector<int>{i, j};
          const auto rhs = j == i + 1 ? std::vector<int>{j, i, j} : std::vector<int>{j, i};
          ++total;
          if (!cover::check_identity(cover::lift_word(BraidWord::from_signed(n, lhs), k),
                                     cover::lift_word(BraidWord::from_signed(n, rhs), k)))
            ++failures;
        }
  detail = count_failures(failures, total);
  return failures == 0;
}

bool cross_oracle(Rng& rng, std::string& detail) {
  const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  int failures = 0;
  for (int t = 0; t < 200; ++t) {
    const auto [n, k] = sizes[t % 5];
    const auto v = cover::base_change(n, k);
    const auto b = random_word(rng, n, rng.uniform(0, 30));
    if (cover::burau_at_companion(b, k) != inverse_unimodular(v) * cover::homology_rep(cover::lift_word(b, k)) * v)
      ++failures;
  }
  detail = count_failures(failures, 200);
  return failures == 0;
}

bool periodicity(Rng&, std::string& detail) {
  std::ostringstream out;
  bool ok = true;
  for (int n = 2; n <= 5; ++n)
    for (int j = -4; j <= 4; ++j)
      for (auto kind : {RootKind::Delta, RootKind::Gamma})
        if (!is_periodic(root_word(kind, j, n))) {
          ok = false;
          out << "power " << j << " in B_" << n << " not periodic; ";
        }
  if (is_periodic(w("1", 3)) || is_periodic(w("1 -2", 3))) {
    ok = false;
    out << "non-periodic braid reported periodic; ";
  }
  const auto d2 = power(half_twist(3), 2);
  const auto r3 = periodic_root(d2, 3);
  const auto r2 = periodic_root(d2, 2);
  if (!r3 || r3->kind != RootKind::Delta || r3->power != 1) {
    ok = false;
    out << "cube root is not delta; ";
  }
  if (!r2 || r2->kind != RootKind::Gamma || r2->power != 1) {
    ok = false;
    out << "square root is not gamma; ";
  }
  const std::pair<BraidWord, int> qp_cases[] = {{d2, 3}, {d2, 2}, {power(half_twist(4), 2), 4}};
  for (const auto& [b, d] : qp_cases) {
    const auto cert = qp::qp_root_periodic(b, d);
    if (!cert || !is_equal(power(qp::expand(*cert), d), b)) {
      ok = false;
      out << "no verifying root certificate for d=" << d << "; ";
    }
  }
  detail = ok ? "all periodicity and root checks hold" : out.str();
  return ok;
}

bool root_uniqueness(Rng& rng, std::string& detail) {
  int failures = 0, implications = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = rng.uniform(2, 4);
    // Even cases start from a periodic braid, so equal powers actually occur.
    BraidWord a = t % 2 == 0 ? root_word(rng.coin() ? RootKind::Delta : RootKind::Gamma, rng.uniform(-2, 2), n)
                             : random_word(rng, n, rng.uniform(0, 10));
    const auto v = random_word(rng, n, rng.uniform(0, 6));
    a = concat(concat(v, a), invert_word(v));
    const auto u = random_word(rng, n, rng.uniform(0, 8));
    const auto b = concat(concat(u, a), invert_word(u));
    const auto res = is_conjugate(a, b);
    if (res.verdict != ConjugacyVerdict::Conjugate) {
      ++failures;
      continue;
    }
    for (int d : {2, 3})
      if (is_equal(power(a, d), power(b, d))) {
        ++implications;
        if (is_conjugate(a, b).verdict != ConjugacyVerdict::Conjugate) ++failures;
      }
  }
  detail = count_failures(failures, 50) + ", " + std::to_string(implications) + " equal-power implications exercised";
  return failures == 0;
}

bool garside_soundness(Rng& rng, std::string& detail) {
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.uniform(2, 6);
    const auto x = random_word(rng, n, rng.uniform(0, 40));
    const auto y = random_rewrite(x, rng, rng.uniform(1, 20));
    const auto d2 = power(half_twist(n), 2);
    if (normal_form(x) != normal_form(y) || !is_equal(concat(x, d2), concat(d2, x))) ++failures;
  }
  detail = count_failures(failures, 1000);
  return failures == 0;
}

bool certificate_algebra(Rng& rng, std::string& detail) {
  int failures = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = rng.uniform(2, 6);
    const auto c = random_certificate(rng, n, 6, 6);
    const auto x = qp::expand(c);
    const auto u = random_word(rng, n, rng.uniform(0, 8));
    const bool ok = qp::verify(c, x) && exponent_sum(x) == static_cast<std::int64_t>(c.size()) &&
                    qp::verify(qp::conjugate_certificate(c, u), concat(concat(u, x), invert_word(u)));
    if (!ok) ++failures;
  }
  detail = count_failures(failures, 500);
  return failures == 0;
}

std::vector<Check> checks() {
  return {
      {"b4-identity", "(s2 s3 s2^-1)(s1 s2 s1^-1) = (s2 s1 s3 s2) s1^-2 in B_4", 0.1, b4_identity},
      {"negative-obstruction", "(s1 s2)^6 s1^-13 is not quasipositive: exponent sum -1", 0.1,
       negative_obstruction},
      {"cabling-example", "regular form (s1; 2,2; s1^-2) assembles to the B_4 braid; cabled certificate has 2 bands",
       0.5, cabling_example},
      {"chain-relations", "lifts of (s1 s2)^6 at (3,2) and (s1 s2 s3)^4 at (4,2) act trivially on H1", 0.5,
       chain_relations},
      {"lift-symmetry", "500 random lifted braids commute with the deck transformation on H1", 30.0,
       lift_symmetry},
      {"representation", "lifted braid relations agree on H1 for n <= 5, k <= 4", std::nullopt, representation},
      {"burau-cross-oracle", "companion-specialized Burau equals base-changed H1 action on 200 random words", 60.0,
       cross_oracle},
      {"periodicity-roots", "powers of delta and gamma are periodic; roots of Delta_3^2; quasipositive roots", 5.0,
       periodicity},
      {"root-uniqueness", "50 conjugate pairs: conjugacy found, equal powers imply conjugacy", 120.0,
       root_uniqueness},
      {"garside-soundness", "normal form invariant under 1000 random rewrites; Delta^2 central", 60.0,
       garside_soundness},
      {"certificate-algebra", "500 random certificates: round trip, band count, conjugation", 30.0,
       certificate_algebra},
  };
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  int id = 0;
  for (const auto& check : checks()) {
    CheckResult r;
    r.id = ++id;
    r.name = check.name;
    r.description = check.description;
    r.time_limit = check.time_limit;
    Rng rng(seed + static_cast<std::uint64_t>(id));
    const auto start = std::chrono::steady_clock::now();
    bool held = false;
    try {
      held = check.run(rng, r.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("threw: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = !r.time_limit || r.seconds < *r.time_limit;
    if (held && !in_time) r.detail += " (over the time limit)";
    r.passed = held && in_time;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace braidforge
