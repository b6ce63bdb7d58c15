#include "braidforge/cover.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "braidforge/error.hpp"

namespace braidforge::cover {

namespace {

void require_cover(int n, int k) {
  if (n < 2 || k < 2)
    throw InvalidArgument("cover needs n >= 2 and k >= 2, got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
}

int basis_index(int i, int l, int k) { return (i - 1) * (k - 1) + (l - 1); }

IntMatrix generator_image(int i, int n, int k, const IntMatrix& form, int sign) {
  IntMatrix m = IntMatrix::identity((n - 1) * (k - 1));
  for (int l = 1; l < k; ++l) {
    const int ll = sign > 0 ? l : k - l;
    m = m * transvection(twist_class(i, ll, n, k), form, sign);
  }
  return m;
}

std::string check_cover(const IntersectionConvention& c, int n, int k) {
  const auto form = intersection_form(n, k, c);
  std::vector<IntMatrix> h;
  for (int i = 1; i < n; ++i) h.push_back(generator_image(i, n, k, form, 1));
  for (int i = 0; i + 1 < n - 1; ++i)
    if (h[i] * h[i + 1] * h[i] != h[i + 1] * h[i] * h[i + 1]) return "braid relations";
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      if (h[i] * h[j] != h[j] * h[i]) return "braid relations";
  const auto deck = deck_matrix(n, k);
  if (transpose(deck) * form * deck != form) return "deck symmetry";
  for (const auto& m : h)
    if (deck * m != m * deck) return "deck symmetry";
  if (rank(form) != 2 * cover_data(n, k).genus) return "rank of the form";
  return {};
}

// Unimodular V with H_i V = V B_i for all generators, or an empty matrix.
IntMatrix find_base_change(int n, int k, const IntersectionConvention& c) {
  const int d = (n - 1) * (k - 1);
  const auto form = intersection_form(n, k, c);
  const int unknowns = d * d;
  IntMatrix system((n - 1) * unknowns, unknowns);
  for (int i = 1; i < n; ++i) {
    const auto h = generator_image(i, n, k, form, 1);
    const auto b = burau_at_companion(BraidWord::from_signed(n, {i}), k);
    for (int r = 0; r < d; ++r)
      for (int col = 0; col < d; ++col) {
        const int eq = (i - 1) * unknowns + r * d + col;
        for (int s = 0; s < d; ++s) {
          system(eq, s * d + col) += h(r, s);
          system(eq, r * d + s) -= b(s, col);
        }
      }
  }
  const auto basis = nullspace(system);
  if (basis.empty() || basis.size() > 6) return {};
  // Odometer over coefficients {0, 1, -1, 2, -2} per basis vector.
  static constexpr int kValues[] = {0, 1, -1, 2, -2};
  std::vector<int> digit(basis.size(), 0);
  while (true) {
    IntMatrix v(d, d);
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (int x = 0; x < unknowns; ++x) v(x / d, x % d) += kValues[digit[j]] * basis[j][x];
    const auto det = determinant(v);
    if (det == 1 || det == -1) return v;
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == 5) digit[pos++] = 0;
    if (pos == digit.size()) return {};
  }
}

// Sizes exercised by the convention self-test.
constexpr std::pair<int, int> kSelfTestSizes[] = {{2, 3}, {3, 2}, {3, 3}, {4, 3}, {3, 4}, {4, 2}};

}  // namespace

CoverData cover_data(int n, int k) {
  require_cover(n, k);
  CoverData d;
  d.n = n;
  d.k = k;
  d.euler_char = n + k - n * k;
  d.boundary_components = std::gcd(n, k);
  d.h1_rank = (n - 1) * (k - 1);
  d.genus = (2 - d.euler_char - d.boundary_components) / 2;
  return d;
}

TwistWord::TwistWord(int n, int k, std::vector<TwistLetter> letters)
    : n_(n), k_(k), letters_(std::move(letters)) {
  if (n < 1 || k < 2) throw InvalidArgument("twist words need n >= 1 and k >= 2");
  for (const auto& t : letters_) {
    if (t.i < 1 || t.i > n - 1 || t.l < 1 || t.l > k - 1 || (t.sign != 1 && t.sign != -1))
      throw InvalidArgument("twist t[" + std::to_string(t.i) + "," + std::to_string(t.l) +
                            "] out of range for n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
}

TwistWord parse_twist_word(std::string_view text, int n, int k) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    if (pos >= text.size() || text[pos] != ch) throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  auto number = [&] {
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (value > 100000) throw ParseError("index too large", start);
      value = value * 10 + (text[pos++] - '0');
    }
    if (pos == start) throw ParseError("expected an index", pos);
    return value;
  };
  std::vector<TwistLetter> letters;
  for (skip_space(); pos < text.size(); skip_space()) {
    const std::size_t start = pos;
    expect('t');
    expect('[');
    skip_space();
    TwistLetter t;
    t.i = number();
    skip_space();
    expect(',');
    skip_space();
    t.l = number();
    skip_space();
    expect(']');
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      expect('-');
      expect('1');
      t.sign = -1;
    }
    if (t.i < 1 || t.i > n - 1 || t.l < 1 || t.l > k - 1) throw ParseError("twist index out of range", start);
    letters.push_back(t);
  }
  return TwistWord(n, k, std::move(letters));
}

std::string format_twist_word(const TwistWord& w) {
  std::string out;
  for (const auto& t : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "t[" + std::to_string(t.i) + "," + std::to_string(t.l) + "]";
    if (t.sign < 0) out += "^-1";
  }
  return out;
}

TwistWord lift_word(const BraidWord& b, int k) {
  std::vector<TwistLetter> letters;
  for (const auto& a : b.letters()) {
    for (int l = 1; l < k; ++l)
      letters.push_back(a.sign > 0 ? TwistLetter{a.index, l, 1} : TwistLetter{a.index, k - l, -1});
  }
  return TwistWord(b.strands(), k, std::move(letters));
}

std::vector<IntersectionConvention> candidate_conventions() {
  std::vector<IntersectionConvention> out;
  for (int h : {1, -1})
    for (int v : {1, -1})
      for (int g : {1, -1})
        for (int s : {1, -1}) out.push_back({h, v, g, s});
  return out;
}

std::string convention_failure(const IntersectionConvention& c) {
  for (const auto& [n, k] : kSelfTestSizes) {
    if (auto failure = check_cover(c, n, k); !failure.empty()) return failure;
  }
  for (const auto& [n, k] : kSelfTestSizes)
    if (find_base_change(n, k, c).rows() == 0) return "unimodular base change";
  return {};
}

std::vector<IntersectionConvention> passing_conventions() {
  std::vector<IntersectionConvention> out;
  for (const auto& c : candidate_conventions())
    if (convention_failure(c).empty()) out.push_back(c);
  return out;
}

const IntersectionConvention& intersection_convention() {
  static const IntersectionConvention chosen = [] {
    for (const auto& c : passing_conventions())
      if (c.vertical == 1 && c.shift == -1) return c;
    throw Error("no intersection sign convention passes the self-test");
  }();
  return chosen;
}

IntMatrix intersection_form(int n, int k, const IntersectionConvention& c) {
  require_cover(n, k);
  const int d = (n - 1) * (k - 1);
  IntMatrix form(d, d);
  auto put = [&](int a, int b, int s) {
    form(a, b) += s;
    form(b, a) -= s;
  };
  for (int i = 1; i < n; ++i)
    for (int l = 1; l < k; ++l) {
      const int a = basis_index(i, l, k);
      if (l + 1 <= k - 1) put(a, basis_index(i, l + 1, k), c.horizontal);
      if (i + 1 <= n - 1) {
        put(a, basis_index(i + 1, l, k), c.vertical);
        const int l2 = l + c.shift;
        if (l2 >= 1 && l2 <= k - 1) put(a, basis_index(i + 1, l2, k), c.diagonal);
      }
    }
  return form;
}

IntMatrix intersection_form(int n, int k) { return intersection_form(n, k, intersection_convention()); }

IntVector twist_class(int i, int l, int n, int k) {
  require_cover(n, k);
  if (i < 1 || i > n - 1 || l < 1 || l > k)
    throw InvalidArgument("class index (" + std::to_string(i) + "," + std::to_string(l) + ") out of range");
  IntVector v(static_cast<std::size_t>((n - 1) * (k - 1)), 0);
  if (l < k) {
    v[basis_index(i, l, k)] = 1;
  } else {
    for (int j = 1; j < k; ++j) v[basis_index(i, j, k)] = -1;
  }
  return v;
}

IntMatrix companion(int k) {
  if (k < 2) throw InvalidArgument("companion matrix needs k >= 2");
  IntMatrix m(k - 1, k - 1);
  for (int l = 0; l + 1 < k - 1; ++l) m(l + 1, l) = 1;
  for (int l = 0; l < k - 1; ++l) m(l, k - 2) = -1;
  return m;
}

IntMatrix deck_matrix(int n, int k) {
  require_cover(n, k);
  return block_diagonal(std::vector<IntMatrix>(static_cast<std::size_t>(n - 1), companion(k)));
}

IntMatrix transvection(const IntVector& c, const IntMatrix& form, int sign) {
  const int d = form.rows();
  if (static_cast<int>(c.size()) != d) throw InvalidArgument("class has the wrong dimension");
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  // M = I + sign * c (J c)^T.
  const IntVector jc = form * c;
  IntMatrix m = IntMatrix::identity(d);
  for (int r = 0; r < d; ++r)
    for (int col = 0; col < d; ++col) m(r, col) += sign * c[r] * jc[col];
  return m;
}

IntMatrix homology_rep(const TwistWord& w, const IntersectionConvention& c) {
  const int n = w.n(), k = w.k();
  if (n < 2) return IntMatrix(0, 0);
  const auto form = intersection_form(n, k, c);
  IntMatrix m = IntMatrix::identity((n - 1) * (k - 1));
  for (const auto& t : w.letters()) m = m * transvection(twist_class(t.i, t.l, n, k), form, t.sign);
  return m;
}

IntMatrix homology_rep(const TwistWord& w) { return homology_rep(w, intersection_convention()); }

LaurentMatrix burau_reduced(const BraidWord& b) {
  const int n = b.strands();
  if (n < 2) throw InvalidArgument("reduced Burau needs n >= 2");
  const int d = n - 1;
  const auto t = LaurentPoly::monomial(1, 1);
  const auto t_inv = LaurentPoly::monomial(1, -1);
  LaurentMatrix m = LaurentMatrix::identity(d);
  for (const auto& a : b.letters()) {
    // Row i-1 of the generator: (t, -t, 1) at columns i-2, i-1, i; the
    // inverse has (1, -t^-1, t^-1).
    LaurentMatrix g = LaurentMatrix::identity(d);
    const int r = a.index - 1;
    if (r >= 1) g(r, r - 1) = a.sign > 0 ? t : LaurentPoly(1);
    g(r, r) = LaurentPoly(-1) * (a.sign > 0 ? t : t_inv);
    if (r + 1 < d) g(r, r + 1) = a.sign > 0 ? LaurentPoly(1) : t_inv;
    m = m * g;
  }
  return m;
}

IntMatrix burau_at_companion(const BraidWord& b, int k) {
  const auto kmat = companion(k);
  return substitute(burau_reduced(b), kmat, power(kmat, k - 1));
}

IntMatrix base_change(int n, int k) {
  require_cover(n, k);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, IntMatrix> cache;
  const auto& convention = intersection_convention();
  std::lock_guard lock(mutex);
  auto it = cache.find({n, k});
  if (it == cache.end()) {
    auto v = find_base_change(n, k, convention);
    if (v.rows() == 0)
      throw Error("no unimodular base change for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    it = cache.emplace(std::pair{n, k}, std::move(v)).first;
  }
  return it->second;
}

bool symmetry_check(const TwistWord& w) {
  if (w.n() < 2) return true;
  const auto m = homology_rep(w);
  const auto deck = deck_matrix(w.n(), w.k());
  return m * deck == deck * m;
}

bool check_identity(const TwistWord& a, const TwistWord& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw InvalidArgument("twist words live on different covers");
  return homology_rep(a) == homology_rep(b);
}

}  // namespace braidforge::cover
