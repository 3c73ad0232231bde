#pragma once
/**
 * @file gw_ring.hpp
 * @brief Grothendieck-Witt ring of a field with formal square classes d_1, ..., d_s.
 *
 * Elements are integer combinations of symbols <+-q * prod d_i> kept in a canonical
 * form whose only negative-sign key is <-1>. Equality up to the two-shift relations
 * 2<m> = 2<2m> is decided separately by equals_mod.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwfloor {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kMaxParams = 31;

inline std::uint64_t squarefree_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero has no square class");
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * n;
}

/// Bit mask with bit (i-1) set for every index i.
inline std::uint32_t param_subset(std::initializer_list<int> indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxParams) throw std::out_of_range("parameter index out of range");
    mask ^= 1u << (i - 1);
  }
  return mask;
}

inline std::vector<int> subset_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

struct GwMonomial {
  int sign = 1;
  std::uint64_t int_part = 1;
  std::uint32_t d_subset = 0;

  static GwMonomial make(int sign, std::uint64_t q, std::uint32_t subset = 0) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("monomial sign must be +1 or -1");
    return GwMonomial{sign, squarefree_part(q), subset};
  }
  static GwMonomial one() { return {}; }
  static GwMonomial minus_one() { return GwMonomial{-1, 1, 0}; }

  bool is_one() const { return sign == 1 && int_part == 1 && d_subset == 0; }
  bool is_minus_one() const { return sign == -1 && int_part == 1 && d_subset == 0; }
  int max_index() const { return d_subset ? 32 - std::countl_zero(d_subset) : 0; }

  auto operator<=>(const GwMonomial&) const = default;
};

inline GwMonomial mono_mul(const GwMonomial& a, const GwMonomial& b) {
  const std::uint64_t g = std::gcd(a.int_part, b.int_part);
  const std::uint64_t x = a.int_part / g, y = b.int_part / g;
  if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y)
    throw std::overflow_error("mono_mul: integer part overflow");
  return GwMonomial{a.sign * b.sign, x * y, a.d_subset ^ b.d_subset};
}

/// "+2*d1d3", "-1", "+1*d2".
inline std::string to_string(const GwMonomial& m) {
  std::string out = m.sign < 0 ? "-" : "+";
  out += std::to_string(m.int_part);
  if (m.d_subset) {
    out += '*';
    for (int i : subset_indices(m.d_subset)) out += 'd' + std::to_string(i);
  }
  return out;
}

inline GwMonomial parse_monomial(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed monomial: " + std::string(text)); };
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) fail();
  const int sign = text[0] == '-' ? -1 : 1;
  std::size_t pos = 1;
  std::uint64_t q = 0;
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    q = q * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
  }
  if (q == 0) fail();
  std::uint32_t subset = 0;
  if (pos < text.size()) {
    if (text[pos++] != '*' || pos >= text.size()) fail();
    int last = 0;
    while (pos < text.size()) {
      if (text[pos++] != 'd' || pos >= text.size()) fail();
      int i = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        i = i * 10 + (text[pos++] - '0');
      if (i <= last || i > kMaxParams) fail();
      last = i;
      subset |= 1u << (i - 1);
    }
  }
  if (squarefree_part(q) != q) fail();
  return GwMonomial{sign, q, subset};
}

class GwElem {
 public:
  using Terms = std::map<GwMonomial, Integer>;

  GwElem() = default;
  explicit GwElem(int num_params) : num_params_(num_params) {
    if (num_params < 0 || num_params > kMaxParams)
      throw std::invalid_argument("GwElem: unsupported number of parameters");
  }

  static GwElem term(const GwMonomial& m, int num_params, const Integer& c = 1) {
    GwElem e(num_params);
    e.add_term(m, c);
    return e;
  }
  static GwElem one(int num_params) { return term(GwMonomial::one(), num_params); }
  static GwElem hyperbolic(int num_params) {
    GwElem e = one(num_params);
    e.add_term(GwMonomial::minus_one(), 1);
    return e;
  }

  int num_params() const { return num_params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(const GwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds c*<m>, rewriting <-m> as <1> + <-1> - <m>.
  GwElem& add_term(const GwMonomial& m, const Integer& c) {
    if (m.max_index() > num_params_)
      throw std::out_of_range("monomial uses a parameter beyond num_params");
    if (m.sign > 0 || m.is_minus_one()) {
      bump(m, c);
    } else {
      bump(GwMonomial::one(), c);
      bump(GwMonomial::minus_one(), c);
      bump(GwMonomial{1, m.int_part, m.d_subset}, -c);
    }
    return *this;
  }

  GwElem& operator+=(const GwElem& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) bump(m, c);
    return *this;
  }
  GwElem& operator-=(const GwElem& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) bump(m, -c);
    return *this;
  }
  GwElem& operator*=(const GwElem& o) { return *this = *this * o; }

  friend GwElem operator+(GwElem a, const GwElem& b) { return a += b; }
  friend GwElem operator-(GwElem a, const GwElem& b) { return a -= b; }
  friend GwElem operator-(GwElem a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend GwElem operator*(const GwElem& a, const GwElem& b) {
    a.check_same(b);
    GwElem out(a.num_params_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
  }
  friend GwElem operator*(const Integer& k, GwElem a) {
    if (k == 0) return GwElem(a.num_params_);
    for (auto& [m, c] : a.terms_) c *= k;
    return a;
  }
  friend bool operator==(const GwElem&, const GwElem&) = default;

 private:
  void bump(const GwMonomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void check_same(const GwElem& o) const {
    if (o.num_params_ != num_params_)
      throw std::invalid_argument("GwElem: mismatched number of parameters");
  }

  int num_params_ = 0;
  Terms terms_;
};

inline GwElem add(const GwElem& a, const GwElem& b) { return a + b; }
inline GwElem neg(const GwElem& a) { return -a; }
inline GwElem mul(const GwElem& a, const GwElem& b) { return a * b; }

inline std::string to_string(const GwElem& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "<" + to_string(m) + ">";
  }
  return out;
}

inline Integer rank(const GwElem& e) {
  Integer r = 0;
  for (const auto& [m, c] : e.terms()) r += c;
  return r;
}

/// signs[i-1] is the sign of d_i.
inline Integer signature(const GwElem& e, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) < e.num_params())
    throw std::invalid_argument("signature: a sign is required for every parameter");
  Integer total = 0;
  for (const auto& [m, c] : e.terms()) {
    int v = m.sign;
    for (int i : subset_indices(m.d_subset)) v *= signs[i - 1] < 0 ? -1 : 1;
    total += v * c;
  }
  return total;
}

inline Integer signature_uniform(const GwElem& e, int sign) {
  return signature(e, std::vector<int>(e.num_params(), sign));
}

/// Sets d_i := 1. The parameter count is unchanged.
inline GwElem substitute_square(const GwElem& e, int i) {
  if (i < 1 || i > e.num_params()) throw std::out_of_range("substitute_square: index out of range");
  const std::uint32_t bit = 1u << (i - 1);
  GwElem out(e.num_params());
  for (const auto& [m, c] : e.terms()) out.add_term(GwMonomial{m.sign, m.int_part, m.d_subset & ~bit}, c);
  return out;
}

/// Same element viewed with a different parameter count; every index in use must survive.
inline GwElem with_num_params(const GwElem& e, int num_params) {
  GwElem out(num_params);
  for (const auto& [m, c] : e.terms()) out.add_term(m, c);
  return out;
}

namespace detail {

/// Integer row echelon reduction followed by a membership test for target.
inline bool in_integer_row_span(std::vector<std::vector<Integer>> rows, std::vector<Integer> target) {
  const std::size_t cols = target.size();
  std::size_t rank = 0;
  std::vector<std::size_t> lead;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (!pivot || abs(rows[i][c]) < abs(rows[*pivot][c])) pivot = i;
      }
      if (!pivot) break;
      std::swap(rows[rank], rows[*pivot]);
      bool cleared = true;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = rows[i][c] / rows[rank][c];
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[rank][k];
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[rank][c] != 0) {
      lead.push_back(c);
      ++rank;
    }
  }
  for (std::size_t r = 0; r < rank; ++r) {
    const std::size_t c = lead[r];
    if (target[c] % rows[r][c] != 0) return false;
    const Integer q = target[c] / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) target[k] -= q * rows[r][k];
  }
  return std::all_of(target.begin(), target.end(), [](const Integer& x) { return x == 0; });
}

inline GwMonomial doubled(const GwMonomial& m) { return mono_mul(m, GwMonomial{1, 2, 0}); }

}  // namespace detail

/// True iff e1 - e2 lies in the lattice spanned by 2<m> - 2<2m>.
inline bool equals_mod(const GwElem& e1, const GwElem& e2) {
  const GwElem diff = e1 - e2;
  if (diff.is_zero()) return true;
  std::map<GwMonomial, std::size_t> column;
  for (const auto& [m, c] : diff.terms()) {
    column.try_emplace(m, 0);
    if (!m.is_minus_one()) column.try_emplace(detail::doubled(m), 0);
  }
  std::size_t next = 0;
  for (auto& [m, idx] : column) idx = next++;

  std::vector<std::vector<Integer>> gens;
  for (const auto& [m, idx] : column) {
    if (m.is_minus_one() || m.int_part % 2 == 0) continue;
    std::vector<Integer> row(column.size());
    row[idx] = 2;
    row[column.at(detail::doubled(m))] = -2;
    gens.push_back(std::move(row));
  }
  std::vector<Integer> target(column.size());
  for (const auto& [m, c] : diff.terms()) target[column.at(m)] = c;
  return detail::in_integer_row_span(std::move(gens), std::move(target));
}

/// c_{s+1} h + c_1 beta^(1) + ... + c_s beta^(s) + c_0 <1>.
struct BetaForm {
  Integer h_coeff = 0;
  std::vector<Integer> beta_coeffs;
  Integer one_coeff = 0;

  friend bool operator==(const BetaForm&, const BetaForm&) = default;
};

/// Expands the elementary symmetric polynomials in beta_i = <2> + <2 d_i>.
inline GwElem expand(const BetaForm& form) {
  const int s = static_cast<int>(form.beta_coeffs.size());
  GwElem out = form.h_coeff * GwElem::hyperbolic(s);
  out.add_term(GwMonomial::one(), form.one_coeff);
  for (std::uint32_t subset = 1; subset < (1u << s); ++subset) {
    const int size = std::popcount(subset);
    const Integer& c = form.beta_coeffs[size - 1];
    if (c == 0) continue;
    const std::uint64_t q = size % 2 ? 2 : 1;
    for (std::uint32_t sub = subset;; sub = (sub - 1) & subset) {
      out.add_term(GwMonomial{1, q, sub}, c);
      if (sub == 0) break;
    }
  }
  return out;
}

class ResidualNotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace detail

/// Writes e in the beta basis. Throws ResidualNotInSpan when that is impossible.
inline BetaForm beta_decompose(const GwElem& e) {
  const int s = e.num_params();
  BetaForm form;
  form.h_coeff = e.coeff(GwMonomial::minus_one());
  const GwElem rest = e - form.h_coeff * GwElem::hyperbolic(s);

  std::vector<Integer> class_sum(std::size_t{1} << s);
  for (const auto& [m, c] : rest.terms()) {
    if (m.sign < 0 || (m.int_part != 1 && m.int_part != 2))
      throw ResidualNotInSpan("term " + to_string(m) + " is outside the span of h, <1> and beta products");
    class_sum[m.d_subset] += c;
  }

  std::vector<Integer> c(s + 1);
  for (int l = s; l >= 1; --l) {
    std::optional<Integer> value;
    for (std::uint32_t subset = 1; subset < (1u << s); ++subset) {
      if (std::popcount(subset) != l) continue;
      Integer v = class_sum[subset];
      for (int big = l + 1; big <= s; ++big) v -= c[big] * detail::binomial(s - l, big - l);
      if (!value) {
        value = v;
      } else if (*value != v) {
        throw ResidualNotInSpan("subsets of size " + std::to_string(l) +
                                " carry unequal coefficients; the form is not symmetric");
      }
    }
    c[l] = *value;
  }
  form.one_coeff = class_sum[0];
  for (int big = 1; big <= s; ++big) form.one_coeff -= c[big] * detail::binomial(s, big);
  form.beta_coeffs.assign(c.begin() + 1, c.end());

  if (!equals_mod(expand(form), e))
    throw ResidualNotInSpan("remainder after elimination violates the two-shift parity");
  return form;
}

enum class TraceOf { Unit, X };

/// Trace form of L[x]/(x^m - d) applied to 1 or to x.
inline GwElem trace_kummer(int m, const GwMonomial& d, TraceOf which, int num_params) {
  if (m < 1) throw std::invalid_argument("trace_kummer: degree must be positive");
  const GwMonomial mono_m = GwMonomial::make(1, static_cast<std::uint64_t>(m));
  const GwMonomial mono_md = mono_mul(mono_m, d);
  const GwElem h = GwElem::hyperbolic(num_params);
  GwElem out(num_params);
  if (which == TraceOf::Unit) {
    out.add_term(mono_m, 1);
    if (m % 2) return out + Integer((m - 1) / 2) * h;
    out.add_term(mono_md, 1);
    return out + Integer((m - 2) / 2) * h;
  }
  if (m % 2) {
    out.add_term(mono_md, 1);
    return out + Integer((m - 1) / 2) * h;
  }
  return Integer(m / 2) * h;
}

struct DisplayForm {
  Integer h_count = 0;
  std::vector<std::pair<GwMonomial, Integer>> residual;
};

inline DisplayForm display(const GwElem& e) {
  DisplayForm out;
  out.h_count = e.coeff(GwMonomial::minus_one());
  for (const auto& [m, c] : e.terms()) {
    if (m.is_minus_one()) continue;
    const Integer v = m.is_one() ? c - out.h_count : c;
    if (v != 0) out.residual.emplace_back(m, v);
  }
  if (out.h_count != 0 && e.coeff(GwMonomial::one()) == 0)
    out.residual.insert(out.residual.begin(), {GwMonomial::one(), -out.h_count});
  return out;
}

inline GwElem assemble(const DisplayForm& form, int num_params) {
  GwElem out = form.h_count * GwElem::hyperbolic(num_params);
  for (const auto& [m, c] : form.residual) out.add_term(m, c);
  return out;
}

}  // namespace gwfloor
