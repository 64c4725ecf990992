#ifndef INVOLUTE_COUNTING_HPP
#define INVOLUTE_COUNTING_HPP

#include "involute/jets.hpp"
#include "involute/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace involute {

/// Polynomial in r with exact coefficients; trailing zero coefficients are
/// dropped so equal polynomials compare equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  /// Coefficient of r^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& r) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "36 + 73/3 r + 9/2 r^2 + 1/6 r^3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// C(r + shift, k) as a polynomial in r.
Polynomial binomial_polynomial(long shift, unsigned k);

/// H(r) = sum_k alpha^(k) C(r+k-1, k-1)
Polynomial hilbert(const Characters& c, std::size_t n);

/// G(r) = sum_l gamma_l C(r+q+l+n-1, n-1)
Polynomial gauge_polynomial(const std::vector<unsigned>& gammas, std::size_t n, unsigned q);

Polynomial gauge_corrected_hilbert(const Polynomial& h, const Polynomial& g);

/// Inverts the Hilbert expansion: the characters whose Hilbert polynomial
/// is `h_bar`.
std::vector<Rational> gauge_corrected_characters(const Polynomial& h_bar, std::size_t n);

struct Strength {
  Rational z0;
  Rational z1;
};

/// Z0 = alpha^(n) - sum gamma_l,
/// Z1 = (n-1) (n/2 alpha^(n) + alpha^(n-1) - sum_l (n/2 + q + l) gamma_l).
Strength strength_coefficients(const Characters& c, const std::vector<unsigned>& gammas,
                               std::size_t n);

/// Z1 / ((n-1) q)
Rational dof(const Strength& z, std::size_t n, unsigned q);

/// m - sum gamma_l - (beta^(n-1) + sum_l l gamma_l) / q
Rational dof_closed_form(const Characters& c, const std::vector<unsigned>& gammas,
                         std::size_t n, std::size_t m);

/// f_1..f_n. All entries for n = 4 with q in {1, 2}; otherwise only f_{n-1}
/// and f_n, the rest empty.
std::vector<std::optional<Rational>> free_function_counts(const std::vector<Rational>& alpha_bar,
                                                          std::size_t n, unsigned q);

struct OracleSummary {
  unsigned max_r = 0;
  std::vector<Integer> parametric;  // order q+r for r = 0..max_r
  bool matches_hilbert = false;
  bool solved_form = false;

  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct AnalysisReport {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  unsigned q = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::vector<unsigned> gammas;
  std::vector<Integer> beta;
  std::vector<Integer> alpha;
  Polynomial hilbert;
  Polynomial gauge;
  Polynomial hilbert_bar;
  std::vector<Rational> alpha_bar;
  Rational z0;
  Rational z1;
  Rational dof;
  std::vector<std::optional<Rational>> f;
  bool compatible = false;
  bool parameter_special = false;
  std::vector<std::string> warnings;
  std::optional<OracleSummary> oracle;
  std::optional<nlohmann::json> trace;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Everything downstream of the characters of an involutive system.
AnalysisReport build_report(const std::string& name, const Characters& c, std::size_t n,
                            std::size_t m, const std::vector<unsigned>& gammas);

struct PatternFinding {
  std::string name;
  bool passed = false;
  /// Informational findings are reported but not expected to hold always.
  bool required = true;
  std::string detail;
};

std::vector<PatternFinding> patterns_check(const AnalysisReport& report);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);

/// Human-readable table.
std::string render_text(const AnalysisReport& report);

}  // namespace involute

#endif  // INVOLUTE_COUNTING_HPP
