#include "involute/counting.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace involute {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& r) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0 || mag != 1) out += involute::to_string(mag);
    if (i > 0) {
      if (mag != 1) out += " ";
      out += "r";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial binomial_polynomial(long shift, unsigned k) {
  Polynomial out(std::vector<Rational>{Rational(1)});
  for (unsigned i = 0; i < k; ++i) {
    out = out * Polynomial({Rational(shift - static_cast<long>(i)), Rational(1)});
  }
  Integer fact = 1;
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  return Rational(1, 1) / Rational(fact) * out;
}

Polynomial hilbert(const Characters& c, std::size_t n) {
  Polynomial out;
  for (std::size_t k = 1; k <= n; ++k) {
    out = out + Rational(c.alpha[k - 1]) *
                    binomial_polynomial(static_cast<long>(k) - 1, static_cast<unsigned>(k - 1));
  }
  return out;
}

Polynomial gauge_polynomial(const std::vector<unsigned>& gammas, std::size_t n, unsigned q) {
  Polynomial out;
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    if (gammas[l] == 0) continue;
    const long shift = static_cast<long>(q + l + n - 1);
    out = out + Rational(gammas[l]) * binomial_polynomial(shift, static_cast<unsigned>(n - 1));
  }
  return out;
}

Polynomial gauge_corrected_hilbert(const Polynomial& h, const Polynomial& g) { return h - g; }

std::vector<Rational> gauge_corrected_characters(const Polynomial& h_bar, std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (h_bar.degree() >= static_cast<long>(n)) throw std::invalid_argument("degree exceeds n-1");
  std::vector<Integer> fact(n + 1, 1);
  for (std::size_t i = 2; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t k = n; k >= 1; --k) {
    Rational value = Rational(fact[k - 1]) * h_bar.coefficient(k - 1);
    for (std::size_t j = k + 1; j <= n; ++j) {
      const Integer s = modified_stirling(static_cast<long>(j - 1), static_cast<long>(j - k), 0);
      value -= Rational(fact[k - 1]) / Rational(fact[j - 1]) * out[j - 1] * Rational(s);
    }
    out[k - 1] = value;
  }
  return out;
}

Strength strength_coefficients(const Characters& c, const std::vector<unsigned>& gammas,
                               std::size_t n) {
  if (n < 2) throw std::invalid_argument("strength needs n >= 2");
  Rational sum_gamma = 0;
  Rational weighted = 0;
  const Rational half_n(static_cast<long>(n), 2);
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    sum_gamma += gammas[l];
    weighted += (half_n + c.q + static_cast<long>(l)) * gammas[l];
  }
  Strength z;
  z.z0 = Rational(c.alpha[n - 1]) - sum_gamma;
  z.z1 = static_cast<long>(n - 1) *
         (half_n * Rational(c.alpha[n - 1]) + Rational(c.alpha[n - 2]) - weighted);
  return z;
}

Rational dof(const Strength& z, std::size_t n, unsigned q) {
  if (n < 2 || q == 0) throw std::invalid_argument("dof needs n >= 2 and q >= 1");
  return z.z1 / Rational(static_cast<long>((n - 1) * q));
}

Rational dof_closed_form(const Characters& c, const std::vector<unsigned>& gammas,
                         std::size_t n, std::size_t m) {
  Rational sum_gamma = 0;
  Rational sum_l = 0;
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    sum_gamma += gammas[l];
    sum_l += static_cast<long>(l * gammas[l]);
  }
  return Rational(static_cast<long>(m)) - sum_gamma -
         (Rational(c.beta[n - 2]) + sum_l) / Rational(static_cast<long>(c.q));
}

std::vector<std::optional<Rational>> free_function_counts(const std::vector<Rational>& a,
                                                          std::size_t n, unsigned q) {
  if (n < 2 || a.size() != n) throw std::invalid_argument("need n >= 2 characters");
  std::vector<std::optional<Rational>> f(n);
  if (n == 4 && q == 1) {
    f[0] = a[0] - a[1];
    f[1] = a[1] - a[2];
    f[2] = a[2] - a[3];
    f[3] = a[3];
    return f;
  }
  if (n == 4 && q == 2) {
    f[0] = a[0] - 2 * a[1] + a[2];
    f[1] = a[1] - 2 * a[2] + a[3];
    f[2] = a[2] - 2 * a[3];
    f[3] = a[3];
    return f;
  }
  f[n - 1] = a[n - 1];
  f[n - 2] = a[n - 2] - Rational(q) * a[n - 1];
  return f;
}

AnalysisReport build_report(const std::string& name, const Characters& c, std::size_t n,
                            std::size_t m, const std::vector<unsigned>& gammas) {
  AnalysisReport rep;
  rep.name = name;
  rep.n = n;
  rep.m = m;
  rep.q = c.q;
  rep.gammas = gammas;
  rep.beta = c.beta;
  rep.alpha = c.alpha;
  rep.hilbert = hilbert(c, n);
  rep.gauge = gauge_polynomial(gammas, n, c.q);
  rep.hilbert_bar = gauge_corrected_hilbert(rep.hilbert, rep.gauge);
  rep.alpha_bar = gauge_corrected_characters(rep.hilbert_bar, n);
  const Strength z = strength_coefficients(c, gammas, n);
  rep.z0 = z.z0;
  rep.z1 = z.z1;
  rep.dof = dof(z, n, c.q);
  rep.f = free_function_counts(rep.alpha_bar, n, c.q);
  rep.compatible = rep.z0 == 0;
  if (!rep.compatible) rep.warnings.push_back("not compatible: Z0 = " + to_string(rep.z0));
  if (!is_integer(rep.dof)) {
    rep.warnings.push_back("DOF = " + to_string(rep.dof) +
                           " is not an integer; integrality of the count is conjectural");
  }
  return rep;
}

namespace {

PatternFinding finding(std::string name, bool passed, std::string detail, bool required = true) {
  return {std::move(name), passed, required, std::move(detail)};
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return "(" + out + ")";
}

}  // namespace

std::vector<PatternFinding> patterns_check(const AnalysisReport& rep) {
  std::vector<PatternFinding> out;
  const std::size_t n = rep.n;
  const bool gauge = !rep.gammas.empty();
  const Rational top = gauge ? rep.alpha_bar[n - 1] : Rational(rep.alpha[n - 1]);
  out.push_back(finding("top_character_vanishes", top == 0,
                        std::string(gauge ? "alpha_bar" : "alpha") + "^(n) = " + to_string(top)));

  bool beta_up = true;
  bool alpha_down = true;
  for (std::size_t k = 1; k < n; ++k) {
    beta_up = beta_up && rep.beta[k - 1] <= rep.beta[k];
    alpha_down = alpha_down && rep.alpha[k - 1] >= rep.alpha[k];
  }
  out.push_back(finding("beta_nondecreasing", beta_up, "beta = " + join(rep.beta), false));
  out.push_back(finding("alpha_nonincreasing", alpha_down, "alpha = " + join(rep.alpha)));

  bool sums = true;
  for (std::size_t k = 1; k <= n; ++k) {
    sums = sums && rep.alpha[k - 1] + rep.beta[k - 1] ==
                       class_size(static_cast<unsigned>(k), static_cast<unsigned>(n), rep.q,
                                  static_cast<unsigned>(rep.m));
  }
  out.push_back(finding("class_sizes", sums, "alpha^(k) + beta^(k) = m C(n+q-k-1, n-k)"));

  Integer fact = 1;
  for (std::size_t i = 2; i + 2 <= n; ++i) fact *= static_cast<unsigned long>(i);
  const Rational from_hilbert = rep.hilbert_bar.coefficient(n - 2) * Rational(fact) / Rational(rep.q);
  out.push_back(finding("dof_from_hilbert", from_hilbert == rep.dof,
                        "h_bar_{n-2} (n-2)!/q = " + to_string(from_hilbert)));

  const Rational second = gauge ? rep.alpha_bar[n - 2] : Rational(rep.alpha[n - 2]);
  out.push_back(finding("q_dof", Rational(rep.q) * rep.dof == second,
                        "q DOF = " + to_string(Rational(rep.q) * rep.dof) + ", " +
                            (gauge ? "alpha_bar" : "alpha") + "^(n-1) = " + to_string(second)));

  const Rational diff = Rational(rep.beta[n - 1] - rep.beta[n - 2]);
  out.push_back(finding("dof_beta_difference", diff == rep.dof,
                        "beta^(n) - beta^(n-1) = " + to_string(diff), false));

  Integer weighted = 0;
  for (std::size_t l = 0; l < rep.gammas.size(); ++l) weighted += static_cast<unsigned long>(l * rep.gammas[l]);
  const Integer bound = Integer(static_cast<long>(rep.q) - 1) * rep.beta[n - 2];
  out.push_back(finding("gauge_order_bound", weighted <= bound,
                        "sum l gamma_l = " + to_string(weighted) + " <= " + to_string(bound), false));
  out.push_back(finding("dof_integral", is_integer(rep.dof), "DOF = " + to_string(rep.dof), false));
  return out;
}

namespace {

nlohmann::json strings(const std::vector<Integer>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json strings(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json poly_json(const Polynomial& p) { return strings(p.coefficients()); }

std::vector<Integer> integers(const nlohmann::json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) {
    const Rational v = parse_rational(x.get<std::string>());
    if (!is_integer(v)) throw std::invalid_argument("expected integer, got " + x.get<std::string>());
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<Rational> rationals(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& rep) {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& v : rep.f) f.push_back(v ? to_string(*v) : "n/a");
  nlohmann::json j = {{"name", rep.name},
                      {"n", rep.n},
                      {"m", rep.m},
                      {"q", rep.q},
                      {"r", rep.r},
                      {"s", rep.s},
                      {"gammas", rep.gammas},
                      {"beta", strings(rep.beta)},
                      {"alpha", strings(rep.alpha)},
                      {"H", poly_json(rep.hilbert)},
                      {"G", poly_json(rep.gauge)},
                      {"H_bar", poly_json(rep.hilbert_bar)},
                      {"alpha_bar", strings(rep.alpha_bar)},
                      {"Z0", to_string(rep.z0)},
                      {"Z1", to_string(rep.z1)},
                      {"dof", to_string(rep.dof)},
                      {"f", std::move(f)},
                      {"flags", {{"compatible", rep.compatible}, {"parameter_special", rep.parameter_special}}},
                      {"warnings", rep.warnings}};
  if (rep.oracle) {
    j["oracle"] = {{"max_r", rep.oracle->max_r},
                   {"parametric", strings(rep.oracle->parametric)},
                   {"matches_hilbert", rep.oracle->matches_hilbert},
                   {"solved_form", rep.oracle->solved_form}};
  }
  if (rep.trace) j["trace"] = *rep.trace;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport rep;
  rep.name = j.at("name").get<std::string>();
  rep.n = j.at("n").get<std::size_t>();
  rep.m = j.at("m").get<std::size_t>();
  rep.q = j.at("q").get<unsigned>();
  rep.r = j.at("r").get<unsigned>();
  rep.s = j.at("s").get<unsigned>();
  rep.gammas = j.at("gammas").get<std::vector<unsigned>>();
  rep.beta = integers(j.at("beta"));
  rep.alpha = integers(j.at("alpha"));
  rep.hilbert = Polynomial(rationals(j.at("H")));
  rep.gauge = Polynomial(rationals(j.at("G")));
  rep.hilbert_bar = Polynomial(rationals(j.at("H_bar")));
  rep.alpha_bar = rationals(j.at("alpha_bar"));
  rep.z0 = parse_rational(j.at("Z0").get<std::string>());
  rep.z1 = parse_rational(j.at("Z1").get<std::string>());
  rep.dof = parse_rational(j.at("dof").get<std::string>());
  for (const auto& v : j.at("f")) {
    const auto text = v.get<std::string>();
    rep.f.push_back(text == "n/a" ? std::nullopt : std::optional<Rational>(parse_rational(text)));
  }
  rep.compatible = j.at("flags").at("compatible").get<bool>();
  rep.parameter_special = j.at("flags").at("parameter_special").get<bool>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("oracle")) {
    const auto& o = j.at("oracle");
    rep.oracle = OracleSummary{o.at("max_r").get<unsigned>(), integers(o.at("parametric")),
                               o.at("matches_hilbert").get<bool>(), o.at("solved_form").get<bool>()};
  }
  if (j.contains("trace")) rep.trace = j.at("trace");
  return rep;
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream out;
  auto row = [&out](const std::string& label, const auto& values) {
    out << std::left << std::setw(14) << label;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i + 1 < values.size()) {
        out << std::setw(8) << values[i];
      } else {
        out << values[i];
      }
    }
    out << "\n";
  };
  auto line = [&out](const std::string& label, const std::string& value) {
    out << std::left << std::setw(14) << label << value << "\n";
  };
  line("system", rep.name);
  line("n, m, q", std::to_string(rep.n) + ", " + std::to_string(rep.m) + ", " + std::to_string(rep.q));
  line("r, s", std::to_string(rep.r) + ", " + std::to_string(rep.s));
  if (!rep.gammas.empty()) {
    std::string g;
    for (std::size_t l = 0; l < rep.gammas.size(); ++l) g += (l ? ", " : "") + std::to_string(rep.gammas[l]);
    line("gammas", "[" + g + "]");
  }
  std::vector<std::string> classes;
  std::vector<std::string> beta;
  std::vector<std::string> alpha;
  std::vector<std::string> alpha_bar;
  std::vector<std::string> f;
  for (std::size_t k = 0; k < rep.n; ++k) {
    classes.push_back(std::to_string(k + 1));
    beta.push_back(to_string(rep.beta[k]));
    alpha.push_back(to_string(rep.alpha[k]));
    alpha_bar.push_back(to_string(rep.alpha_bar[k]));
    f.push_back(rep.f[k] ? to_string(*rep.f[k]) : "n/a");
  }
  row("class k", classes);
  row("beta", beta);
  row("alpha", alpha);
  line("H(r)", rep.hilbert.to_string());
  if (!rep.gammas.empty()) {
    line("G(r)", rep.gauge.to_string());
    line("H_bar(r)", rep.hilbert_bar.to_string());
    row("alpha_bar", alpha_bar);
  }
  row("f", f);
  line("Z0, Z1", to_string(rep.z0) + ", " + to_string(rep.z1));
  line("DOF", to_string(rep.dof));
  line("compatible", rep.compatible ? "yes" : "no");
  if (rep.parameter_special) line("parameters", "special (ranks change at a second value)");
  if (rep.oracle) {
    std::string counts;
    for (std::size_t i = 0; i < rep.oracle->parametric.size(); ++i) {
      counts += (i ? " " : "") + to_string(rep.oracle->parametric[i]);
    }
    line("oracle", counts + (rep.oracle->matches_hilbert ? "  (matches H)" : "  (MISMATCH with H)"));
    line("solved form", rep.oracle->solved_form ? "ok" : "violated");
  }
  for (const auto& w : rep.warnings) line("warning", w);
  return out.str();
}

}  // namespace involute
