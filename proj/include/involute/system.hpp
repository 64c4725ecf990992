#ifndef INVOLUTE_SYSTEM_HPP
#define INVOLUTE_SYSTEM_HPP

#include "involute/combinatorics.hpp"
#include "involute/linalg.hpp"
#include "involute/rational.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace involute {

/// p^A_m: derivative `index` of field component `field` (0-based).
struct JetCoordinate {
  std::size_t field = 0;
  MultiIndex index;

  unsigned order() const { return index.length(); }

  friend bool operator==(const JetCoordinate&, const JetCoordinate&) = default;
  friend auto operator<=>(const JetCoordinate&, const JetCoordinate&) = default;
};

/// Column order: derivative order descending, class descending,
/// reverse-lexicographic multi-index, field ascending.
bool canonical_less(const JetCoordinate& a, const JetCoordinate& b);

struct CanonicalLess {
  bool operator()(const JetCoordinate& a, const JetCoordinate& b) const {
    return canonical_less(a, b);
  }
};

/// All jet coordinates of exactly the given order, canonically sorted.
std::vector<JetCoordinate> jet_coordinates_of_order(std::size_t n, std::size_t m, unsigned order);

/// All jet coordinates of order <= max_order, canonically sorted.
std::vector<JetCoordinate> jet_coordinates(std::size_t n, std::size_t m, unsigned max_order);

/// Column numbering for the jet coordinates of order <= max_order.
class JetIndex {
 public:
  JetIndex(std::size_t n, std::size_t m, unsigned max_order);

  std::size_t size() const { return coords_.size(); }
  const std::vector<JetCoordinate>& coordinates() const { return coords_; }
  const JetCoordinate& operator[](std::size_t column) const { return coords_[column]; }
  /// Throws std::out_of_range for coordinates outside the index.
  std::size_t column(const JetCoordinate& c) const;

 private:
  std::vector<JetCoordinate> coords_;
  std::map<JetCoordinate, std::size_t> lookup_;
};

/// Homogeneous linear equation; terms are kept in canonical order and never
/// carry zero coefficients.
class LinearEquation {
 public:
  using Terms = std::map<JetCoordinate, Rational, CanonicalLess>;

  LinearEquation() = default;
  explicit LinearEquation(Terms terms);

  /// Adds c to the coefficient of the coordinate, dropping it if it cancels.
  void add(const JetCoordinate& coord, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Highest derivative order among the terms; 0 for an empty equation.
  unsigned order() const;

  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

 private:
  Terms terms_;
};

std::string to_string(const JetCoordinate& c, const std::vector<std::string>& field_names,
                      const std::vector<std::string>& coordinate_names);

class PDESystem {
 public:
  /// Validates all invariants and throws std::invalid_argument on a
  /// violation. `order` defaults to the highest equation order; an explicit
  /// order may exceed it (projected systems keep their ambient order).
  PDESystem(std::string name, std::vector<std::string> coordinates,
            std::vector<std::string> fields, std::vector<LinearEquation> equations,
            std::vector<unsigned> gammas = {}, std::optional<unsigned> order = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t n() const { return coordinates_.size(); }
  std::size_t m() const { return fields_.size(); }
  unsigned q() const { return order_; }
  const std::vector<std::string>& coordinates() const { return coordinates_; }
  const std::vector<std::string>& fields() const { return fields_; }
  const std::vector<LinearEquation>& equations() const { return equations_; }
  const std::vector<unsigned>& gammas() const { return gammas_; }

  /// Highest order actually present among the equations.
  unsigned equation_order() const;

  /// Same metadata, different equations and order.
  PDESystem with_equations(std::vector<LinearEquation> equations, unsigned order) const;

  friend bool operator==(const PDESystem&, const PDESystem&) = default;

 private:
  std::string name_;
  std::vector<std::string> coordinates_;
  std::vector<std::string> fields_;
  std::vector<LinearEquation> equations_;
  std::vector<unsigned> gammas_;
  unsigned order_ = 0;
};

SparseRow sparse_row(const LinearEquation& eq, const JetIndex& index);

/// One row per equation, one labeled column per jet coordinate of order
/// <= max_order, canonical column order.
RationalMatrix coefficient_matrix(const PDESystem& s, unsigned max_order);

/// Rank of the coefficient matrix at the system order.
std::size_t independent_equation_count(const PDESystem& s);

/// fiber_dim(n, q, m) - independent_equation_count(s).
Integer dim_R(const PDESystem& s);

nlohmann::json to_json(const PDESystem& s);
PDESystem system_from_json(const nlohmann::json& j);

}  // namespace involute

#endif  // INVOLUTE_SYSTEM_HPP
