#include "involute/system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace involute {

bool canonical_less(const JetCoordinate& a, const JetCoordinate& b) {
  if (solved_form_less(a.index, b.index)) return true;
  if (solved_form_less(b.index, a.index)) return false;
  return a.field < b.field;
}

std::vector<JetCoordinate> jet_coordinates_of_order(std::size_t n, std::size_t m, unsigned order) {
  std::vector<JetCoordinate> out;
  for (const MultiIndex& idx : multi_indices_of_length(n, order)) {
    for (std::size_t a = 0; a < m; ++a) out.push_back({a, idx});
  }
  return out;
}

std::vector<JetCoordinate> jet_coordinates(std::size_t n, std::size_t m, unsigned max_order) {
  std::vector<JetCoordinate> out;
  for (unsigned k = max_order + 1; k-- > 0;) {
    auto block = jet_coordinates_of_order(n, m, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

JetIndex::JetIndex(std::size_t n, std::size_t m, unsigned max_order)
    : coords_(jet_coordinates(n, m, max_order)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) lookup_.emplace(coords_[i], i);
}

std::size_t JetIndex::column(const JetCoordinate& c) const {
  auto it = lookup_.find(c);
  if (it == lookup_.end()) throw std::out_of_range("jet coordinate outside index");
  return it->second;
}

LinearEquation::LinearEquation(Terms terms) {
  for (auto& [coord, c] : terms) {
    if (c != 0) terms_.emplace(coord, c);
  }
}

void LinearEquation::add(const JetCoordinate& coord, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(coord, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

unsigned LinearEquation::order() const {
  // The first term has the highest order.
  return terms_.empty() ? 0 : terms_.begin()->first.order();
}

std::string to_string(const JetCoordinate& c, const std::vector<std::string>& field_names,
                      const std::vector<std::string>& coordinate_names) {
  std::string out;
  if (c.order() > 0) {
    out = "d(";
    bool first = true;
    for (std::size_t mu = 0; mu < c.index.dimensions(); ++mu) {
      for (unsigned k = 0; k < c.index[mu]; ++k) {
        if (!first) out += ",";
        out += coordinate_names.at(mu);
        first = false;
      }
    }
    out += ")";
  }
  return out + field_names.at(c.field);
}

PDESystem::PDESystem(std::string name, std::vector<std::string> coordinates,
                     std::vector<std::string> fields, std::vector<LinearEquation> equations,
                     std::vector<unsigned> gammas, std::optional<unsigned> order)
    : name_(std::move(name)),
      coordinates_(std::move(coordinates)),
      fields_(std::move(fields)),
      equations_(std::move(equations)),
      gammas_(std::move(gammas)) {
  if (coordinates_.empty()) throw std::invalid_argument("system needs at least one coordinate");
  if (coordinates_.size() > kMaxDimensions) throw std::invalid_argument("too many coordinates");
  if (fields_.empty()) throw std::invalid_argument("system needs at least one field");
  if (equations_.empty()) throw std::invalid_argument("system has no equations");
  std::set<std::string> names(coordinates_.begin(), coordinates_.end());
  if (names.size() != coordinates_.size()) throw std::invalid_argument("duplicate coordinate name");
  std::set<std::string> field_names(fields_.begin(), fields_.end());
  if (field_names.size() != fields_.size()) throw std::invalid_argument("duplicate field name");
  for (const auto& eq : equations_) {
    if (eq.empty()) throw std::invalid_argument("equation without terms");
    for (const auto& [coord, c] : eq.terms()) {
      if (coord.field >= fields_.size()) throw std::invalid_argument("field index out of range");
      if (coord.index.dimensions() != coordinates_.size()) {
        throw std::invalid_argument("multi-index dimension does not match coordinates");
      }
    }
  }
  if (!gammas_.empty() && gammas_.back() == 0) {
    throw std::invalid_argument("last gamma entry must be positive");
  }
  const unsigned natural = equation_order();
  order_ = order.value_or(natural);
  if (order_ < natural) throw std::invalid_argument("declared order below equation order");
}

unsigned PDESystem::equation_order() const {
  unsigned q = 0;
  for (const auto& eq : equations_) q = std::max(q, eq.order());
  return q;
}

PDESystem PDESystem::with_equations(std::vector<LinearEquation> equations, unsigned order) const {
  return PDESystem(name_, coordinates_, fields_, std::move(equations), gammas_, order);
}

SparseRow sparse_row(const LinearEquation& eq, const JetIndex& index) {
  SparseRow row;
  row.reserve(eq.terms().size());
  for (const auto& [coord, c] : eq.terms()) row.emplace_back(index.column(coord), c);
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

RationalMatrix coefficient_matrix(const PDESystem& s, unsigned max_order) {
  if (max_order < s.q()) throw std::invalid_argument("max_order below system order");
  JetIndex index(s.n(), s.m(), max_order);
  RationalMatrix out(s.equations().size(), index.size());
  for (std::size_t i = 0; i < s.equations().size(); ++i) {
    for (const auto& [coord, c] : s.equations()[i].terms()) out(i, index.column(coord)) = c;
  }
  std::vector<std::string> labels;
  labels.reserve(index.size());
  for (const auto& coord : index.coordinates()) {
    labels.push_back(to_string(coord, s.fields(), s.coordinates()));
  }
  out.set_column_labels(std::move(labels));
  return out;
}

std::size_t independent_equation_count(const PDESystem& s) {
  JetIndex index(s.n(), s.m(), s.q());
  EchelonBasis basis;
  for (const auto& eq : s.equations()) basis.insert(sparse_row(eq, index));
  return basis.rank();
}

Integer dim_R(const PDESystem& s) {
  return fiber_dim(static_cast<unsigned>(s.n()), s.q(), static_cast<unsigned>(s.m())) -
         static_cast<unsigned long>(independent_equation_count(s));
}

nlohmann::json to_json(const PDESystem& s) {
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& eq : s.equations()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [coord, c] : eq.terms()) {
      terms.push_back({{"field", s.fields()[coord.field]},
                       {"index", coord.index.to_vector()},
                       {"coef", to_string(c)}});
    }
    eqs.push_back(std::move(terms));
  }
  return {{"name", s.name()},     {"coordinates", s.coordinates()}, {"fields", s.fields()},
          {"order", s.q()},       {"gammas", s.gammas()},           {"equations", std::move(eqs)}};
}

PDESystem system_from_json(const nlohmann::json& j) {
  auto coordinates = j.at("coordinates").get<std::vector<std::string>>();
  auto fields = j.at("fields").get<std::vector<std::string>>();
  std::vector<LinearEquation> equations;
  for (const auto& terms : j.at("equations")) {
    LinearEquation eq;
    for (const auto& t : terms) {
      const auto name = t.at("field").get<std::string>();
      auto it = std::find(fields.begin(), fields.end(), name);
      if (it == fields.end()) throw std::invalid_argument("unknown field '" + name + "'");
      const auto idx = t.at("index").get<std::vector<unsigned>>();
      if (idx.size() != coordinates.size()) {
        throw std::invalid_argument("multi-index dimension does not match coordinates");
      }
      eq.add({static_cast<std::size_t>(it - fields.begin()), MultiIndex(std::span<const unsigned>(idx))},
             parse_rational(t.at("coef").get<std::string>()));
    }
    equations.push_back(std::move(eq));
  }
  return PDESystem(j.at("name").get<std::string>(), std::move(coordinates), std::move(fields),
                   std::move(equations), j.value("gammas", std::vector<unsigned>{}),
                   j.at("order").get<unsigned>());
}

}  // namespace involute
