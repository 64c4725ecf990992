#include "involute/corpus.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace involute {

namespace {

struct Source {
  std::string_view name;
  std::string_view text;
};

// Generated at configure time from corpus/*.pde.
constexpr Source kSources[] = {
#include "corpus_sources.inc"
};

std::string_view source_of(std::string_view name) {
  for (const auto& s : kSources) {
    if (s.name == name) return s.text;
  }
  throw std::logic_error("corpus source missing: " + std::string(name));
}

std::vector<Rational> rationals(std::string_view csv) {
  std::vector<Rational> out;
  std::stringstream in{std::string(csv)};
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::vector<Integer> integers(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

struct Row {
  const char* name;
  unsigned r;
  unsigned s;
  std::initializer_list<long> beta;
  std::initializer_list<long> alpha;
  const char* hilbert;
  const char* hilbert_bar;  // "" when no gauge symmetry
  const char* alpha_bar;
  const char* dof;
  bool massive;
};

std::vector<CorpusEntry> build() {
  const Row rows[] = {
      {"wave", 0, 0, {0, 0, 0, 1}, {4, 3, 2, 0}, "9,6,1", "", "", "1", false},
      {"maxwell", 0, 0, {0, 0, 1, 3}, {16, 12, 7, 1}, "36,73/3,9/2,1/6", "16,12,2", "6,6,4,0", "2", false},
      {"proca", 0, 2, {1, 1, 2, 4}, {15, 11, 6, 0}, "32,20,3", "", "", "3", true},
      {"proca_stueckelberg", 0, 0, {0, 0, 1, 4}, {20, 15, 9, 1}, "45,91/3,11/2,1/6", "25,18,3", "10,9,6,0", "3", false},
      {"gr_normal", 0, 0, {0, 0, 4, 6}, {40, 30, 16, 4}, "90,184/3,12,2/3", "10,12,2", "0,6,4,0", "2", false},
      {"cgr", 0, 0, {0, 0, 4, 6}, {40, 30, 16, 4}, "90,184/3,12,2/3", "10,12,2", "0,6,4,0", "2", false},
      {"fp_massless", 0, 0, {0, 0, 4, 6}, {40, 30, 16, 4}, "90,184/3,12,2/3", "10,12,2", "0,6,4,0", "2", false},
      {"fp_detuned", 0, 0, {0, 0, 0, 10}, {40, 30, 20, 0}, "90,60,10", "", "", "10", false},
      {"fp_massive", 0, 4, {8, 7, 10, 10}, {32, 23, 10, 0}, "65,38,5", "", "", "5", true},
      {"fp_massive_detuned", 0, 2, {4, 4, 8, 10}, {36, 26, 12, 0}, "74,44,6", "", "", "6", true},
      {"fp_stueckelberg", 0, 0, {0, 0, 5, 10}, {60, 45, 25, 5}, "135,275/3,35/2,5/6", "35,30,5", "10,15,10,0", "5", false},
      {"2form", 0, 0, {0, 1, 2, 3}, {24, 17, 10, 3}, "54,75/2,8,1/2", "4,5,1", "0,2,2,0", "1", false},
      {"2form_massive", 0, 2, {4, 5, 6, 6}, {20, 13, 6, 0}, "39,22,3", "", "", "3", true},
      {"2form_stueckelberg", 0, 0, {0, 1, 3, 6}, {40, 29, 17, 4}, "90,371/6,25/2,2/3", "20,17,3", "6,8,6,0", "3", false},
  };
  std::vector<CorpusEntry> out;
  for (const Row& row : rows) {
    CorpusEntry e;
    e.name = row.name;
    e.source = source_of(row.name);
    e.massive = row.massive;
    e.expected.r = row.r;
    e.expected.s = row.s;
    e.expected.beta = integers(row.beta);
    e.expected.alpha = integers(row.alpha);
    e.expected.hilbert = Polynomial(rationals(row.hilbert));
    if (*row.hilbert_bar) {
      e.expected.hilbert_bar = Polynomial(rationals(row.hilbert_bar));
      e.expected.alpha_bar = rationals(row.alpha_bar);
    }
    e.expected.dof = parse_rational(row.dof);
    out.push_back(std::move(e));
  }
  return out;
}

template <class T>
std::string show(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return "(" + out + ")";
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no corpus entry named '" + std::string(name) + "'");
}

std::vector<std::string> compare(const AnalysisReport& rep, const ExpectedValues& exp) {
  std::vector<std::string> diffs;
  auto check = [&diffs](const std::string& field, const std::string& want, const std::string& got) {
    if (want != got) diffs.push_back(field + ": expected " + want + ", got " + got);
  };
  check("r", std::to_string(exp.r), std::to_string(rep.r));
  check("s", std::to_string(exp.s), std::to_string(rep.s));
  check("beta", show(exp.beta), show(rep.beta));
  check("alpha", show(exp.alpha), show(rep.alpha));
  check("H", exp.hilbert.to_string(), rep.hilbert.to_string());
  if (exp.hilbert_bar) check("H_bar", exp.hilbert_bar->to_string(), rep.hilbert_bar.to_string());
  if (exp.alpha_bar) check("alpha_bar", show(*exp.alpha_bar), show(rep.alpha_bar));
  check("DOF", to_string(exp.dof), to_string(rep.dof));
  return diffs;
}

}  // namespace involute
