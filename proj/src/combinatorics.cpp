#include "involute/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace involute {

MultiIndex::MultiIndex(std::size_t dimensions) {
  if (dimensions > kMaxDimensions) {
    throw std::invalid_argument("at most " + std::to_string(kMaxDimensions) +
                                " dimensions are supported");
  }
  size_ = static_cast<std::uint8_t>(dimensions);
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> entries)
    : MultiIndex(std::span<const unsigned>(entries.begin(), entries.size())) {}

MultiIndex::MultiIndex(std::span<const unsigned> entries) : MultiIndex(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

void MultiIndex::set(std::size_t i, unsigned value) {
  if (i >= size_) throw std::out_of_range("multi-index position out of range");
  if (value > 0xFFFFu) throw std::overflow_error("derivative count too large");
  entries_[i] = static_cast<std::uint16_t>(value);
}

unsigned MultiIndex::length() const {
  unsigned total = 0;
  for (std::size_t i = 0; i < size_; ++i) total += entries_[i];
  return total;
}

std::size_t MultiIndex::class_of() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (entries_[i] != 0) return i + 1;
  }
  throw std::domain_error("class undefined for the zero multi-index");
}

MultiIndex MultiIndex::incremented(std::size_t mu) const {
  MultiIndex result = *this;
  result.set(mu, entries_[mu] + 1u);
  return result;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("multi-index dimensions differ");
  MultiIndex result(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) result.set(i, a[i] + b[i]);
  return result;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("multi-index dimensions differ");
  MultiIndex result(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a[i] < b[i]) throw std::domain_error("multi-index difference is negative");
    result.set(i, a[i] - b[i]);
  }
  return result;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (auto c = a.entries_[i] <=> b.entries_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<unsigned> MultiIndex::to_vector() const {
  return std::vector<unsigned>(entries_.begin(), entries_.begin() + size_);
}

std::string MultiIndex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + "]";
}

bool solved_form_less(const MultiIndex& a, const MultiIndex& b) {
  const unsigned la = a.length();
  const unsigned lb = b.length();
  if (la != lb) return la > lb;
  if (la == 0) return false;
  const std::size_t ca = a.class_of();
  const std::size_t cb = b.class_of();
  if (ca != cb) return ca > cb;
  for (std::size_t i = a.dimensions(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void enumerate(std::size_t position, unsigned remaining, MultiIndex& current,
               std::vector<MultiIndex>& out) {
  if (position + 1 == current.dimensions()) {
    current.set(position, remaining);
    out.push_back(current);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    current.set(position, v);
    enumerate(position + 1, remaining - v, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_length(std::size_t dimensions, unsigned length) {
  if (dimensions == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<MultiIndex> out;
  MultiIndex current(dimensions);
  enumerate(0, length, current, out);
  std::sort(out.begin(), out.end(), solved_form_less);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer fiber_dim(unsigned n, unsigned q, unsigned m) { return m * binomial(n + q, q); }

Integer order_count(unsigned n, unsigned q, unsigned m) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  return m * binomial(n - 1 + q, n - 1);
}

Integer class_size(unsigned k, unsigned n, unsigned q, unsigned m) {
  if (k < 1 || k > n) throw std::out_of_range("class must lie in 1..n");
  if (q == 0) return 0;
  return m * binomial(n + q - k - 1, n - k);
}

Integer elementary_symmetric(std::span<const Integer> values, unsigned k) {
  std::vector<Integer> e(k + 1, 0);
  e[0] = 1;
  for (const Integer& x : values) {
    for (unsigned j = k; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[k];
}

Integer modified_stirling(long N, long k, const Integer& X) {
  if (N < 0) throw std::invalid_argument("variable count must be non-negative");
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (k > N) throw std::domain_error("degree exceeds variable count");
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(N));
  for (long i = 1; i <= N; ++i) values.emplace_back(X + i);
  return elementary_symmetric(values, static_cast<unsigned>(k));
}

}  // namespace involute
