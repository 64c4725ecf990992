#ifndef INVOLUTE_COMBINATORICS_HPP
#define INVOLUTE_COMBINATORICS_HPP

#include "involute/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace involute {

inline constexpr std::size_t kMaxDimensions = 16;

/// Derivative counts [m_1, ..., m_n] over the n base coordinates.
///
/// Positions are 0-based in code; the class of a multi-index is reported
/// 1-based (class k means m_1 = ... = m_{k-1} = 0 and m_k > 0), since the
/// class numbers label characters beta^(k) directly.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimensions);
  MultiIndex(std::initializer_list<unsigned> entries);
  explicit MultiIndex(std::span<const unsigned> entries);

  std::size_t dimensions() const { return size_; }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, unsigned value);

  /// |m| = m_1 + ... + m_n.
  unsigned length() const;

  /// Position (1-based) of the first non-zero entry. Throws
  /// std::domain_error for the zero multi-index.
  std::size_t class_of() const;

  /// m + 1_mu, with mu a 0-based coordinate position.
  MultiIndex incremented(std::size_t mu) const;

  /// Component-wise sum. Dimensions must agree.
  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// Component-wise difference; throws std::domain_error when any entry
  /// would become negative.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
  /// Plain lexicographic order for use in containers; see solved_form_less
  /// for the column order used by the symbol.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

  std::vector<unsigned> to_vector() const;
  std::string to_string() const;

 private:
  std::array<std::uint16_t, kMaxDimensions> entries_{};
  std::uint8_t size_ = 0;
};

inline unsigned length(const MultiIndex& m) { return m.length(); }
inline std::size_t class_of(const MultiIndex& m) { return m.class_of(); }

/// Column order used throughout: derivative order descending, then class
/// descending, then reverse-lexicographic (m_n, m_{n-1}, ... compared from
/// the last position, larger first). Zero multi-indices sort last.
bool solved_form_less(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of the given dimension and length, in solved-form order.
std::vector<MultiIndex> multi_indices_of_length(std::size_t dimensions, unsigned length);

Integer binomial(unsigned long n, unsigned long k);

/// Number of jet coordinates of order <= q: m * C(n+q, q).
Integer fiber_dim(unsigned n, unsigned q, unsigned m);

/// Number of jet coordinates of order exactly q: m * C(n-1+q, n-1).
Integer order_count(unsigned n, unsigned q, unsigned m);

/// Number of order-q jet coordinates of class k (1 <= k <= n):
/// m * C(n+q-k-1, n-k). For q = 0 there are no classes and the result is 0.
Integer class_size(unsigned k, unsigned n, unsigned q, unsigned m);

/// Elementary symmetric polynomial of degree k in the given values.
Integer elementary_symmetric(std::span<const Integer> values, unsigned k);

/// s^(N)_k(X): 0 for k < 0, 1 for k = 0, and the elementary symmetric
/// polynomial of degree k in (X+1, ..., X+N) for 0 < k <= N. Throws
/// std::domain_error("degree exceeds variable count") for k > N.
Integer modified_stirling(long N, long k, const Integer& X);

}  // namespace involute

#endif  // INVOLUTE_COMBINATORICS_HPP
