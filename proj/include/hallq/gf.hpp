#pragma once

// Exact arithmetic in one ambient finite field F_{q^N}, q = p^e, together with
// its subfields F_{q^d} (d | N) and the q-power Frobenius.
//
// Elements are dense indices: the element with coefficient sequence
// (c_0, ..., c_{D-1}) over F_p (residue sum c_j t^j modulo the defining
// polynomial, D = eN) has index sum c_j p^j. Index order is the element order
// used for every deterministic enumeration in the library.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace hallq::gf {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultMaxElements = std::size_t{1} << 16;

class Field {
 public:
  // Throws Error{NonPrime, FieldTooLarge, NoIrreducibleFound}.
  static std::shared_ptr<const Field> make(int p, int e, int N,
                                           std::size_t max_elements = kDefaultMaxElements);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int N() const noexcept { return N_; }
  int degree() const noexcept { return e_ * N_; }
  std::int64_t q() const noexcept { return q_; }
  std::size_t size() const noexcept { return size_; }

  // Monic defining polynomial over F_p, lowest coefficient first (length D+1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }
  Elem from_int(std::int64_t n) const;  // image of n in the prime field

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const int> c) const;

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
  }
  Elem inv(Elem a) const;  // Error{DivisionByZero}
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;

  // a^{q^k}; k is reduced modulo N.
  Elem frobenius(Elem a, int k = 1) const noexcept {
    int r = ((k % N_) + N_) % N_;
    return r == 0 ? a : frob_[static_cast<std::size_t>(r)][a];
  }

  // Elements fixed by Frob^d in element order; d must divide N.
  const std::vector<Elem>& subfield(int d) const;
  bool in_subfield(Elem a, int d) const { return subfield_index(d, a) >= 0; }
  // Position of a inside subfield(d), or -1.
  std::int32_t subfield_index(int d, Elem a) const;
  // Smallest (in element order) generator of the cyclic group F_{q^d}^*.
  Elem generator(int d) const;
  // Greedy F_p-basis of F_{q^d}, scanning elements in order.
  const std::vector<Elem>& prime_basis(int d) const;

  // Multiplicative order of a != 0.
  std::uint64_t order(Elem a) const;

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b) const noexcept;

  struct Subfield {
    std::vector<Elem> elements;
    std::vector<std::int32_t> index;  // size(): position or -1
    Elem generator = 0;
    std::vector<Elem> basis;
  };
  const Subfield& sub(int d) const;

  int p_ = 0, e_ = 0, N_ = 0;
  std::int64_t q_ = 0;
  std::size_t size_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;           // length 2(size-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;  // only for small odd characteristic
  std::vector<std::vector<Elem>> frob_;
  std::map<int, Subfield> subfields_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::int64_t n);

// Polynomial helpers over F_p (coefficients lowest degree first). Exposed for
// tests and for the irreducibility search.
namespace poly {
std::vector<int> mod(std::vector<int> a, const std::vector<int>& m, int p);
bool is_irreducible(const std::vector<int>& f, int p);
// Lexicographically smallest monic irreducible of the given degree.
std::vector<int> smallest_irreducible(int degree, int p);
}  // namespace poly

}  // namespace hallq::gf
