#pragma once

#include <memory>
#include <string>
#include <vector>

namespace agcodes {

class Element;

/// Arithmetic in GF(p^k), p^k <= 2^16, with elements stored in the
/// polynomial basis over GF(p).
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k over GF(p), coefficients compared from the constant term
/// upward, so Field::make(p, k) denotes the same field in every run.
///
/// Elements are addressed by their index in enumeration order: the element
/// with coefficient vector (c0, c1, ..., c_{k-1}) has index sum_j c_j p^j.
/// Index 0 is the additive identity and index 1 the multiplicative identity.
/// Index-level operations are backed by log/antilog tables; the slower
/// *_nolut variants reduce polynomials directly and the two paths agree bit
/// for bit.
class Field {
 public:
  static Field make(int p, int k);

  int characteristic() const;
  int degree() const;
  int order() const;
  /// Modulus coefficients, constant term first, length degree()+1, monic.
  const std::vector<int>& modulus() const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;

  int mul_nolut(int a, int b) const;
  int inv_nolut(int a) const;
  int pow_nolut(int a, long long e) const;

  Element from_index(int index) const;
  Element from_coeffs(const std::vector<int>& coeffs) const;
  Element zero() const;
  Element one() const;
  std::vector<Element> enumerate() const;

  std::vector<int> coeffs_of(int index) const;
  int index_of_coeffs(const std::vector<int>& coeffs) const;

  /// Least index that generates the multiplicative group.
  int smallest_generator() const;
  /// Least index whose multiplicative order is exactly `ord`; throws if
  /// `ord` does not divide order()-1.
  int element_of_mult_order(int ord) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }
  std::string to_string() const;  // "GF(49)"

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class Element;
};

/// A field element as a coefficient vector tied to its Field. Mixing
/// elements of distinct fields throws std::invalid_argument.
class Element {
 public:
  Element(Field field, std::vector<int> coeffs);

  const Field& field() const { return field_; }
  const std::vector<int>& coeffs() const { return coeffs_; }
  int index() const;
  bool is_zero() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;
  Element operator/(const Element& rhs) const;
  Element inverse() const;
  Element pow(long long e) const;

  bool operator==(const Element& rhs) const;
  bool operator!=(const Element& rhs) const { return !(*this == rhs); }
  std::string to_string() const;

 private:
  void require_same_field(const Element& rhs) const;
  Field field_;
  std::vector<int> coeffs_;
};

}  // namespace agcodes
