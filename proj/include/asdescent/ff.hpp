#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace asdescent {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// Element of a Field, stored as a flat index. Index 0 is zero, index 1 is one,
// and for an extension the index is sum coords_i * |base|^i, so embedding the
// base field is index preserving and "lies in the base field" is index < |base|.
// Elements keep a raw pointer to their field; the field must outlive them.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* f, uint32_t idx) : field_(f), idx_(idx) {}

  const Field& field() const;
  FieldPtr field_ptr() const;
  uint32_t index() const { return idx_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const { return idx_ == 0; }
  bool is_one() const { return idx_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inv() const;
  FieldElement pow(int64_t e) const;
  // x^(p^e), e >= 0, by repeated p-th powering (e is reduced mod the degree
  // over the prime field first, which leaves the value unchanged).
  FieldElement frobenius(int64_t e) const;

  // Position in the generator-power sequence; empty for zero.
  std::optional<int64_t> dlog() const;

  // Coefficient sequence over the base field (length = extension degree).
  std::vector<FieldElement> coords() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const Field* field_ = nullptr;
  uint32_t idx_ = 0;
};

// Immutable finite field F_{p^m}, either the prime field or an extension of a
// base Field by a monic irreducible modulus. Construction builds full
// exponent/log tables; total size is capped at 2^20 elements.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr int64_t kMaxSize = int64_t{1} << 20;
  static constexpr int64_t kMaxQuadraticBase = int64_t{1} << 10;

  int64_t characteristic() const { return p_; }
  int64_t size() const { return size_; }
  // Degree over the base field (1 for the prime field itself).
  int ext_degree() const { return m_; }
  int degree_over_prime() const { return total_degree_; }
  bool is_prime_field() const { return base_ == nullptr; }
  const Field* base() const { return base_.get(); }
  FieldPtr base_ptr() const { return base_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement generator() const { return {this, gen_}; }
  const std::string& generator_name() const { return gen_name_; }
  FieldElement element(uint32_t idx) const;
  // k * 1, i.e. the image of the integer k.
  FieldElement from_int(int64_t k) const;
  FieldElement from_coords(const std::vector<FieldElement>& coords) const;

  // Modulus coefficients c_0..c_m over the base field (monic).
  std::vector<FieldElement> modulus_coeffs() const;
  std::string modulus_string() const;

  // Structural equality: same characteristic, tower shape and moduli.
  bool same_as(const Field& o) const;

  // Index-level arithmetic. All inputs must be < size().
  uint32_t idx_add(uint32_t a, uint32_t b) const;
  uint32_t idx_neg(uint32_t a) const;
  uint32_t idx_sub(uint32_t a, uint32_t b) const { return idx_add(a, idx_neg(b)); }
  uint32_t idx_mul(uint32_t a, uint32_t b) const;
  uint32_t idx_inv(uint32_t a) const;
  uint32_t idx_pow(uint32_t a, int64_t e) const;
  int32_t idx_log(uint32_t a) const { return log_[a]; }  // -1 for zero

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  friend FieldPtr make_field(int64_t p, int m);
  friend FieldPtr make_field(int64_t p, int m, const std::vector<int64_t>& modulus);
  friend FieldPtr extend_quadratic(const FieldPtr& base);

  static FieldPtr make_prime(int64_t p, int64_t recorded_c0);
  static FieldPtr make_extension(FieldPtr base, std::vector<uint32_t> modulus,
                                 std::string gen_name);

  void build_tables();
  uint32_t mul_poly(uint32_t a, uint32_t b) const;  // used before tables exist
  uint32_t pow_poly(uint32_t a, int64_t e) const;

  FieldPtr base_;                  // null for the prime field
  int64_t p_ = 0;
  int m_ = 1;                      // degree over base
  int total_degree_ = 1;           // degree over the prime field
  int64_t size_ = 0;
  std::vector<uint32_t> modulus_;  // base indices c_0..c_m, monic
  std::vector<uint32_t> negred_;   // -c_0..-c_{m-1}, reduction of x^m
  std::string gen_name_ = "w";
  uint32_t gen_ = 1;
  bool tables_ready_ = false;
  std::vector<int32_t> log_;       // log_[0] = -1
  std::vector<uint32_t> exp_;      // size()-1 entries
};

// F_{p^m} over F_p with the default modulus for (p, m): the six pinned moduli
// for (2,2..5), (3,2), (3,3), otherwise the least monic irreducible by
// most-significant-first coefficient order. m = 1 yields the prime field.
FieldPtr make_field(int64_t p, int m);
// Same with an explicit modulus, coefficients c_0..c_m as integers mod p.
FieldPtr make_field(int64_t p, int m, const std::vector<int64_t>& modulus);

// Quadratic tower F_{q^2} over F_q. The modulus is the first irreducible
// T^2 + c1*T + c0 with (c1, c0) scanned in generator-power order
// (0, 1, g, g^2, ...), c1 major. Base must have at most 2^10 elements.
FieldPtr extend_quadratic(const FieldPtr& base);

// Image of x in a field whose base chain contains x's field.
FieldElement embed(const FieldElement& x, const FieldPtr& into);
bool lies_in_base(const FieldElement& x);
// Reinterpret an element with index < |base| as a base field element.
FieldElement project_to_base(const FieldElement& x);

// (trace, norm) for the quadratic tower: x + x^q and x * x^q, both landing in
// the target field. target must be the base of x's field.
std::pair<FieldElement, FieldElement> trace_norm(const FieldElement& x,
                                                 const Field& target);

// "0", "1", "w" or "w^k" in the field's own generator symbol.
std::string to_power_string(const FieldElement& x);
// "c0 + c1*w + ..." over the base field, zero terms skipped.
std::string to_coord_string(const FieldElement& x);
// {"log": k} for nonzero, {"log": null, "coords": [...]} for zero.
nlohmann::ordered_json element_json(const FieldElement& x);

}  // namespace asdescent
