#include "asdescent/ff.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace asdescent {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Default moduli, coefficients c_0..c_m.
const std::vector<int64_t>* pinned_modulus(int64_t p, int m) {
  static const std::array<std::pair<std::pair<int64_t, int>, std::vector<int64_t>>, 6> table{{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
  }};
  for (const auto& [key, coeffs] : table)
    if (key.first == p && key.second == m) return &coeffs;
  return nullptr;
}

// Remainder of dense polynomial division over `f`, coefficients as indices.
// Divisor support is iterated via its nonzero entries.
bool divides_exactly(const Field& f, std::vector<uint32_t> num,
                     const std::vector<uint32_t>& den) {
  int dd = static_cast<int>(den.size()) - 1;
  uint32_t lead_inv = f.idx_inv(den[dd]);
  for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
    if (num[k] == 0) continue;
    uint32_t factor = f.idx_mul(num[k], lead_inv);
    for (int j = 0; j <= dd; ++j) {
      if (den[j] == 0) continue;
      num[k - dd + j] = f.idx_sub(num[k - dd + j], f.idx_mul(factor, den[j]));
    }
  }
  for (int j = 0; j < dd; ++j)
    if (num[j] != 0) return false;
  return true;
}

// Exhaustive factor search: no monic divisor of degree 1..m/2 over the base.
bool is_irreducible(const Field& base, const std::vector<uint32_t>& modulus) {
  int m = static_cast<int>(modulus.size()) - 1;
  int64_t bs = base.size();
  for (int d = 1; 2 * d <= m; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= bs;
    for (int64_t v = 0; v < count; ++v) {
      std::vector<uint32_t> cand(d + 1);
      int64_t t = v;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<uint32_t>(t % bs);
        t /= bs;
      }
      cand[d] = 1;
      if (divides_exactly(base, modulus, cand)) return false;
    }
  }
  return true;
}

}  // namespace

const Field& FieldElement::field() const {
  if (!field_) throw std::logic_error("use of default-constructed field element");
  return *field_;
}

FieldPtr FieldElement::field_ptr() const { return field().shared_from_this(); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const Field& f = field();
  if (!f.same_as(o.field())) throw std::invalid_argument("field mismatch");
  return {&f, f.idx_add(idx_, o.idx_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const Field& f = field();
  if (!f.same_as(o.field())) throw std::invalid_argument("field mismatch");
  return {&f, f.idx_sub(idx_, o.idx_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const Field& f = field();
  if (!f.same_as(o.field())) throw std::invalid_argument("field mismatch");
  return {&f, f.idx_mul(idx_, o.idx_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const Field& f = field();
  if (!f.same_as(o.field())) throw std::invalid_argument("field mismatch");
  if (o.idx_ == 0) throw std::domain_error("division by zero");
  return {&f, f.idx_mul(idx_, f.idx_inv(o.idx_))};
}

FieldElement FieldElement::operator-() const {
  const Field& f = field();
  return {&f, f.idx_neg(idx_)};
}

FieldElement FieldElement::inv() const {
  const Field& f = field();
  if (idx_ == 0) throw std::domain_error("inverse of zero");
  return {&f, f.idx_inv(idx_)};
}

FieldElement FieldElement::pow(int64_t e) const {
  const Field& f = field();
  return {&f, f.idx_pow(idx_, e)};
}

FieldElement FieldElement::frobenius(int64_t e) const {
  const Field& f = field();
  if (e < 0) throw std::invalid_argument("negative frobenius power");
  e %= f.degree_over_prime();
  uint32_t x = idx_;
  for (int64_t k = 0; k < e; ++k) x = f.idx_pow(x, f.characteristic());
  return {&f, x};
}

std::optional<int64_t> FieldElement::dlog() const {
  int32_t l = field().idx_log(idx_);
  if (l < 0) return std::nullopt;
  return l;
}

std::vector<FieldElement> FieldElement::coords() const {
  const Field& f = field();
  if (f.is_prime_field()) return {*this};
  const Field* b = f.base();
  auto bs = static_cast<uint32_t>(b->size());
  std::vector<FieldElement> out;
  out.reserve(f.ext_degree());
  uint32_t rest = idx_;
  for (int i = 0; i < f.ext_degree(); ++i) {
    out.emplace_back(b, rest % bs);
    rest /= bs;
  }
  return out;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (field_ == nullptr || o.field_ == nullptr) return field_ == o.field_ && idx_ == o.idx_;
  return idx_ == o.idx_ && field_->same_as(*o.field_);
}

FieldElement Field::element(uint32_t idx) const {
  if (idx >= size_) throw std::invalid_argument("element index out of range");
  return {this, idx};
}

FieldElement Field::from_int(int64_t k) const {
  int64_t r = k % p_;
  if (r < 0) r += p_;
  return {this, static_cast<uint32_t>(r)};  // prime residues embed index-preserving
}

FieldElement Field::from_coords(const std::vector<FieldElement>& coords) const {
  if (is_prime_field()) {
    if (coords.size() != 1 || !same_as(coords[0].field()))
      throw std::invalid_argument("bad coordinate vector");
    return coords[0];
  }
  if (static_cast<int>(coords.size()) != m_)
    throw std::invalid_argument("bad coordinate vector length");
  uint32_t idx = 0;
  auto bs = static_cast<uint32_t>(base_->size());
  uint32_t mul = 1;
  for (int i = 0; i < m_; ++i) {
    if (!base_->same_as(coords[i].field()))
      throw std::invalid_argument("coordinate not in base field");
    idx += coords[i].index() * mul;
    mul *= bs;
  }
  return {this, idx};
}

std::vector<FieldElement> Field::modulus_coeffs() const {
  std::vector<FieldElement> out;
  const Field* cf = is_prime_field() ? this : base_.get();
  out.reserve(modulus_.size());
  for (uint32_t c : modulus_) out.emplace_back(cf, c);
  return out;
}

std::string Field::modulus_string() const {
  // Defining polynomial in the residue symbol, highest power first, e.g.
  // "w^4+w+1" or "W^2+W+w" for a tower step.
  const Field* cf = is_prime_field() ? this : base_.get();
  std::string out;
  for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
    uint32_t c = modulus_[i];
    if (c == 0) continue;
    std::string term;
    std::string var;
    if (i >= 1) {
      var = gen_name_;
      if (i > 1) var += "^" + std::to_string(i);
    }
    FieldElement ce(cf, c);
    if (i == 0) {
      term = cf->is_prime_field() ? std::to_string(c) : to_power_string(ce);
    } else if (c == 1) {
      term = var;
    } else if (cf->is_prime_field()) {
      term = std::to_string(c) + var;
    } else {
      term = to_power_string(ce) + "*" + var;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

bool Field::same_as(const Field& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || m_ != o.m_ || size_ != o.size_ || modulus_ != o.modulus_) return false;
  if (!base_ != !o.base_) return false;
  return !base_ || base_->same_as(*o.base_);
}

uint32_t Field::idx_add(uint32_t a, uint32_t b) const {
  if (!base_) return static_cast<uint32_t>((a + static_cast<int64_t>(b)) % p_);
  auto bs = static_cast<uint32_t>(base_->size());
  uint32_t out = 0, mul = 1;
  for (int i = 0; i < m_; ++i) {
    out += base_->idx_add(a % bs, b % bs) * mul;
    a /= bs;
    b /= bs;
    mul *= bs;
  }
  return out;
}

uint32_t Field::idx_neg(uint32_t a) const {
  if (!base_) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
  auto bs = static_cast<uint32_t>(base_->size());
  uint32_t out = 0, mul = 1;
  for (int i = 0; i < m_; ++i) {
    out += base_->idx_neg(a % bs) * mul;
    a /= bs;
    mul *= bs;
  }
  return out;
}

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
  if (!base_)
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % static_cast<uint64_t>(p_));
  auto bs = static_cast<uint32_t>(base_->size());
  std::vector<uint32_t> av(m_), bv(m_), conv(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    av[i] = a % bs;
    a /= bs;
    bv[i] = b % bs;
    b /= bs;
  }
  for (int i = 0; i < m_; ++i) {
    if (av[i] == 0) continue;
    for (int j = 0; j < m_; ++j) {
      if (bv[j] == 0) continue;
      conv[i + j] = base_->idx_add(conv[i + j], base_->idx_mul(av[i], bv[j]));
    }
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    uint32_t c = conv[k];
    if (c == 0) continue;
    conv[k] = 0;
    for (int j = 0; j < m_; ++j) {
      if (negred_[j] == 0) continue;
      conv[k - m_ + j] = base_->idx_add(conv[k - m_ + j], base_->idx_mul(c, negred_[j]));
    }
  }
  uint32_t out = 0, mul = 1;
  for (int i = 0; i < m_; ++i) {
    out += conv[i] * mul;
    mul *= bs;
  }
  return out;
}

uint32_t Field::pow_poly(uint32_t a, int64_t e) const {
  uint32_t r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    e >>= 1;
  }
  return r;
}

uint32_t Field::idx_mul(uint32_t a, uint32_t b) const {
  if (!tables_ready_) return mul_poly(a, b);
  if (a == 0 || b == 0) return 0;
  int64_t s = log_[a] + static_cast<int64_t>(log_[b]);
  int64_t n = size_ - 1;
  if (s >= n) s -= n;
  return exp_[s];
}

uint32_t Field::idx_inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  int64_t n = size_ - 1;
  return exp_[(n - log_[a]) % n];
}

uint32_t Field::idx_pow(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("negative power of zero");
  }
  int64_t n = size_ - 1;
  int64_t r = (log_[a] * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[r];
}

void Field::build_tables() {
  int64_t n = size_ - 1;
  // Candidate generator: the residue of the indeterminate. If its order is not
  // size-1, scan elements by index for a multiplicative generator.
  auto is_generator = [&](uint32_t x) {
    if (x == 0) return false;
    for (int64_t f : prime_factors(n))
      if (pow_poly(x, n / f) == 1) return false;
    return true;
  };
  if (n == 1) {
    gen_ = 1;
  } else if (!is_generator(gen_)) {
    uint32_t g = 0;
    for (uint32_t x = 1; x < size_; ++x) {
      if (is_generator(x)) {
        g = x;
        break;
      }
    }
    if (g == 0) throw std::logic_error("no multiplicative generator found");
    gen_ = g;
  }
  exp_.resize(n);
  log_.assign(size_, -1);
  uint32_t x = 1;
  for (int64_t k = 0; k < n; ++k) {
    if (log_[x] != -1) throw std::logic_error("generator order too small");
    exp_[k] = x;
    log_[x] = static_cast<int32_t>(k);
    x = mul_poly(x, gen_);
  }
  if (x != 1) throw std::logic_error("generator order mismatch");
  tables_ready_ = true;
}

FieldPtr Field::make_prime(int64_t p, int64_t recorded_c0) {
  auto f = std::shared_ptr<Field>(new Field());
  Field* mf = f.get();
  mf->p_ = p;
  mf->m_ = 1;
  mf->total_degree_ = 1;
  mf->size_ = p;
  int64_t c0 = ((recorded_c0 % p) + p) % p;
  mf->modulus_ = {static_cast<uint32_t>(c0), 1};
  mf->gen_ = static_cast<uint32_t>((p - c0) % p);  // residue of the indeterminate
  mf->build_tables();
  return f;
}

FieldPtr Field::make_extension(FieldPtr base, std::vector<uint32_t> modulus,
                               std::string gen_name) {
  int m = static_cast<int>(modulus.size()) - 1;
  if (m < 2 || modulus[m] != 1) throw std::invalid_argument("modulus must be monic, degree >= 2");
  if (!is_irreducible(*base, modulus)) throw std::invalid_argument("modulus is reducible");
  auto f = std::shared_ptr<Field>(new Field());
  Field* mf = f.get();
  mf->base_ = std::move(base);
  mf->p_ = mf->base_->characteristic();
  mf->m_ = m;
  mf->total_degree_ = mf->base_->degree_over_prime() * m;
  mf->size_ = 1;
  for (int i = 0; i < m; ++i) mf->size_ *= mf->base_->size();
  if (mf->size_ > kMaxSize) throw std::invalid_argument("field size exceeds 2^20");
  mf->modulus_ = std::move(modulus);
  mf->negred_.resize(m);
  for (int i = 0; i < m; ++i) mf->negred_[i] = mf->base_->idx_neg(mf->modulus_[i]);
  mf->gen_name_ = std::move(gen_name);
  mf->gen_ = static_cast<uint32_t>(mf->base_->size());  // residue: coords (0, 1, 0, ...)
  mf->build_tables();
  return f;
}

FieldPtr make_field(int64_t p, int m, const std::vector<int64_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("degree must be positive");
  int64_t size = 1;
  for (int i = 0; i < m; ++i) {
    size *= p;
    if (size > Field::kMaxSize) throw std::invalid_argument("field size exceeds 2^20");
  }
  if (static_cast<int>(modulus.size()) != m + 1)
    throw std::invalid_argument("modulus must list m+1 coefficients");
  std::vector<uint32_t> red(m + 1);
  for (int i = 0; i <= m; ++i) red[i] = static_cast<uint32_t>(((modulus[i] % p) + p) % p);
  if (red[m] != 1) throw std::invalid_argument("modulus must be monic");
  if (m == 1) return Field::make_prime(p, red[0]);
  return Field::make_extension(Field::make_prime(p, 0), std::move(red), "w");
}

FieldPtr make_field(int64_t p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("degree must be positive");
  if (m == 1) return Field::make_prime(p, 0);
  if (const auto* pinned = pinned_modulus(p, m)) return make_field(p, m, *pinned);
  int64_t size = 1;
  for (int i = 0; i < m; ++i) {
    size *= p;
    if (size > Field::kMaxSize) throw std::invalid_argument("field size exceeds 2^20");
  }
  FieldPtr prime = Field::make_prime(p, 0);
  // Least monic irreducible, coefficient tuples (c_{m-1}, ..., c_0) compared
  // most significant first. The plain counter v = sum c_i p^i scans that order.
  for (int64_t v = 0; v < size; ++v) {
    std::vector<uint32_t> cand(m + 1);
    int64_t t = v;
    for (int i = 0; i < m; ++i) {
      cand[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    cand[m] = 1;
    if (is_irreducible(*prime, cand))
      return Field::make_extension(std::move(prime), std::move(cand), "w");
  }
  throw std::logic_error("no irreducible modulus found");
}

FieldPtr extend_quadratic(const FieldPtr& base) {
  if (!base) throw std::invalid_argument("null base field");
  if (base->size() > Field::kMaxQuadraticBase)
    throw std::invalid_argument("base field exceeds 2^10 elements");
  // Coefficient candidates in generator-power order: 0, 1, g, g^2, ...
  std::vector<uint32_t> order;
  order.reserve(base->size());
  order.push_back(0);
  {
    uint32_t g = base->generator().index();
    uint32_t x = 1;
    for (int64_t k = 0; k + 1 < base->size(); ++k) {
      order.push_back(x);
      x = base->idx_mul(x, g);
    }
  }
  std::string name = base->generator_name() == "w"   ? "W"
                     : base->generator_name() == "W" ? "V"
                                                     : "U";
  for (uint32_t c1 : order) {
    for (uint32_t c0 : order) {
      bool has_root = false;
      for (uint32_t x = 0; x < base->size(); ++x) {
        uint32_t v = base->idx_add(base->idx_add(base->idx_mul(x, x), base->idx_mul(c1, x)), c0);
        if (v == 0) {
          has_root = true;
          break;
        }
      }
      if (!has_root) return Field::make_extension(base, {c0, c1, 1}, name);
    }
  }
  throw std::logic_error("no irreducible quadratic found");
}

FieldElement embed(const FieldElement& x, const FieldPtr& into) {
  const Field* f = into.get();
  while (f) {
    if (f->same_as(x.field())) return {into.get(), x.index()};
    f = f->base();
  }
  throw std::invalid_argument("element field is not in the base chain");
}

bool lies_in_base(const FieldElement& x) {
  const Field& f = x.field();
  return f.base() != nullptr && x.index() < f.base()->size();
}

FieldElement project_to_base(const FieldElement& x) {
  if (!lies_in_base(x)) throw std::invalid_argument("element does not lie in the base field");
  return {x.field().base(), x.index()};
}

std::pair<FieldElement, FieldElement> trace_norm(const FieldElement& x, const Field& target) {
  const Field& f = x.field();
  if (f.base() == nullptr || !f.base()->same_as(target) || f.ext_degree() != 2)
    throw std::invalid_argument("element is not in a quadratic tower over the target");
  FieldElement conj = x.pow(target.size());
  FieldElement tr = x + conj;
  FieldElement nr = x * conj;
  return {project_to_base(tr), project_to_base(nr)};
}

std::string to_power_string(const FieldElement& x) {
  if (x.is_zero()) return "0";
  // Prime-subfield elements print as integers (the flat index below the
  // characteristic is the residue itself).
  if (x.index() < x.field().characteristic()) return std::to_string(x.index());
  int64_t k = *x.dlog();
  const std::string& g = x.field().generator_name();
  if (k == 1) return g;
  return g + "^" + std::to_string(k);
}

std::string to_coord_string(const FieldElement& x) {
  const Field& f = x.field();
  if (f.is_prime_field()) return std::to_string(x.index());
  if (x.is_zero()) return "0";
  std::string out;
  auto coords = x.coords();
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    const FieldElement& c = coords[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = f.base()->is_prime_field() ? std::to_string(c.index()) : to_power_string(c);
    } else {
      std::string var = f.generator_name();
      if (i > 1) var += "^" + std::to_string(i);
      if (c.is_one()) {
        term = var;
      } else if (f.base()->is_prime_field()) {
        term = std::to_string(c.index()) + "*" + var;
      } else {
        term = to_power_string(c) + "*" + var;
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

nlohmann::ordered_json element_json(const FieldElement& x) {
  nlohmann::ordered_json j;
  if (x.is_zero()) {
    j["log"] = nullptr;
    std::vector<uint32_t> coords(static_cast<size_t>(x.field().ext_degree()), 0);
    j["coords"] = coords;
  } else {
    j["log"] = *x.dlog();
  }
  return j;
}

}  // namespace asdescent
