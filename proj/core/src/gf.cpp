#include "agcodes/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace agcodes {

namespace {

constexpr int kMaxOrder = 1 << 16;
constexpr int kAddTableLimit = 1024;  // full add table below this order

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing (leading-coefficient) zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b, b monic of degree >= 1.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int j = 0; j <= db; ++j) {
      a[shift + j] = ((a[shift + j] - lead * b[j]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), mod, p);
}

// Candidate m decoded so that increasing m enumerates coefficient tuples
// (c0, c1, ..., c_{k-1}) in lexicographic order, constant term compared
// first.
Poly decode_candidate(long long m, int p, int k) {
  Poly c(k + 1, 0);
  c[k] = 1;  // monic
  for (int j = k - 1; j >= 0; --j) {
    c[j] = static_cast<int>(m % p);  // c_{k-1} varies fastest
    m /= p;
  }
  return c;
}

bool divisible_by_some_small_factor(const Poly& f, int p, int k) {
  // Trial division against all monic polynomials of degree 1..k/2.
  for (int dg = 1; dg <= k / 2; ++dg) {
    long long count = 1;
    for (int t = 0; t < dg; ++t) count *= p;
    Poly g(dg + 1, 0);
    g[dg] = 1;
    for (long long m = 0; m < count; ++m) {
      long long v = m;
      for (int j = 0; j < dg; ++j) {
        g[j] = static_cast<int>(v % p);
        v /= p;
      }
      if (poly_mod(f, g, p).empty()) return true;
    }
  }
  return false;
}

}  // namespace

struct Field::Data {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;       // constant first, length k+1
  std::vector<int> exp_table;     // exp[i] = g^i, length 2(q-1)
  std::vector<int> log_table;     // log[a] for a != 0
  std::vector<int> neg_table;     // additive inverse per index
  std::vector<int> add_table;     // q*q when q <= kAddTableLimit and p odd
  int generator = 1;

  std::vector<int> coeffs_of(int a) const {
    std::vector<int> c(k, 0);
    for (int j = 0; j < k; ++j) {
      c[j] = a % p;
      a /= p;
    }
    return c;
  }

  int index_of(const Poly& c) const {
    int a = 0;
    for (int j = std::min<int>(static_cast<int>(c.size()), k) - 1; j >= 0; --j) {
      a = a * p + c[j];
    }
    return a;
  }

  int add_raw(int a, int b) const {
    if (p == 2) return a ^ b;
    int r = 0, mult = 1;
    while (a || b) {
      r += ((a % p) + (b % p)) % p * mult;
      a /= p;
      b /= p;
      mult *= p;
    }
    return r;
  }

  int mul_poly(int a, int b) const {
    Poly pa = coeffs_of(a), pb = coeffs_of(b);
    trim(pa);
    trim(pb);
    return index_of(poly_mul_mod(pa, pb, modulus, p));
  }

  int pow_poly(int a, long long e) const {
    int result = 1, base = a;
    while (e > 0) {
      if (e & 1) result = mul_poly(result, base);
      base = mul_poly(base, base);
      e >>= 1;
    }
    return result;
  }

  int mult_order(int a) const {
    // order of a in the unit group, via the factorization of q-1
    long long ord = q - 1;
    for (int f : prime_factors(q - 1)) {
      while (ord % f == 0 && pow_poly(a, ord / f) == 1) ord /= f;
    }
    return static_cast<int>(ord);
  }
};

Field Field::make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field extension degree must be positive");
  long long q = 1;
  for (int t = 0; t < k; ++t) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = static_cast<int>(q);

  long long candidates = 1;
  for (int t = 0; t < k; ++t) candidates *= p;
  bool found = false;
  for (long long m = 0; m < candidates; ++m) {
    Poly f = decode_candidate(m, p, k);
    if (k >= 2 && f[0] == 0) continue;  // divisible by X
    if (!divisible_by_some_small_factor(f, p, k)) {
      d->modulus = f;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no irreducible modulus found");

  d->neg_table.resize(d->q);
  for (int a = 0; a < d->q; ++a) {
    auto c = d->coeffs_of(a);
    for (int& v : c) v = (p - v) % p;
    d->neg_table[a] = d->index_of(c);
  }

  if (p != 2 && d->q <= kAddTableLimit) {
    d->add_table.resize(static_cast<std::size_t>(d->q) * d->q);
    for (int a = 0; a < d->q; ++a)
      for (int b = 0; b < d->q; ++b)
        d->add_table[static_cast<std::size_t>(a) * d->q + b] = d->add_raw(a, b);
  }

  // log/antilog tables from the smallest generator, filled along the
  // polynomial path so the two routes agree by construction
  if (d->q == 2) {
    d->generator = 1;
    d->exp_table = {1, 1};
    d->log_table = {0, 0};
  } else {
    int g = 0;
    for (int a = 2; a < d->q; ++a) {
      if (d->mult_order(a) == d->q - 1) {
        g = a;
        break;
      }
    }
    if (g == 0) throw std::logic_error("no multiplicative generator found");
    d->generator = g;
    d->exp_table.resize(2 * (d->q - 1));
    d->log_table.assign(d->q, 0);
    int acc = 1;
    for (int i = 0; i < d->q - 1; ++i) {
      d->exp_table[i] = acc;
      d->exp_table[i + d->q - 1] = acc;
      d->log_table[acc] = i;
      acc = d->mul_poly(acc, g);
    }
    if (acc != 1) throw std::logic_error("generator order mismatch");
  }
  return Field(std::move(d));
}

int Field::characteristic() const { return d_->p; }
int Field::degree() const { return d_->k; }
int Field::order() const { return d_->q; }
const std::vector<int>& Field::modulus() const { return d_->modulus; }

int Field::add(int a, int b) const {
  if (d_->p == 2) return a ^ b;
  if (!d_->add_table.empty())
    return d_->add_table[static_cast<std::size_t>(a) * d_->q + b];
  return d_->add_raw(a, b);
}

int Field::neg(int a) const { return d_->neg_table[a]; }
int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return d_->exp_table[d_->log_table[a] + d_->log_table[b]];
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  return d_->exp_table[(d_->q - 1) - d_->log_table[a]];
}

int Field::pow(int a, long long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (a == 0) return e == 0 ? 1 : 0;
  const long long ord = d_->q - 1;
  return d_->exp_table[static_cast<int>((d_->log_table[a] * (e % ord)) % ord)];
}

int Field::mul_nolut(int a, int b) const { return d_->mul_poly(a, b); }

int Field::pow_nolut(int a, long long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (a == 0) return e == 0 ? 1 : 0;
  return d_->pow_poly(a, e);
}

int Field::inv_nolut(int a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  return d_->pow_poly(a, d_->q - 2);
}

Element Field::from_index(int index) const {
  if (index < 0 || index >= d_->q) throw std::out_of_range("element index");
  return Element(*this, d_->coeffs_of(index));
}

Element Field::from_coeffs(const std::vector<int>& coeffs) const {
  return Element(*this, coeffs);
}

Element Field::zero() const { return from_index(0); }
Element Field::one() const { return from_index(1); }

std::vector<Element> Field::enumerate() const {
  std::vector<Element> out;
  out.reserve(d_->q);
  for (int a = 0; a < d_->q; ++a) out.push_back(from_index(a));
  return out;
}

std::vector<int> Field::coeffs_of(int index) const { return d_->coeffs_of(index); }

int Field::index_of_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != d_->k)
    throw std::invalid_argument("coefficient vector length mismatch");
  for (int c : coeffs)
    if (c < 0 || c >= d_->p) throw std::invalid_argument("coefficient out of range");
  return d_->index_of(coeffs);
}

int Field::smallest_generator() const { return d_->generator; }

int Field::element_of_mult_order(int ord) const {
  if (ord < 1 || (d_->q - 1) % ord != 0)
    throw std::invalid_argument("order must divide the unit group order");
  for (int a = 1; a < d_->q; ++a) {
    if (d_->mult_order(a) == ord) return a;
  }
  throw std::logic_error("no element of the requested order");
}

bool Field::operator==(const Field& other) const {
  return d_ == other.d_ ||
         (d_->p == other.d_->p && d_->k == other.d_->k &&
          d_->modulus == other.d_->modulus);
}

std::string Field::to_string() const { return "GF(" + std::to_string(d_->q) + ")"; }

Element::Element(Field field, std::vector<int> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const auto& d = *field_.d_;
  if (static_cast<int>(coeffs_.size()) != d.k)
    throw std::invalid_argument("coefficient vector length mismatch");
  for (int c : coeffs_)
    if (c < 0 || c >= d.p) throw std::invalid_argument("coefficient out of range");
}

int Element::index() const { return field_.d_->index_of(coeffs_); }

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

void Element::require_same_field(const Element& rhs) const {
  if (field_ != rhs.field_)
    throw std::invalid_argument("elements belong to different fields");
}

Element Element::operator+(const Element& rhs) const {
  require_same_field(rhs);
  const int p = field_.d_->p;
  std::vector<int> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (coeffs_[j] + rhs.coeffs_[j]) % p;
  return Element(field_, std::move(c));
}

Element Element::operator-() const {
  const int p = field_.d_->p;
  std::vector<int> c(coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (p - coeffs_[j]) % p;
  return Element(field_, std::move(c));
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

Element Element::operator*(const Element& rhs) const {
  require_same_field(rhs);
  return field_.from_index(field_.mul_nolut(index(), rhs.index()));
}

Element Element::inverse() const {
  return field_.from_index(field_.inv_nolut(index()));
}

Element Element::operator/(const Element& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

Element Element::pow(long long e) const {
  return field_.from_index(field_.pow_nolut(index(), e));
}

bool Element::operator==(const Element& rhs) const {
  return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::string Element::to_string() const { return std::to_string(index()); }

}  // namespace agcodes
