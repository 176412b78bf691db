#include "wreathbase/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "wreathbase/nat.hpp"

namespace wb::gf {

namespace detail {

struct FieldData {
  unsigned p = 0;
  unsigned e = 0;
  unsigned q = 0;
  std::vector<unsigned> modulus;
  // q*q tables, empty when q is above kTableLimit
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::vector<std::uint32_t> inv_table;
};

} // namespace detail

namespace {

constexpr unsigned kTableLimit = 1024;

using Poly = std::vector<unsigned>;

Poly decode(std::uint32_t code, unsigned p, unsigned e)
{
  Poly c(e);
  for (unsigned i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, unsigned p)
{
  std::uint32_t code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    code = code * p + *it;
  return code;
}

// Remainder of a modulo monic m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, unsigned p)
{
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const unsigned c = a[i] % p;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dm; ++j)
      a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool divides(const Poly& m, const Poly& a, unsigned p)
{
  for (unsigned c : poly_mod(a, m, p))
    if (c != 0)
      return false;
  return true;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`.
Poly monic_from_index(std::uint64_t index, unsigned deg, unsigned p)
{
  Poly f(deg + 1);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[deg] = 1;
  return f;
}

bool irreducible(const Poly& f, unsigned p)
{
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned k = 1; 2 * k <= deg; ++k) {
    const std::uint64_t count = *checked_pow(p, k);
    for (std::uint64_t i = 0; i < count; ++i)
      if (divides(monic_from_index(i, k, p), f, p))
        return false;
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned e)
{
  if (e == 1)
    return {0, 1};
  const std::uint64_t count = *checked_pow(p, e);
  for (std::uint64_t i = 0; i < count; ++i) {
    Poly f = monic_from_index(i, e, p);
    if (irreducible(f, p))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::unique_ptr<detail::FieldData> build(unsigned p, unsigned e)
{
  auto data = std::make_unique<detail::FieldData>();
  data->p = p;
  data->e = e;
  data->q = static_cast<unsigned>(*checked_pow(p, e));
  data->modulus = smallest_irreducible(p, e);
  return data;
}

} // namespace

FiniteField FiniteField::make(std::uint64_t p, unsigned e, std::uint64_t limit)
{
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1)
    throw std::invalid_argument("extension degree must be at least 1");
  const auto q = checked_pow(p, e, limit);
  if (!q)
    throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                " exceeds limit " + std::to_string(limit));

  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<detail::FieldData>> registry;

  std::lock_guard lock(mutex);
  auto& slot = registry[{p, e}];
  if (!slot) {
    auto data = build(static_cast<unsigned>(p), e);
    FiniteField f(data.get());
    if (data->q <= kTableLimit) {
      const unsigned n = data->q;
      data->add_table.resize(std::size_t(n) * n);
      data->mul_table.resize(std::size_t(n) * n);
      data->inv_table.assign(n, 0);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
          data->add_table[a * n + b] = f.add_poly(a, b);
          data->mul_table[a * n + b] = f.mul_poly(a, b);
        }
      for (std::uint32_t a = 1; a < n; ++a)
        for (std::uint32_t b = 1; b < n; ++b)
          if (data->mul_table[a * n + b] == 1)
            data->inv_table[a] = b;
    }
    slot = std::move(data);
  }
  return FiniteField(slot.get());
}

FiniteField FiniteField::of_order(std::uint64_t q, std::uint64_t limit)
{
  const auto pp = require_prime_power(q);
  return make(pp.p, pp.e, limit);
}

unsigned FiniteField::p() const { return data_->p; }
unsigned FiniteField::e() const { return data_->e; }
unsigned FiniteField::q() const { return data_->q; }
const std::vector<unsigned>& FiniteField::modulus() const { return data_->modulus; }

FieldElem FiniteField::zero() const { return FieldElem(*this, 0); }
FieldElem FiniteField::one() const { return FieldElem(*this, 1); }
FieldElem FiniteField::element(std::uint32_t code) const { return FieldElem(*this, code); }

FieldElem FiniteField::from_coeffs(std::span<const unsigned> coeffs) const
{
  if (coeffs.size() != data_->e)
    throw std::invalid_argument("coefficient vector has wrong length");
  for (unsigned c : coeffs)
    if (c >= data_->p)
      throw std::invalid_argument("coefficient out of range");
  return FieldElem(*this, encode(Poly(coeffs.begin(), coeffs.end()), data_->p));
}

std::vector<FieldElem> FiniteField::enumerate() const
{
  std::vector<FieldElem> out;
  out.reserve(q());
  for (std::uint32_t c = 0; c < q(); ++c)
    out.emplace_back(*this, c);
  return out;
}

std::uint32_t FiniteField::add_poly(std::uint32_t a, std::uint32_t b) const
{
  const unsigned p = data_->p;
  if (data_->e == 1)
    return (a + b) % p;
  Poly x = decode(a, p, data_->e);
  const Poly y = decode(b, p, data_->e);
  for (unsigned i = 0; i < data_->e; ++i)
    x[i] = (x[i] + y[i]) % p;
  return encode(x, p);
}

std::uint32_t FiniteField::mul_poly(std::uint32_t a, std::uint32_t b) const
{
  const unsigned p = data_->p;
  if (data_->e == 1)
    return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
  const unsigned e = data_->e;
  const Poly x = decode(a, p, e);
  const Poly y = decode(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j)
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  return encode(poly_mod(std::move(prod), data_->modulus, p), p);
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const
{
  if (!data_->add_table.empty())
    return data_->add_table[a * data_->q + b];
  return add_poly(a, b);
}

std::uint32_t FiniteField::neg(std::uint32_t a) const
{
  const unsigned p = data_->p;
  if (data_->e == 1)
    return (p - a) % p;
  Poly x = decode(a, p, data_->e);
  for (auto& c : x)
    c = (p - c) % p;
  return encode(x, p);
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const
{
  if (!data_->mul_table.empty())
    return data_->mul_table[a * data_->q + b];
  return mul_poly(a, b);
}

std::uint32_t FiniteField::inv(std::uint32_t a) const
{
  if (a == 0)
    throw std::domain_error("inverse of zero in " + name());
  if (!data_->inv_table.empty())
    return data_->inv_table[a];
  // a^(q-2)
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (unsigned k = data_->q - 2; k; k >>= 1) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string FiniteField::name() const { return "GF(" + std::to_string(q()) + ")"; }

FieldElem::FieldElem(FiniteField field, std::uint32_t code) : field_(field), code_(code)
{
  if (code >= field.q())
    throw std::invalid_argument("element code out of range for " + field.name());
}

std::vector<unsigned> FieldElem::coeffs() const { return decode(code_, field_.p(), field_.e()); }

namespace {
void require_same(const FieldElem& a, const FieldElem& b)
{
  if (!(a.field() == b.field()))
    throw std::invalid_argument("field mismatch: " + a.field().name() + " vs " + b.field().name());
}
} // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b)
{
  require_same(a, b);
  return FieldElem(a.field_, a.field_.add(a.code_, b.code_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b)
{
  require_same(a, b);
  return FieldElem(a.field_, a.field_.sub(a.code_, b.code_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b)
{
  require_same(a, b);
  return FieldElem(a.field_, a.field_.mul(a.code_, b.code_));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b)
{
  require_same(a, b);
  return FieldElem(a.field_, a.field_.mul(a.code_, a.field_.inv(b.code_)));
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, field_.neg(code_)); }

FieldElem FieldElem::inv() const { return FieldElem(field_, field_.inv(code_)); }

std::string FieldElem::to_string() const
{
  if (field_.e() == 1)
    return std::to_string(code_);
  const auto c = coeffs();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0)
      continue;
    if (!out.empty())
      out += "+";
    if (c[i] != 1 || i == 0)
      out += std::to_string(c[i]);
    if (i >= 1)
      out += "x";
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

unsigned multiplicative_order(const FieldElem& a)
{
  if (a.is_zero())
    throw std::domain_error("zero has no multiplicative order");
  const auto& f = a.field();
  unsigned k = 1;
  for (std::uint32_t x = a.code(); x != 1; x = f.mul(x, a.code()))
    ++k;
  return k;
}

} // namespace wb::gf
