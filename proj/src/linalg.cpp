#include "wreathbase/linalg.hpp"

#include <stdexcept>

namespace wb::linalg {

MatGF::MatGF(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), codes_(rows * cols, 0)
{}

MatGF::MatGF(FiniteField field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> codes)
    : field_(field), rows_(rows), cols_(cols), codes_(std::move(codes))
{
  if (codes_.size() != rows * cols)
    throw std::invalid_argument("matrix entry count does not match shape");
  for (auto c : codes_)
    if (c >= field.q())
      throw std::invalid_argument("matrix entry out of range for " + field.name());
}

MatGF MatGF::identity(FiniteField field, std::size_t n)
{
  MatGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.code(i, i) = 1;
  return m;
}

void MatGF::set(std::size_t r, std::size_t c, const FieldElem& v)
{
  if (!(v.field() == field_))
    throw std::invalid_argument("field mismatch in matrix assignment");
  code(r, c) = v.code();
}

MatGF MatGF::transpose() const
{
  MatGF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.code(c, r) = code(r, c);
  return t;
}

MatGF operator*(const MatGF& a, const MatGF& b)
{
  if (!(a.field_ == b.field_))
    throw std::invalid_argument("field mismatch in matrix product");
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix shapes do not agree");
  const auto& f = a.field_;
  MatGF out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto x = a.code(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.code(i, j) = f.add(out.code(i, j), f.mul(x, b.code(k, j)));
    }
  return out;
}

RrefResult rref(const MatGF& a)
{
  MatGF m = a;
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.code(sel, col) == 0)
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.code(sel, c), m.code(row, c));
    const auto scale = f.inv(m.code(row, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      m.code(row, c) = f.mul(m.code(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row)
        continue;
      const auto factor = m.code(r, col);
      if (factor == 0)
        continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        m.code(r, c) = f.sub(m.code(r, c), f.mul(factor, m.code(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), row, std::move(pivots)};
}

std::size_t rank(const MatGF& a) { return rref(a).rank; }

std::size_t SubspaceCanonHash::operator()(const SubspaceCanon& s) const noexcept
{
  std::size_t h = s.ambient_dim * 0x9e3779b97f4a7c15ULL + s.dim;
  for (auto c : s.basis)
    h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

SubspaceCanon column_space_canon(const MatGF& a)
{
  auto r = rref(a.transpose());
  SubspaceCanon s;
  s.ambient_dim = a.rows();
  s.dim = r.rank;
  s.pivots = std::move(r.pivots);
  s.basis.assign(r.reduced.codes().begin(),
                 r.reduced.codes().begin() + static_cast<std::ptrdiff_t>(r.rank * a.rows()));
  return s;
}

namespace {

// Vector of F_q^d <-> base-q integer, coordinate 0 least significant.
struct VectorCodec {
  FiniteField field;
  std::size_t dim;
  std::uint64_t count;

  std::vector<std::uint32_t> decode(std::uint64_t v) const
  {
    std::vector<std::uint32_t> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = static_cast<std::uint32_t>(v % field.q());
      v /= field.q();
    }
    return out;
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& x) const
  {
    std::uint64_t v = 0;
    for (std::size_t i = dim; i-- > 0;)
      v = v * field.q() + x[i];
    return v;
  }
};

} // namespace

void enumerate_gl(std::size_t d, FiniteField field, const std::function<void(const MatGF&)>& visit,
                  std::uint64_t cap)
{
  if (gl_order(static_cast<unsigned>(d), field.q()) > cap)
    throw BudgetExceeded("|GL_" + std::to_string(d) + "(" + std::to_string(field.q()) +
                         ")| exceeds cap " + std::to_string(cap));
  const VectorCodec codec{field, d, *checked_pow(field.q(), d)};
  const auto q = field.q();

  // span_sets[k] marks vectors in the span of the first k rows
  std::vector<std::vector<char>> span_sets(d + 1, std::vector<char>(codec.count, 0));
  span_sets[0][0] = 1;
  MatGF m(field, d, d);

  std::function<void(std::size_t)> place = [&](std::size_t row) {
    if (row == d) {
      visit(m);
      return;
    }
    for (std::uint64_t v = 0; v < codec.count; ++v) {
      if (span_sets[row][v])
        continue;
      const auto x = codec.decode(v);
      for (std::size_t c = 0; c < d; ++c)
        m.code(row, c) = x[c];
      // span of rows 0..row = { s + t*x }
      auto& next = span_sets[row + 1];
      std::fill(next.begin(), next.end(), 0);
      for (std::uint64_t s = 0; s < codec.count; ++s) {
        if (!span_sets[row][s])
          continue;
        const auto sv = codec.decode(s);
        for (std::uint32_t t = 0; t < q; ++t) {
          std::vector<std::uint32_t> w(d);
          for (std::size_t c = 0; c < d; ++c)
            w[c] = field.add(sv[c], field.mul(t, x[c]));
          next[codec.encode(w)] = 1;
        }
      }
      place(row + 1);
    }
  };
  place(0);
}

std::vector<MatGF> all_gl(std::size_t d, FiniteField field, std::uint64_t cap)
{
  std::vector<MatGF> out;
  enumerate_gl(d, field, [&](const MatGF& g) { out.push_back(g); }, cap);
  return out;
}

Nat gl_order(unsigned d, std::uint64_t q)
{
  const Nat qd = wb::pow(Nat(q), d);
  Nat order = 1;
  Nat qi = 1;
  for (unsigned i = 0; i < d; ++i) {
    order *= qd - qi;
    qi *= q;
  }
  return order;
}

Nat sl_order(unsigned d, std::uint64_t q) { return gl_order(d, q) / (q - 1); }

Rational a_factor(unsigned d, std::uint64_t q)
{
  Rational a = 1;
  Nat qi = 1;
  for (unsigned i = 1; i <= d; ++i) {
    qi *= q;
    a *= Rational(qi - 1, qi);
  }
  return a;
}

} // namespace wb::linalg
