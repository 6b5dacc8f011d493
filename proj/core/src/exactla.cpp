#include "recolle/exactla.hpp"

#include <numeric>
#include <sstream>

namespace recolle {

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

int64_t mod_pow(int64_t b, int64_t e, int64_t p) {
  __int128 r = 1, x = ((b % p) + p) % p;
  while (e > 0) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<int64_t>(r);
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw DimError("zero denominator");
  if (d < 0) {
    if (n == INT64_MIN || d == INT64_MIN) {
      *this = from_mpq(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))));
      return;
    }
    n = -n;
    d = -d;
  }
  int64_t g = gcd64(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_mpq(const mpq_class& q0) {
  mpq_class q = q0;
  q.canonicalize();
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_shared<const mpq_class>(q);
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    } else {
      int64_t x, y, n, d;
      if (!__builtin_mul_overflow(a.num_, b.den_, &x) && !__builtin_mul_overflow(b.num_, a.den_, &y) &&
          !__builtin_add_overflow(x, y, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d))
        return Rational(n, d);
    }
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::operator-() const {
  if (!big_ && num_ != INT64_MIN) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    int64_t g1 = gcd64(a.num_, b.den_), g2 = gcd64(b.num_, a.den_);
    int64_t n, d;
    if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
        !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d)) {
      Rational r;
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DimError("division by zero");
  if (!b.big_) {
    if (b.num_ != INT64_MIN) {
      Rational inv;
      inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
      inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
      return a * inv;
    }
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only when values differ
}

bool operator<(const Rational& a, const Rational& b) { return a.to_mpq() < b.to_mpq(); }

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(int64_t p) {
  if (!is_prime(p) || p > (int64_t(1) << 31)) throw DimError("field characteristic must be a prime below 2^31");
  Field f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

std::string Field::name() const { return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p); }

Scalar Field::from_int(int64_t v) const {
  if (kind == Kind::Rationals) return Scalar(v);
  int64_t r = v % p;
  return Scalar(r < 0 ? r + p : r);
}

Scalar Field::normalize(const Scalar& a) const {
  if (kind == Kind::Rationals) return a;
  if (a.is_small() && a.small_den() == 1 && a.small_num() >= 0 && a.small_num() < p) return a;
  mpq_class q = a.to_mpq();
  mpz_class n = q.get_num() % p, d = q.get_den() % p;
  if (d == 0) throw DimError("denominator divisible by the characteristic");
  int64_t ni = n.get_si(), di = d.get_si();
  if (ni < 0) ni += p;
  if (di < 0) di += p;
  return Scalar(static_cast<int64_t>((__int128)ni * mod_pow(di, p - 2, p) % p));
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  return normalize(Scalar(q));
}

namespace {

// least nonnegative residue; inputs need not be reduced
int64_t reduce_mod(__int128 x, int64_t p) {
  __int128 r = x % p;
  return static_cast<int64_t>(r < 0 ? r + p : r);
}

}  // namespace

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind == Kind::Rationals) return a + b;
  return Scalar(reduce_mod((__int128)a.small_num() + b.small_num(), p));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind == Kind::Rationals) return a - b;
  return Scalar(reduce_mod((__int128)a.small_num() - b.small_num(), p));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind == Kind::Rationals) return a * b;
  return Scalar(reduce_mod((__int128)a.small_num() * b.small_num(), p));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind == Kind::Rationals) return -a;
  return Scalar(reduce_mod(-(__int128)a.small_num(), p));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw DimError("inverse of zero");
  if (kind == Kind::Rationals) return Scalar(1) / a;
  int64_t r = reduce_mod(a.small_num(), p);
  if (r == 0) throw DimError("inverse of zero");
  return Scalar(mod_pow(r, p - 2, p));
}

// ---------------------------------------------------------------- Mat

Mat::Mat(Field f, size_t rows, size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(Field f, size_t n) {
  Mat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar(1);
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<int64_t>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimError("ragged rows");
    for (size_t j = 0; j < c; ++j) m.data_[i * c + j] = f.from_int(rows[i][j]);
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

Mat Mat::column(size_t j) const { return block(0, j, rows_, 1); }

Mat Mat::columns(const std::vector<size_t>& idx) const {
  Mat m(field_, rows_, idx.size());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < idx.size(); ++k) m.data_[i * idx.size() + k] = data_[i * cols_ + idx[k]];
  return m;
}

Mat Mat::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimError("block out of range");
  Mat m(field_, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) m.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
  return m;
}

void Mat::set_block(size_t r0, size_t c0, const Mat& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimError("block out of range");
  for (size_t i = 0; i < m.rows_; ++i)
    for (size_t j = 0; j < m.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = m.data_[i * m.cols_ + j];
}

Mat Mat::scaled(const Scalar& s) const {
  Mat m(field_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = field_.mul(data_[k], s);
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimError("product shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatch("product of matrices over different fields");
  Mat c(a.field_, a.rows_, b.cols_);
  const Field& f = a.field_;
  if (f.is_finite()) {
    const uint64_t p = static_cast<uint64_t>(f.p);
    std::vector<uint64_t> acc(b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (size_t k = 0; k < a.cols_; ++k) {
        uint64_t x = static_cast<uint64_t>(a.data_[i * a.cols_ + k].small_num());
        if (!x) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          uint64_t y = static_cast<uint64_t>(b.data_[k * b.cols_ + j].small_num());
          if (y) acc[j] = (acc[j] + x * y) % p;
        }
      }
      for (size_t j = 0; j < b.cols_; ++j) c.data_[i * b.cols_ + j] = Scalar(static_cast<int64_t>(acc[j]));
    }
    return c;
  }
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.data_[i * a.cols_ + k];
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.data_[k * b.cols_ + j];
        if (y.is_zero()) continue;
        auto& z = c.data_[i * b.cols_ + j];
        z = z + x * y;
      }
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimError("sum shape mismatch");
  Mat c(a.field_, a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimError("difference shape mismatch");
  Mat c(a.field_, a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << data_[i * cols_ + j].str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimError("hstack row mismatch");
  Mat m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw DimError("vstack column mismatch");
  Mat m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

// ---------------------------------------------------------------- elimination

namespace {

Echelon rref_mod_p(const Mat& m) {
  const size_t R = m.rows(), C = m.cols();
  const int64_t p = m.field().p;
  std::vector<int64_t> a(R * C);
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) a[i * C + j] = m.at(i, j).small_num();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t piv = R;
    for (size_t i = r; i < R; ++i)
      if (a[i * C + c]) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    int64_t inv = m.field().inv(Scalar(a[r * C + c])).small_num();
    for (size_t j = c; j < C; ++j) a[r * C + j] = static_cast<int64_t>((__int128)a[r * C + j] * inv % p);
    for (size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      int64_t f = a[i * C + c];
      if (!f) continue;
      for (size_t j = c; j < C; ++j) {
        int64_t v = a[r * C + j];
        if (!v) continue;
        int64_t x = static_cast<int64_t>((a[i * C + j] - (__int128)f * v) % p);
        a[i * C + j] = x < 0 ? x + p : x;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e{Mat(m.field(), r, C), pivots};
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < C; ++j) e.reduced.set(i, j, Scalar(a[i * C + j]));
  return e;
}

Echelon rref_rational(const Mat& m) {
  const size_t R = m.rows(), C = m.cols();
  std::vector<Scalar> a(R * C);
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) a[i * C + j] = m.at(i, j);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t piv = R;
    for (size_t i = r; i < R; ++i)
      if (!a[i * C + c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    Scalar inv = Scalar(1) / a[r * C + c];
    for (size_t j = c; j < C; ++j)
      if (!a[r * C + j].is_zero()) a[r * C + j] = a[r * C + j] * inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      Scalar f = a[i * C + c];
      if (f.is_zero()) continue;
      for (size_t j = c; j < C; ++j) {
        const Scalar& v = a[r * C + j];
        if (v.is_zero()) continue;
        a[i * C + j] = a[i * C + j] - f * v;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e{Mat(m.field(), r, C), pivots};
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < C; ++j) e.reduced.set(i, j, a[i * C + j]);
  return e;
}

}  // namespace

Echelon rref(const Mat& m) { return m.field().is_finite() ? rref_mod_p(m) : rref_rational(m); }

size_t rank_mod_p(std::vector<uint32_t>& a, size_t rows, size_t cols, uint32_t p) {
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i * cols + c]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    uint64_t inv = static_cast<uint64_t>(mod_pow(a[r * cols + c], p - 2, p));
    for (size_t j = c; j < cols; ++j) a[r * cols + j] = static_cast<uint32_t>(a[r * cols + j] * inv % p);
    for (size_t i = r + 1; i < rows; ++i) {
      uint64_t f = a[i * cols + c];
      if (!f) continue;
      for (size_t j = c; j < cols; ++j) {
        uint64_t v = a[r * cols + j];
        if (v) a[i * cols + j] = static_cast<uint32_t>((a[i * cols + j] + (p - f) * v) % p);
      }
    }
    ++r;
  }
  return r;
}

size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_finite()) {
    std::vector<uint32_t> a(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = static_cast<uint32_t>(m.at(i, j).small_num());
    return rank_mod_p(a, m.rows(), m.cols(), static_cast<uint32_t>(m.field().p));
  }
  return rref(m).pivots.size();
}

Mat kernel_basis(const Mat& m) {
  Echelon e = rref(m);
  const size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(m.field(), C, free_cols.size());
  for (size_t t = 0; t < free_cols.size(); ++t) {
    size_t fc = free_cols[t];
    k.set(fc, t, Scalar(1));
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& v = e.reduced.at(r, fc);
      if (!v.is_zero()) k.set(e.pivots[r], t, m.field().neg(v));
    }
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimError("solve: row mismatch");
  Echelon e = rref(hstack(a, b));
  const size_t n = a.cols();
  Mat x(a.field(), n, b.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    size_t pc = e.pivots[r];
    if (pc >= n) return std::nullopt;
    for (size_t j = 0; j < b.cols(); ++j) x.set(pc, j, e.reduced.at(r, n + j));
  }
  return x;
}

size_t quotient_dim(const Mat& space, const Mat& subspace) {
  size_t rs = rank(space);
  if (subspace.cols() == 0) return rs;
  if (rank(hstack(space, subspace)) != rs) throw ContainmentError("subspace not contained in space");
  return rs - rank(subspace);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.field(), m.rows()));
}

std::vector<size_t> independent_columns(const Mat& m) { return rref(m).pivots; }

}  // namespace recolle
