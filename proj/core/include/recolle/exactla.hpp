#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "recolle/errors.hpp"

namespace recolle {

// Exact rational; int64 fast path, GMP beyond.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(int64_t n, int64_t d);
  explicit Rational(const mpq_class& q);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }
  mpq_class to_mpq() const;
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_mpq(const mpq_class& q);
  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

using Scalar = Rational;

struct Field {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  int64_t p = 0;

  static Field rationals() { return Field{}; }
  static Field prime(int64_t p);

  bool is_finite() const { return kind == Kind::Prime; }
  std::string name() const;

  Scalar from_int(int64_t v) const;
  Scalar parse(const std::string& text) const;
  Scalar normalize(const Scalar& a) const;  // maps a rational into the field

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.kind == b.kind && a.p == b.p; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
};

bool is_prime(int64_t n);

class Mat {
 public:
  Mat() = default;
  Mat(Field f, size_t rows, size_t cols);

  static Mat identity(Field f, size_t n);
  static Mat from_ints(Field f, const std::vector<std::vector<int64_t>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  void set(size_t i, size_t j, const Scalar& v) { data_[i * cols_ + j] = field_.normalize(v); }
  void add_to(size_t i, size_t j, const Scalar& v) {
    auto& x = data_[i * cols_ + j];
    x = field_.add(x, v);
  }

  bool is_zero() const;
  Mat transpose() const;
  Mat column(size_t j) const;
  Mat columns(const std::vector<size_t>& idx) const;
  Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Mat& m);
  Mat scaled(const Scalar& s) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  Field field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Echelon {
  Mat reduced;                 // reduced row echelon form, zero rows removed
  std::vector<size_t> pivots;  // pivot column per row
};

Echelon rref(const Mat& m);
size_t rank(const Mat& m);
Mat kernel_basis(const Mat& m);
std::optional<Mat> solve(const Mat& a, const Mat& b);
size_t quotient_dim(const Mat& space, const Mat& subspace);
std::optional<Mat> inverse(const Mat& m);
// indices of a maximal independent subset of columns, greedy from the left
std::vector<size_t> independent_columns(const Mat& m);

// Fast elimination mod p on a dense word matrix (in place); returns rank.
size_t rank_mod_p(std::vector<uint32_t>& a, size_t rows, size_t cols, uint32_t p);

}  // namespace recolle
