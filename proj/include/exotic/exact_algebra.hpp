#pragma once

// Exact univariate polynomials, rational functions and labeled matrices over Q.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exotic {

using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EXOTIC_ERROR(Name)                                   \
  struct Name : Error {                                      \
    explicit Name(const std::string& what) : Error(what) {} \
  }

EXOTIC_ERROR(DivisionByZero);
EXOTIC_ERROR(DimensionMismatch);
EXOTIC_ERROR(NotPolynomial);
EXOTIC_ERROR(SingularEvaluation);

/*
  Dense polynomial in the indeterminate t, coefficients indexed by degree.
  The coefficient vector never carries trailing zeros, so the zero
  polynomial is the empty vector and degree() == -1 for it.
*/
template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  Polynomial(int c) : c_{R(c)} { trim(); }
  Polynomial(const R& c) : c_{c} { trim(); }
  Polynomial(std::initializer_list<R> l) : c_(l) { trim(); }
  explicit Polynomial(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial t() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coefficients() const { return c_; }

  // coefficient of t^k; zero past the degree
  R operator[](std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& leading() const { return c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const R& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
  friend Polynomial operator*(const R& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // this += a*b, without a temporary for the product
  void add_product(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return;
    std::size_t need = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < need) c_.resize(need);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c_[i + j] += a.c_[i] * b.c_[j];
    }
    trim();
  }

  R evaluate(const R& x) const {
    R acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(t^k)
  Polynomial substitute_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> r((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial substitute_t_squared() const { return substitute_power(2); }
  Polynomial substitute_neg_t() const {
    Polynomial r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  // multiplication by t^k
  Polynomial shift_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> r(k, R(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }
  // t^-k p; throws when p is not divisible by t^k
  Polynomial shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, c_.size()); ++i)
      if (c_[i] != 0) throw NotPolynomial("t^-" + std::to_string(k) + " * p is not a polynomial");
    if (k >= c_.size()) return {};
    return Polynomial(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }
  // lowest degree with a nonzero coefficient (valuation); -1 for zero
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const R& x = c_[i];
      if (x == 0) continue;
      R a = x < 0 ? R(-x) : x;
      if (first) {
        if (x < 0) os << "-";
      } else {
        os << (x < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = (a == 1);
      if (!unit || i == 0) os << a;
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using ExactPoly = Polynomial<Rational>;

// Quotient and remainder over a field.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<R>{}, a};
  std::vector<R> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<R> quo(rem.size() - db);
  const R lead = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    R c = rem[k + db] / lead;
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * bc[j];
  }
  rem.resize(db);
  return {Polynomial<R>(std::move(quo)), Polynomial<R>(std::move(rem))};
}

// a / b when b divides a exactly; throws NotPolynomial otherwise.
template <class R>
Polynomial<R> exact_quotient(const Polynomial<R>& a, const Polynomial<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw NotPolynomial("(" + a.to_string() + ") / (" + b.to_string() + ") leaves a remainder");
  return q;
}

template <class R>
Polynomial<R> monic(const Polynomial<R>& p) {
  if (p.is_zero()) return p;
  return p * R(R(1) / p.leading());
}

// Monic greatest common divisor; gcd(0, 0) = 0.
template <class R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

template <class R>
Polynomial<R> lcm(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return monic(exact_quotient(a * b, gcd(a, b)));
}

// True when every coefficient is an integer.
inline bool has_integer_coefficients(const ExactPoly& p) {
  for (const auto& c : p.coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

inline bool has_nonnegative_integer_coefficients(const ExactPoly& p) {
  for (const auto& c : p.coefficients())
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

/*
  Quotient of polynomials in normal form: the denominator is monic, the
  numerator and denominator are coprime, and zero is 0/1. Two rational
  functions are equal iff their stored representations coincide.
*/
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(ExactPoly p) : num_(std::move(p)), den_(1) {}
  RatFunc(ExactPoly num, ExactPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const ExactPoly& numerator() const { return num_; }
  const ExactPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  ExactPoly to_polynomial() const {
    if (!is_polynomial())
      throw NotPolynomial("rational function " + to_string() + " is not a polynomial");
    return num_;
  }

  Rational evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) throw SingularEvaluation("denominator " + den_.to_string() + " vanishes at " + x.get_str());
    return num_.evaluate(x) / d;
  }

  RatFunc substitute_neg_t() const { return RatFunc(num_.substitute_neg_t(), den_.substitute_neg_t()); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, Normalized{}); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

 private:
  struct Normalized {};
  RatFunc(ExactPoly num, ExactPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = ExactPoly(1);
      return;
    }
    // exact division is the common case in the solver; skip the gcd then
    auto [q, r] = divmod(num_, den_);
    if (r.is_zero()) {
      num_ = std::move(q);
      den_ = ExactPoly(1);
      return;
    }
    ExactPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      Rational inv = Rational(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  ExactPoly num_;
  ExactPoly den_;
};

/*
  Rectangular matrix with labeled rows and columns. Labels must be unique
  within each index set.
*/
template <class Label, class Entry>
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  LabeledMatrix(std::vector<Label> rows, std::vector<Label> cols)
      : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size() * cols_.size()) {
    check_unique(rows_);
    check_unique(cols_);
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  const std::vector<Label>& rows() const { return rows_; }
  const std::vector<Label>& cols() const { return cols_; }

  Entry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_.size() + j]; }
  const Entry& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }

  std::size_t row_index(const Label& l) const { return index_of(rows_, l); }
  std::size_t col_index(const Label& l) const { return index_of(cols_, l); }

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_unique(const std::vector<Label>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j]) throw DimensionMismatch("duplicate matrix label");
  }
  static std::size_t index_of(const std::vector<Label>& v, const Label& l) {
    auto it = std::find(v.begin(), v.end(), l);
    if (it == v.end()) throw DimensionMismatch("unknown matrix label");
    return static_cast<std::size_t>(it - v.begin());
  }

  std::vector<Label> rows_;
  std::vector<Label> cols_;
  std::vector<Entry> data_;
};

template <class Label>
using PolyMatrix = LabeledMatrix<Label, RatFunc>;

// P * L * Pt with L diagonal; entries come back in normal form.
template <class Label>
PolyMatrix<Label> matrix_triple_product(const PolyMatrix<Label>& p, const PolyMatrix<Label>& l,
                                        const PolyMatrix<Label>& pt) {
  if (p.col_count() != l.row_count() || l.col_count() != pt.row_count())
    throw DimensionMismatch("triple product: inner dimensions differ");
  if (p.cols() != l.rows() || l.cols() != pt.rows())
    throw DimensionMismatch("triple product: inner labels differ");
  for (std::size_t i = 0; i < l.row_count(); ++i)
    for (std::size_t j = 0; j < l.col_count(); ++j)
      if (i != j && !l(i, j).is_zero()) throw DimensionMismatch("triple product: middle factor is not diagonal");
  PolyMatrix<Label> out(p.rows(), pt.cols());
  for (std::size_t i = 0; i < p.row_count(); ++i)
    for (std::size_t j = 0; j < pt.col_count(); ++j) {
      RatFunc acc;
      for (std::size_t k = 0; k < l.row_count(); ++k) {
        if (p(i, k).is_zero() || pt(k, j).is_zero() || l(k, k).is_zero()) continue;
        acc += p(i, k) * l(k, k) * pt(k, j);
      }
      out(i, j) = acc;
    }
  return out;
}

}  // namespace exotic
