#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "extcalc/errors.hpp"
#include "extcalc/metric.hpp"
#include "extcalc/multi_index.hpp"
#include "extcalc/tolerance.hpp"

namespace extcalc {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;

namespace detail {
template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
double abs2(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value)
    return std::norm(x);
  else
    return x * x;
}
}  // namespace detail

/// A degree-k alternating form on R^n with dense coefficients over the
/// lexicographic strictly increasing multi-indices. `Scalar` is double for
/// real forms and std::complex<double> for complexified ones.
template <typename Scalar>
class KForm {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  KForm() : KForm(0, 0) {}
  KForm(int dim, int grade) : dim_(dim), grade_(grade) {
    coeffs_ = Coeffs::Zero(index_table(dim, grade).size());
  }
  KForm(int dim, int grade, Coeffs coeffs) : dim_(dim), grade_(grade), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() == index_table(dim, grade).size(), "coefficient count must equal C(n, k)");
  }

  static KForm zero(int dim, int grade) { return KForm(dim, grade); }
  static KForm constant(int dim, Scalar value) {
    KForm f(dim, 0);
    f.coeffs_[0] = value;
    return f;
  }
  /// value * e^{i1} ^ ... ^ e^{ik} for 0-based indices in any order; repeated
  /// indices give the zero form.
  static KForm monomial(int dim, std::span<const int> indices, Scalar value = Scalar(1)) {
    const int k = static_cast<int>(indices.size());
    KForm f(dim, k);
    IndexMask m = 0;
    int sign = 1;
    for (int i : indices) {
      require(i >= 0 && i < dim, "monomial index out of range");
      const IndexMask bit = static_cast<IndexMask>(1u << i);
      if (m & bit) return f;
      sign *= wedge_sign(m, bit);
      m |= bit;
    }
    f.coeffs_[index_table(dim, k).position(m)] = Scalar(sign) * value;
    return f;
  }
  static KForm monomial(int dim, std::initializer_list<int> indices, Scalar value = Scalar(1)) {
    return monomial(dim, std::span<const int>(indices.begin(), indices.size()), value);
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int grade() const { return grade_; }
  [[nodiscard]] const Coeffs& coeffs() const { return coeffs_; }
  [[nodiscard]] Coeffs& coeffs() { return coeffs_; }
  [[nodiscard]] const IndexTable& table() const { return index_table(dim_, grade_); }

  [[nodiscard]] Scalar coefficient(IndexMask m) const {
    const int pos = table().position(m);
    return pos < 0 ? Scalar(0) : coeffs_[pos];
  }
  /// Coefficient of e^{i1..ik} (0-based, any order; sign-adjusted).
  [[nodiscard]] Scalar coefficient(std::initializer_list<int> indices) const {
    IndexMask m = 0;
    int sign = 1;
    for (int i : indices) {
      require(i >= 0 && i < dim_, "coefficient index out of range");
      const IndexMask bit = static_cast<IndexMask>(1u << i);
      if (m & bit) return Scalar(0);
      sign *= wedge_sign(m, bit);
      m |= bit;
    }
    if (static_cast<int>(indices.size()) != grade_) return Scalar(0);
    return Scalar(sign) * coefficient(m);
  }

  /// Euclidean coefficient norm (the form norm for the standard metric).
  [[nodiscard]] double coeff_norm() const { return coeffs_.norm(); }
  [[nodiscard]] double max_abs() const { return coeffs_.size() ? coeffs_.cwiseAbs().maxCoeff() : 0.0; }

  template <typename T>
  [[nodiscard]] KForm<T> cast() const {
    return KForm<T>(dim_, grade_, coeffs_.template cast<T>());
  }
  [[nodiscard]] KForm<double> real() const
    requires detail::is_complex<Scalar>::value
  {
    return KForm<double>(dim_, grade_, coeffs_.real());
  }
  [[nodiscard]] KForm<double> imag() const
    requires detail::is_complex<Scalar>::value
  {
    return KForm<double>(dim_, grade_, coeffs_.imag());
  }
  [[nodiscard]] KForm conjugate() const { return KForm(dim_, grade_, coeffs_.conjugate()); }

  KForm& operator+=(const KForm& o) {
    check_same(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    check_same(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  KForm& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend KForm operator*(Scalar s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, Scalar s) { return a *= s; }
  friend KForm operator/(KForm a, Scalar s) { return a *= Scalar(1) / s; }

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same(const KForm& o) const {
    require(dim_ == o.dim_ && grade_ == o.grade_, "forms must share dimension and grade");
  }

  int dim_;
  int grade_;
  Coeffs coeffs_;
};

using Form = KForm<double>;
using CForm = KForm<Complex>;

/// Basis monomial from a 1-based digit string: basis_form(7, "123") is e^{123}.
inline Form basis_form(int dim, std::string_view digits, double value = 1.0) {
  std::vector<int> idx;
  for (char c : digits) {
    require(c >= '1' && c <= '9', "basis digits must be 1..9");
    idx.push_back(c - '1');
  }
  return Form::monomial(dim, std::span<const int>(idx), value);
}

// ---------------------------------------------------------------------------
// Exterior products

/// a ^ b. Grades summing past n give the zero form of grade n.
template <typename Scalar>
KForm<Scalar> wedge(const KForm<Scalar>& a, const KForm<Scalar>& b) {
  require(a.dim() == b.dim(), "wedge: dimension mismatch");
  const int n = a.dim();
  if (a.grade() + b.grade() > n) return KForm<Scalar>(n, n);
  KForm<Scalar> out(n, a.grade() + b.grade());
  const auto& ta = a.table();
  const auto& tb = b.table();
  const auto& to = out.table();
  for (int i = 0; i < ta.size(); ++i) {
    const Scalar ai = a.coeffs()[i];
    if (ai == Scalar(0)) continue;
    const IndexMask mi = ta.mask(i);
    for (int j = 0; j < tb.size(); ++j) {
      const Scalar bj = b.coeffs()[j];
      if (bj == Scalar(0)) continue;
      const IndexMask mj = tb.mask(j);
      const int s = wedge_sign(mi, mj);
      if (s == 0) continue;
      out.coeffs()[to.position(mi | mj)] += Scalar(s) * ai * bj;
    }
  }
  return out;
}

template <typename Scalar, typename... Rest>
KForm<Scalar> wedge(const KForm<Scalar>& a, const KForm<Scalar>& b, const Rest&... rest) {
  return wedge(wedge(a, b), rest...);
}

/// a^p with a^0 = 1.
template <typename Scalar>
KForm<Scalar> wedge_power(const KForm<Scalar>& a, int p) {
  require(p >= 0, "wedge_power: negative exponent");
  KForm<Scalar> out = KForm<Scalar>::constant(a.dim(), Scalar(1));
  for (int i = 0; i < p; ++i) out = wedge(out, a);
  return out;
}

/// Interior product i(v)a; the interior product of a 0-form is 0 (grade 0).
template <typename Scalar>
KForm<Scalar> interior(const Vector& v, const KForm<Scalar>& a) {
  require(v.size() == a.dim(), "interior: dimension mismatch");
  if (a.grade() == 0) return KForm<Scalar>(a.dim(), 0);
  KForm<Scalar> out(a.dim(), a.grade() - 1);
  const auto& ta = a.table();
  const auto& to = out.table();
  for (int i = 0; i < ta.size(); ++i) {
    const Scalar ai = a.coeffs()[i];
    if (ai == Scalar(0)) continue;
    const IndexMask m = ta.mask(i);
    for (int j = 0; j < a.dim(); ++j) {
      if (!(m & (1u << j)) || v[j] == 0.0) continue;
      const double s = (bits_below(m, j) & 1) ? -1.0 : 1.0;
      out.coeffs()[to.position(static_cast<IndexMask>(m & ~(1u << j)))] += Scalar(s * v[j]) * ai;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Metric operations

/// g(v, .) as a 1-form.
inline Form flat(const Vector& v, const Metric& m) {
  require(v.size() == m.dim(), "flat: dimension mismatch");
  return Form(m.dim(), 1, m.gram() * v);
}

/// The vector a^# with g(a^#, w) = a(w).
inline Vector sharp(const Form& a, const Metric& m) {
  require(a.dim() == m.dim() && a.grade() == 1, "sharp: expects a 1-form of the metric's dimension");
  return m.inverse_gram() * a.coeffs();
}

/// The skew matrix A with A(i, j) = F(e_i, e_j).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> skew_matrix(const KForm<Scalar>& f) {
  require(f.grade() == 2, "skew_matrix: expects a 2-form");
  const int n = f.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  const auto& t = f.table();
  for (int p = 0; p < t.size(); ++p) {
    const auto idx = t.indices(p);
    a(idx[0], idx[1]) = f.coeffs()[p];
    a(idx[1], idx[0]) = -f.coeffs()[p];
  }
  return a;
}

/// Inverse of skew_matrix; only the strict upper triangle is read.
inline Form two_form_from_matrix(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  Form f(n, 2);
  const auto& t = f.table();
  for (int p = 0; p < t.size(); ++p) {
    const auto idx = t.indices(p);
    f.coeffs()[p] = a(idx[0], idx[1]);
  }
  return f;
}

/// F^# in End(V), defined by g(F^# u, v) = F(u, v). With the Euclidean
/// metric and F = e^{12} this sends e_1 to e_2 and e_2 to -e_1.
inline LinearMap sharp2(const Form& f, const Metric& m) {
  require(f.dim() == m.dim() && f.grade() == 2, "sharp2: expects a 2-form of the metric's dimension");
  return {m.inverse_gram() * skew_matrix(f).transpose()};
}

/// Pullback (L^* a)(v_1, ..) = a(L v_1, ..). Coefficients transform by the
/// transposed k-th compound matrix of L.
template <typename Scalar>
KForm<Scalar> pullback(const LinearMap& l, const KForm<Scalar>& a) {
  require(l.target_dim() == a.dim(), "pullback: map target must match the form's dimension");
  require(a.grade() <= l.source_dim(), "pullback: grade exceeds source dimension");
  const Eigen::MatrixXd c = compound_matrix(l.matrix, a.grade());
  return KForm<Scalar>(l.source_dim(), a.grade(), c.transpose().template cast<Scalar>() * a.coeffs());
}

/// Induced inner product <a, b>; conjugate-linear in `a` for complex forms.
template <typename Scalar>
Scalar inner(const KForm<Scalar>& a, const KForm<Scalar>& b, const Metric& m) {
  require(a.dim() == b.dim() && a.grade() == b.grade(), "inner: forms must share dimension and grade");
  require(a.dim() == m.dim(), "inner: metric dimension mismatch");
  if (m.is_euclidean()) return a.coeffs().dot(b.coeffs());
  return a.coeffs().dot(m.form_gram(a.grade()).template cast<Scalar>() * b.coeffs());
}

template <typename Scalar>
double norm(const KForm<Scalar>& a, const Metric& m) {
  return std::sqrt(std::max(0.0, std::real(inner(a, a, m))));
}

/// Hodge star, characterised by a ^ *b = <a, b> vol with
/// vol = orientation * sqrt(det g) e^{1..n}.
template <typename Scalar>
KForm<Scalar> hodge(const KForm<Scalar>& a, const Metric& m) {
  require(a.dim() == m.dim(), "hodge: metric dimension mismatch");
  const int n = a.dim();
  const int k = a.grade();
  const IndexMask full = static_cast<IndexMask>((1u << n) - 1u);
  typename KForm<Scalar>::Coeffs lowered =
      m.is_euclidean() ? a.coeffs() : typename KForm<Scalar>::Coeffs(m.form_gram(k).template cast<Scalar>() * a.coeffs());
  const double factor = m.orientation() * m.volume_factor();
  KForm<Scalar> out(n, n - k);
  const auto& ta = a.table();
  const auto& to = out.table();
  for (int i = 0; i < ta.size(); ++i) {
    const IndexMask mi = ta.mask(i);
    const IndexMask mc = static_cast<IndexMask>(full & ~mi);
    out.coeffs()[to.position(mc)] = Scalar(factor * wedge_sign(mi, mc)) * lowered[i];
  }
  return out;
}

/// The metric volume form.
inline Form volume_form(const Metric& m) {
  return hodge(Form::constant(m.dim(), 1.0), m);
}

/// Coefficient of a top-degree form against e^{1..n}.
template <typename Scalar>
Scalar top_coefficient(const KForm<Scalar>& a) {
  require(a.grade() == a.dim(), "top_coefficient: expects a top-degree form");
  return a.coeffs()[0];
}

/// Relative residuals of the four standard Hodge identities for a, b of
/// grade k and a vector v:
///   [0] **a = (-1)^{k(n-k)} a
///   [1] <*a, *b> = <a, b>
///   [2] i(v)*a = (-1)^k *(v^b ^ a)
///   [3] *(i(v)a) = (-1)^{k+1} v^b ^ *a
inline std::array<double, 4> hodge_identity_residuals(const Form& a, const Form& b, const Vector& v, const Metric& m,
                                                      const Tolerance& tol = kDefaultTolerance) {
  require(a.dim() == b.dim() && a.grade() == b.grade(), "hodge identities: a and b must share dimension and grade");
  const int n = a.dim();
  const int k = a.grade();
  auto gap = [&](const Form& x, const Form& y) {
    return tol.relative(norm(Form(x - y), m), std::max(norm(x, m), norm(y, m)));
  };
  const Form vb = flat(v, m);
  const Form star_a = hodge(a, m);
  std::array<double, 4> r{};
  r[0] = gap(hodge(star_a, m), ((k * (n - k)) % 2 ? -1.0 : 1.0) * a);
  const double lhs = inner(star_a, hodge(b, m), m);
  const double rhs = inner(a, b, m);
  r[1] = tol.relative(std::abs(lhs - rhs), std::max({std::abs(lhs), std::abs(rhs), norm(a, m) * norm(b, m)}));
  r[2] = gap(interior(v, star_a), (k % 2 ? -1.0 : 1.0) * hodge(wedge(vb, a), m));
  r[3] = gap(hodge(interior(v, a), m), (k % 2 ? 1.0 : -1.0) * wedge(vb, star_a));
  return r;
}

}  // namespace extcalc
