#pragma once

// Dense complex polynomials in ascending coefficient order, built from zero
// configurations. Everything here is templated on the real scalar type; the
// rest of the library instantiates it with double.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "glx/error.hpp"

namespace glx {

template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CVectorXd = CVector<double>;

inline constexpr int kMaxDegree = 64;
inline constexpr double kMinZeroSeparation = 1e-12;
inline constexpr double kCoefficientThreshold = 1e-12;

template <typename Scalar>
bool is_finite(const std::complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Scalar>
struct ZeroEntry {
  std::complex<Scalar> location;
  int multiplicity = 1;
};

/// Distinct zeros with multiplicities. Validated on construction: finite
/// locations, positive multiplicities, pairwise separation above
/// kMinZeroSeparation and total degree in [2, kMaxDegree].
template <typename Scalar>
class ZeroConfiguration {
 public:
  using Entry = ZeroEntry<Scalar>;

  explicit ZeroConfiguration(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::InvalidInput, "configuration has no zeros");
    long total = 0;
    for (const auto& e : entries_) {
      if (!is_finite(e.location)) throw Error(ErrorCode::InvalidInput, "zero location is not finite");
      if (e.multiplicity < 1) throw Error(ErrorCode::InvalidInput, "multiplicity must be positive");
      total += e.multiplicity;
      if (total > kMaxDegree) {
        throw Error(ErrorCode::InvalidInput,
                    "total degree exceeds cap of " + std::to_string(kMaxDegree));
      }
    }
    if (total < 2) throw Error(ErrorCode::InvalidInput, "total degree must be at least 2");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      for (std::size_t j = i + 1; j < entries_.size(); ++j) {
        if (std::abs(entries_[i].location - entries_[j].location) <= Scalar(kMinZeroSeparation)) {
          throw Error(ErrorCode::InvalidInput, "zeros " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " are not distinct");
        }
      }
    }
    degree_ = static_cast<int>(total);
  }

  /// Convenience for all-simple configurations.
  static ZeroConfiguration simple(const std::vector<std::complex<Scalar>>& zeros) {
    std::vector<Entry> entries;
    entries.reserve(zeros.size());
    for (const auto& z : zeros) entries.push_back({z, 1});
    return ZeroConfiguration(std::move(entries));
  }

  std::size_t size() const { return entries_.size(); }
  int degree() const { return degree_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }

  CVector<Scalar> locations() const {
    CVector<Scalar> out(static_cast<Eigen::Index>(entries_.size()));
    for (std::size_t i = 0; i < entries_.size(); ++i) out(static_cast<Eigen::Index>(i)) = entries_[i].location;
    return out;
  }

  bool all_simple() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.multiplicity == 1; });
  }

  /// z -> scale * z + shift applied to every location.
  ZeroConfiguration transformed(std::complex<Scalar> scale, std::complex<Scalar> shift) const {
    std::vector<Entry> out = entries_;
    for (auto& e : out) e.location = scale * e.location + shift;
    return ZeroConfiguration(std::move(out));
  }

 private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

template <typename Scalar>
struct Evaluation {
  std::complex<Scalar> value;
  Scalar condition;  // sum |c_i| |z|^i
};

/// Dense polynomial, coefficients in ascending degree order. Exact-zero
/// leading coefficients are trimmed so degree() is the true degree.
template <typename Scalar>
class Polynomial {
 public:
  using Coefficients = CVector<Scalar>;

  Polynomial() : coeffs_(Coefficients::Zero(1)) {}

  explicit Polynomial(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) coeffs_ = Coefficients::Zero(1);
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
      if (!is_finite(coeffs_(i))) throw Error(ErrorCode::InvalidInput, "coefficient is not finite");
    }
    Eigen::Index n = coeffs_.size();
    while (n > 1 && coeffs_(n - 1) == std::complex<Scalar>(0)) --n;
    coeffs_.conservativeResize(n);
  }

  Polynomial(std::initializer_list<std::complex<Scalar>> coeffs)
      : Polynomial(Coefficients(Eigen::Map<const Coefficients>(
            coeffs.begin(), static_cast<Eigen::Index>(coeffs.size())))) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coefficients& coeffs() const { return coeffs_; }
  std::complex<Scalar> operator[](int i) const { return coeffs_(i); }
  std::complex<Scalar> leading() const { return coeffs_(coeffs_.size() - 1); }
  bool is_monic() const { return leading() == std::complex<Scalar>(1); }
  bool is_zero() const { return degree() == 0 && coeffs_(0) == std::complex<Scalar>(0); }

  Polynomial normalized() const {
    if (is_zero()) throw Error(ErrorCode::InvalidInput, "cannot normalize the zero polynomial");
    Coefficients c = coeffs_ / leading();
    c(c.size() - 1) = std::complex<Scalar>(1);
    return Polynomial(std::move(c));
  }

  std::complex<Scalar> operator()(std::complex<Scalar> z) const {
    std::complex<Scalar> acc = coeffs_(coeffs_.size() - 1);
    for (Eigen::Index i = coeffs_.size() - 2; i >= 0; --i) acc = acc * z + coeffs_(i);
    return acc;
  }

  Evaluation<Scalar> eval_with_condition(std::complex<Scalar> z) const {
    const Scalar r = std::abs(z);
    std::complex<Scalar> acc = coeffs_(coeffs_.size() - 1);
    Scalar cond = std::abs(acc);
    for (Eigen::Index i = coeffs_.size() - 2; i >= 0; --i) {
      acc = acc * z + coeffs_(i);
      cond = cond * r + std::abs(coeffs_(i));
    }
    return {acc, cond};
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const Eigen::Index n = std::max(a.coeffs_.size(), b.coeffs_.size());
    Coefficients c = Coefficients::Zero(n);
    c.head(a.coeffs_.size()) += a.coeffs_;
    c.head(b.coeffs_.size()) += b.coeffs_;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  Coefficients coeffs_;
};

using PolynomialXd = Polynomial<double>;
using ZeroConfigurationXd = ZeroConfiguration<double>;

/// Expands prod (z - z_i)^{k_i} by repeated multiplication with linear factors.
template <typename Scalar>
Polynomial<Scalar> from_roots(const ZeroConfiguration<Scalar>& config) {
  using C = std::complex<Scalar>;
  CVector<Scalar> c = CVector<Scalar>::Zero(config.degree() + 1);
  c(0) = C(1);
  Eigen::Index deg = 0;
  for (const auto& e : config.entries()) {
    for (int k = 0; k < e.multiplicity; ++k) {
      // c <- (z - root) * c
      c(deg + 1) = c(deg);
      for (Eigen::Index i = deg; i >= 1; --i) c(i) = c(i - 1) - e.location * c(i);
      c(0) = -e.location * c(0);
      ++deg;
    }
  }
  c(deg) = C(1);
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() == 0) return Polynomial<Scalar>();
  CVector<Scalar> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c(i - 1) = Scalar(i) * p[i];
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Evaluation<Scalar> eval_with_condition(const Polynomial<Scalar>& p, std::complex<Scalar> z) {
  return p.eval_with_condition(z);
}

template <typename Scalar>
struct LowestCoefficient {
  int order;
  std::complex<Scalar> value;
};

/// Smallest index m with |c_m| > tau * max |c_i|.
template <typename Scalar>
LowestCoefficient<Scalar> lowest_nonvanishing_coefficient(const Polynomial<Scalar>& p,
                                                          Scalar tau = Scalar(kCoefficientThreshold)) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial is identically zero");
  const Scalar cutoff = tau * p.coeffs().cwiseAbs().maxCoeff();
  for (int i = 0; i <= p.degree(); ++i) {
    if (std::abs(p[i]) > cutoff) return {i, p[i]};
  }
  return {p.degree(), p.leading()};
}

/// Synthetic division by (z - root); the remainder is discarded.
template <typename Scalar>
Polynomial<Scalar> deflate(const Polynomial<Scalar>& p, std::complex<Scalar> root) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "cannot deflate a constant");
  const int n = p.degree();
  CVector<Scalar> q(n);
  q(n - 1) = p[n];
  for (int i = n - 1; i >= 1; --i) q(i - 1) = p[i] + root * q(i);
  return Polynomial<Scalar>(std::move(q));
}

}  // namespace glx
