#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "relcx/complex.hpp"

namespace relcx {

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves as a plain value inside Eigen kernels.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<BigInt>;

/**
 * Simplicial boundary operators of `complex`. Entry n-1 of the result is
 * ∂_n : C_n → C_{n-1} for n = 1..dim, with rows and columns in the canonical
 * face order of each dimension and sign (-1)^i for dropping the i-th vertex.
 */
template <typename Scalar = BigInt>
std::vector<DenseMatrix<Scalar>> boundary_matrices(const SimplicialComplex& complex) {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(complex.dimension() + 1));
  for (const Simplex& s : complex.faces()) by_dim[static_cast<std::size_t>(s.dimension())].push_back(s);

  std::vector<DenseMatrix<Scalar>> out;
  for (std::size_t n = 1; n < by_dim.size(); ++n) {
    const auto& rows = by_dim[n - 1];
    const auto& cols = by_dim[n];
    DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows.size()),
                                                      static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        auto row = std::lower_bound(rows.begin(), rows.end(), cols[j].without_position(i));
        d(row - rows.begin(), static_cast<Eigen::Index>(j)) = Scalar(i % 2 == 0 ? 1 : -1);
      }
    out.push_back(std::move(d));
  }
  return out;
}

/**
 * Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all positive,
 * r = rank. Works on its own copy of the input.
 *
 * Pivoting always moves the entry of smallest absolute value into place, so
 * the reduction terminates and intermediate entries stay small.
 */
template <typename Scalar>
std::vector<Scalar> smith_normal_form(DenseMatrix<Scalar> a) {
  using std::abs;
  const Scalar zero(0);
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Scalar> diagonal;

  auto smallest_in = [&](Eigen::Index r0, Eigen::Index c0, Eigen::Index r1, Eigen::Index c1,
                         Eigen::Index& pr, Eigen::Index& pc) {
    bool found = false;
    Scalar best(0);
    for (Eigen::Index j = c0; j < c1; ++j)
      for (Eigen::Index i = r0; i < r1; ++i) {
        if (a(i, j) == zero) continue;
        Scalar v = abs(a(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pr = i;
          pc = j;
        }
      }
    return found;
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    Eigen::Index pr = 0;
    Eigen::Index pc = 0;
    if (!smallest_in(t, t, rows, cols, pr, pc)) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));

    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == zero) continue;
        const Scalar q = a(i, t) / a(t, t);
        a.row(i).tail(cols - t) -= q * a.row(t).tail(cols - t);
        if (a(i, t) != zero) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == zero) continue;
        const Scalar q = a(t, j) / a(t, t);
        a.col(j).tail(rows - t) -= q * a.col(t).tail(rows - t);
        if (a(t, j) != zero) clean = false;
      }
      if (!clean) {
        // A remainder survived: bring the smallest entry of row/column t to the pivot.
        Eigen::Index r = t;
        Eigen::Index c = t;
        Scalar best = abs(a(t, t));
        for (Eigen::Index i = t + 1; i < rows; ++i)
          if (a(i, t) != zero && abs(a(i, t)) < best) best = abs(a(i, t)), r = i, c = t;
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(t, j) != zero && abs(a(t, j)) < best) best = abs(a(t, j)), r = t, c = j;
        a.row(t).swap(a.row(r));
        a.col(t).swap(a.col(c));
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remaining block.
      Eigen::Index bad = -1;
      for (Eigen::Index j = t + 1; j < cols && bad < 0; ++j)
        for (Eigen::Index i = t + 1; i < rows; ++i)
          if (a(i, j) % a(t, t) != zero) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(t).tail(cols - t) += a.row(bad).tail(cols - t);
    }
    diagonal.push_back(abs(a(t, t)));
  }
  return diagonal;
}

/**
 * Integer homology, indexed by dimension 0..dim. Torsion lists the invariant
 * factors greater than one, in divisibility order.
 */
struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::vector<BigInt>> torsion;

  /// Drops trailing dimensions with zero rank and no torsion.
  HomologyProfile trimmed() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology(const SimplicialComplex& complex);

/// Profiles agree in every dimension. A homology-level check only.
bool same_homology(const SimplicialComplex& a, const SimplicialComplex& b);

/// Σ (-1)^n betti_n
long long euler_characteristic(const HomologyProfile& profile);

}  // namespace relcx
