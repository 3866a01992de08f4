#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jetinv/linalg.hpp"
#include "jetinv/multiindex.hpp"
#include "jetinv/scalar.hpp"

namespace jetinv {

/// Dense table of symmetric derivative coordinates: one row per component,
/// one column per canonical index of the underlying IndexSpace.
template <class T>
class JetTable {
 public:
  JetTable() = default;
  JetTable(int components, IndexSpace space)
      : components_(components), space_(std::move(space)),
        data_(static_cast<std::size_t>(components) * space_.size()) {}

  int components() const { return components_; }
  const IndexSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  int order() const { return space_.order(); }

  T& operator()(int c, std::size_t rank) { return data_[offset(c) + rank]; }
  const T& operator()(int c, std::size_t rank) const { return data_[offset(c) + rank]; }
  T& at(int c, const MultiIndex& index) { return (*this)(c, space_.rank(index)); }
  const T& at(int c, const MultiIndex& index) const { return (*this)(c, space_.rank(index)); }

  std::span<T> row(int c) { return {data_.data() + offset(c), space_.size()}; }
  std::span<const T> row(int c) const { return {data_.data() + offset(c), space_.size()}; }
  std::span<const T> values() const { return data_; }

  /// Copy restricted to indices of length <= order.
  JetTable truncated(int order) const;

  bool operator==(const JetTable& other) const {
    return components_ == other.components_ && space_ == other.space_ && data_ == other.data_;
  }

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * space_.size(); }

  int components_ = 0;
  IndexSpace space_;
  std::vector<T> data_;
};

template <class T>
bool approx_equal(const JetTable<T>& a, const JetTable<T>& b, const Tolerance& tol = {});

/// Coordinates y^A_I of an (r,n)-velocity in one chart: n source variables,
/// n + m target components, every |I| <= r including the base point.
template <class T>
class Velocity {
 public:
  Velocity() = default;
  Velocity(int n, int m, int r) : m_(m), coords_(n + m, IndexSpace(n, r)) {}
  Velocity(int m, JetTable<T> coords);

  int n() const { return coords_.dim(); }
  int m() const { return m_; }
  int r() const { return coords_.order(); }
  int target_dim() const { return coords_.components(); }

  T& operator()(int component, const MultiIndex& index) { return coords_.at(component, index); }
  const T& operator()(int component, const MultiIndex& index) const { return coords_.at(component, index); }
  T& operator()(int component, std::size_t rank) { return coords_(component, rank); }
  const T& operator()(int component, std::size_t rank) const { return coords_(component, rank); }

  const JetTable<T>& table() const { return coords_; }
  JetTable<T>& table() { return coords_; }
  const IndexSpace& space() const { return coords_.space(); }

  /// n x n block (y^{nu_k}_j) selected by the target components in `nu`.
  Matrix<T> block(std::span<const int> nu) const;
  /// (n+m) x n matrix of first derivatives y^A_j.
  Matrix<T> first_derivatives() const;

  bool operator==(const Velocity&) const = default;

 private:
  int m_ = 0;
  JetTable<T> coords_;
};

template <class T>
bool approx_equal(const Velocity<T>& a, const Velocity<T>& b, const Tolerance& tol = {});

/// Canonical coordinates a^j_I (1 <= |I| <= r) of an element of the
/// differential group of order r. Order-0 slots are present and always zero.
template <class T>
class GroupJet {
 public:
  GroupJet() = default;
  GroupJet(int n, int r) : coords_(n, IndexSpace(n, r)) {}
  explicit GroupJet(JetTable<T> coords);

  static GroupJet identity(int n, int r);
  /// Jet of t -> tau * t.
  static GroupJet scaling(int n, int r, const T& tau);
  /// Jet of the linear map with matrix `a` (a(j, i) = a^j_i); higher orders zero.
  static GroupJet linear(const Matrix<T>& a, int r);

  int n() const { return coords_.dim(); }
  int r() const { return coords_.order(); }

  T& operator()(int j, const MultiIndex& index) { return coords_.at(j, index); }
  const T& operator()(int j, const MultiIndex& index) const { return coords_.at(j, index); }

  const JetTable<T>& table() const { return coords_; }
  JetTable<T>& table() { return coords_; }

  /// The 1-jet block a^j_i as matrix (row j, column i).
  Matrix<T> linear_part() const;
  bool is_invertible(const Tolerance& tol = {}) const;

  bool operator==(const GroupJet&) const = default;

 private:
  JetTable<T> coords_;
};

template <class T>
bool approx_equal(const GroupJet<T>& a, const GroupJet<T>& b, const Tolerance& tol = {});

}  // namespace jetinv
