#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

namespace extcalc {

/// k-th compound matrix: entry (I, J) is the minor det(A[I, J]) over the
/// lexicographic grade-k index tables of the row and column spaces.
Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& a, int grade);

/// A linear map between coordinate spaces, acting on column vectors.
/// Square in almost every use; rectangular maps pull forms back along
/// coordinate inclusions and projections.
struct LinearMap {
  Eigen::MatrixXd matrix;

  static LinearMap identity(int dim) { return {Eigen::MatrixXd::Identity(dim, dim)}; }
  [[nodiscard]] int source_dim() const { return static_cast<int>(matrix.cols()); }
  [[nodiscard]] int target_dim() const { return static_cast<int>(matrix.rows()); }
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return {a.matrix * b.matrix}; }
};

/// Oriented scalar product on R^n given by its Gram matrix in the standard
/// basis. Immutable; the per-grade Gram matrices of the induced inner
/// product on forms are computed once at construction.
class Metric {
 public:
  /// Throws ContractViolation unless `gram` is symmetric positive definite.
  explicit Metric(Eigen::MatrixXd gram, int orientation = +1);
  static Metric euclidean(int dim, int orientation = +1);

  [[nodiscard]] int dim() const { return static_cast<int>(gram_.rows()); }
  [[nodiscard]] const Eigen::MatrixXd& gram() const { return gram_; }
  [[nodiscard]] const Eigen::MatrixXd& inverse_gram() const { return cache_->inverse; }
  [[nodiscard]] int orientation() const { return orientation_; }
  [[nodiscard]] bool is_euclidean() const { return cache_->euclidean; }
  /// sqrt(det gram): vol = orientation * sqrt(det g) e^{1..n}.
  [[nodiscard]] double volume_factor() const { return cache_->volume_factor; }
  /// Gram matrix of the induced inner product on grade-k forms.
  [[nodiscard]] const Eigen::MatrixXd& form_gram(int grade) const { return cache_->form_gram[grade]; }

 private:
  struct Cache {
    Eigen::MatrixXd inverse;
    std::vector<Eigen::MatrixXd> form_gram;
    double volume_factor = 1.0;
    bool euclidean = false;
  };

  Eigen::MatrixXd gram_;
  int orientation_;
  std::shared_ptr<const Cache> cache_;
};

}  // namespace extcalc
