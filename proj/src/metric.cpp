#include "extcalc/metric.hpp"

#include <cmath>

#include "extcalc/errors.hpp"
#include "extcalc/multi_index.hpp"

namespace extcalc {
namespace {

double minor_det(const Eigen::MatrixXd& a, std::span<const int> rows, std::span<const int> cols) {
  const auto k = rows.size();
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return a(rows[0], cols[0]);
    case 2:
      return a(rows[0], cols[0]) * a(rows[1], cols[1]) - a(rows[0], cols[1]) * a(rows[1], cols[0]);
    case 3: {
      Eigen::Matrix3d m;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = a(rows[i], cols[j]);
      return m.determinant();
    }
    case 4: {
      Eigen::Matrix4d m;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a(rows[i], cols[j]);
      return m.determinant();
    }
    default: {
      Eigen::MatrixXd m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      return m.determinant();
    }
  }
}

}  // namespace

Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& a, int grade) {
  const auto& rt = index_table(static_cast<int>(a.rows()), grade);
  const auto& ct = index_table(static_cast<int>(a.cols()), grade);
  std::vector<std::vector<int>> rows(rt.size()), cols(ct.size());
  for (int i = 0; i < rt.size(); ++i) rows[i] = rt.indices(i);
  for (int j = 0; j < ct.size(); ++j) cols[j] = ct.indices(j);
  Eigen::MatrixXd out(rt.size(), ct.size());
  for (int i = 0; i < rt.size(); ++i)
    for (int j = 0; j < ct.size(); ++j) out(i, j) = minor_det(a, rows[i], cols[j]);
  return out;
}

Metric::Metric(Eigen::MatrixXd gram, int orientation) : gram_(std::move(gram)), orientation_(orientation) {
  require(gram_.rows() == gram_.cols(), "metric Gram matrix must be square");
  require(gram_.rows() <= kMaxDim, "metric dimension must be at most 8");
  require(orientation == 1 || orientation == -1, "orientation must be +1 or -1");
  const double scale = std::max(1.0, gram_.cwiseAbs().maxCoeff());
  require((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale, "metric Gram matrix must be symmetric");
  gram_ = 0.5 * (gram_ + gram_.transpose());

  Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  require(llt.info() == Eigen::Success, "metric Gram matrix must be positive definite");

  auto cache = std::make_shared<Cache>();
  const int n = dim();
  cache->euclidean = (gram_.array() == Eigen::MatrixXd::Identity(n, n).array()).all();
  cache->inverse = llt.solve(Eigen::MatrixXd::Identity(n, n));
  cache->volume_factor = llt.matrixL().toDenseMatrix().diagonal().prod();
  cache->form_gram.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (cache->euclidean) {
      const int m = binomial(n, k);
      cache->form_gram.push_back(Eigen::MatrixXd::Identity(m, m));
    } else {
      cache->form_gram.push_back(compound_matrix(cache->inverse, k));
    }
  }
  cache_ = std::move(cache);
}

Metric Metric::euclidean(int dim, int orientation) {
  return Metric(Eigen::MatrixXd::Identity(dim, dim), orientation);
}

}  // namespace extcalc
