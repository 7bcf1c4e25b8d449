#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "cleantables/analytics.h"
#include "cleantables/error.h"
#include "cleantables/strings.h"

namespace cleantables {

DenseMatrix ToDense(const TermMatrix &m) {
  return {m.rows(), m.cols(), m.Dense()};
}

PcaTable TidyPca(const DenseMatrix &m, const Frame &meta, size_t k) {
  if (m.values.size() != m.rows * m.cols) {
    throw Error(ErrorCode::kDimMismatch, "matrix values do not match its shape");
  }
  if (meta.cols() > 0 && meta.rows() != m.rows) {
    throw Error(ErrorCode::kDimMismatch,
                "meta has " + std::to_string(meta.rows()) + " rows, matrix has " +
                    std::to_string(m.rows));
  }
  if (k < 1) throw Error(ErrorCode::kBadRange, "k must be positive");
  if (k > std::min(m.rows, m.cols)) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " exceeds min(rows, cols) = " +
                    std::to_string(std::min(m.rows, m.cols)));
  }

  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::MatrixXd x = Eigen::Map<const RowMajor>(
      m.values.data(), static_cast<Eigen::Index>(m.rows),
      static_cast<Eigen::Index>(m.cols));
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinV);
  const Eigen::MatrixXd &v = svd.matrixV();

  PcaTable out;
  out.meta = meta;
  for (size_t j = 0; j < k; ++j) {
    Eigen::VectorXd dir = v.col(static_cast<Eigen::Index>(j));
    Eigen::Index arg = 0;
    dir.cwiseAbs().maxCoeff(&arg);
    if (dir(arg) < 0) dir = -dir;
    const Eigen::VectorXd scores = x * dir;
    out.scores.emplace_back(scores.data(), scores.data() + scores.size());
    out.singular_values.push_back(svd.singularValues()(static_cast<Eigen::Index>(j)));
  }
  return out;
}

PcaTable TidyPca(const TermMatrix &m, const Frame &meta, size_t k) {
  return TidyPca(ToDense(m), meta, k);
}

Frame PcaTable::ToFrame() const {
  Frame f = meta;
  for (size_t j = 0; j < scores.size(); ++j) {
    std::vector<Cell> col;
    col.reserve(scores[j].size());
    for (double s : scores[j]) col.push_back(FormatDouble(s));
    f.Add("PC" + std::to_string(j + 1), std::move(col));
  }
  return f;
}

}  // namespace cleantables
