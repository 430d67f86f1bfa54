#include "dpssband/sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "dpssband/kernels.hpp"
#include "dpssband/rng.hpp"

namespace dpssband {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::dense_gaussian: return "gaussian";
    case OperatorKind::dense_rademacher: return "rademacher";
    case OperatorKind::random_demodulator: return "demodulator";
    case OperatorKind::random_sampler: return "sampler";
  }
  throw std::invalid_argument("unknown-operator-kind");
}

OperatorKind operator_kind_from_string(const std::string& name) {
  if (name == "gaussian") return OperatorKind::dense_gaussian;
  if (name == "rademacher") return OperatorKind::dense_rademacher;
  if (name == "demodulator") return OperatorKind::random_demodulator;
  if (name == "sampler") return OperatorKind::random_sampler;
  throw std::invalid_argument("unknown-operator-kind: " + name);
}

MeasurementOperator make_operator(OperatorKind kind, int m, int n,
                                  std::uint64_t seed) {
  if (m < 1 || n < 1 || m > n)
    throw std::invalid_argument(
        "parameter-out-of-range: require 1 <= M <= N");
  MeasurementOperator op;
  op.kind = kind;
  op.m = m;
  op.n = n;
  op.seed = seed;
  Rng rng(seed);
  switch (kind) {
    case OperatorKind::dense_gaussian: {
      double sigma = 1.0 / std::sqrt(static_cast<double>(m));
      op.dense.resize(m, n);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < m; ++r) op.dense(r, c) = sigma * rng.gaussian();
      break;
    }
    case OperatorKind::dense_rademacher: {
      double mag = 1.0 / std::sqrt(static_cast<double>(m));
      op.dense.resize(m, n);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < m; ++r)
          op.dense(r, c) = (rng.next_u64() >> 63) ? mag : -mag;
      break;
    }
    case OperatorKind::random_demodulator: {
      if (n % m != 0)
        throw std::invalid_argument("parameter-out-of-range: demodulator "
                                    "requires M to divide N");
      op.chips.resize(n);
      for (int i = 0; i < n; ++i)
        op.chips[i] = (rng.next_u64() >> 63) ? 1.0 : -1.0;
      break;
    }
    case OperatorKind::random_sampler: {
      op.sample_indices = rng.distinct(n, m);
      op.scale = std::sqrt(static_cast<double>(n) / m);
      break;
    }
  }
  return op;
}

Eigen::VectorXcd op_apply(const MeasurementOperator& op,
                          const Eigen::VectorXcd& x) {
  if (x.size() != op.n) throw std::invalid_argument("dimension-mismatch");
  switch (op.kind) {
    case OperatorKind::dense_gaussian:
    case OperatorKind::dense_rademacher:
      return op.dense * x;
    case OperatorKind::random_demodulator: {
      int block = op.n / op.m;
      Eigen::VectorXcd y = Eigen::VectorXcd::Zero(op.m);
      for (int i = 0; i < op.n; ++i) y[i / block] += op.chips[i] * x[i];
      return y;
    }
    case OperatorKind::random_sampler: {
      Eigen::VectorXcd y(op.m);
      for (int r = 0; r < op.m; ++r)
        y[r] = op.scale * x[op.sample_indices[r]];
      return y;
    }
  }
  throw std::invalid_argument("unknown-operator-kind");
}

Eigen::VectorXcd op_adjoint(const MeasurementOperator& op,
                            const Eigen::VectorXcd& y) {
  if (y.size() != op.m) throw std::invalid_argument("dimension-mismatch");
  switch (op.kind) {
    case OperatorKind::dense_gaussian:
    case OperatorKind::dense_rademacher:
      return op.dense.transpose() * y;
    case OperatorKind::random_demodulator: {
      int block = op.n / op.m;
      Eigen::VectorXcd x(op.n);
      for (int i = 0; i < op.n; ++i) x[i] = op.chips[i] * y[i / block];
      return x;
    }
    case OperatorKind::random_sampler: {
      Eigen::VectorXcd x = Eigen::VectorXcd::Zero(op.n);
      for (int r = 0; r < op.m; ++r)
        x[op.sample_indices[r]] = op.scale * y[r];
      return x;
    }
  }
  throw std::invalid_argument("unknown-operator-kind");
}

Eigen::MatrixXd op_dense(const MeasurementOperator& op) {
  switch (op.kind) {
    case OperatorKind::dense_gaussian:
    case OperatorKind::dense_rademacher:
      return op.dense;
    case OperatorKind::random_demodulator: {
      int block = op.n / op.m;
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(op.m, op.n);
      for (int i = 0; i < op.n; ++i) a(i / block, i) = op.chips[i];
      return a;
    }
    case OperatorKind::random_sampler: {
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(op.m, op.n);
      for (int r = 0; r < op.m; ++r) a(r, op.sample_indices[r]) = op.scale;
      return a;
    }
  }
  throw std::invalid_argument("unknown-operator-kind");
}

double concentration_probe(OperatorKind kind, int m, int n,
                           const Eigen::VectorXcd& x, int trials, double eta,
                           std::uint64_t seed) {
  if (trials < 1 || !(eta > 0.0))
    throw std::invalid_argument("parameter-out-of-range");
  int failures = kernels::probe_failures(kind, m, n, x, trials, eta, seed);
  return static_cast<double>(failures) / trials;
}

}  // namespace dpssband
