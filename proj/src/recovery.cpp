#include "dpssband/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dpssband/linalg.hpp"
#include "dpssband/rng.hpp"

namespace dpssband {

namespace {

std::vector<int> top_indices(const Eigen::VectorXcd& v, int s) {
  int n = static_cast<int>(v.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto better = [&](int a, int b) {
    double ma = std::norm(v[a]);
    double mb = std::norm(v[b]);
    if (ma != mb) return ma > mb;
    return a < b;  // ties: lowest index wins
  };
  if (s < n) std::partial_sort(idx.begin(), idx.begin() + s, idx.end(), better);
  idx.resize(std::min(s, n));
  return idx;
}

/// Block indices ranked by coefficient energy (lowest index on ties).
std::vector<int> top_blocks(const Eigen::VectorXcd& coeffs, int k_per_block,
                            int count) {
  int j = static_cast<int>(coeffs.size()) / k_per_block;
  std::vector<double> energy(j);
  for (int b = 0; b < j; ++b)
    energy[b] = coeffs.segment(b * k_per_block, k_per_block).squaredNorm();
  std::vector<int> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  auto better = [&](int a, int b) {
    if (energy[a] != energy[b]) return energy[a] > energy[b];
    return a < b;
  };
  count = std::min(count, j);
  std::partial_sort(idx.begin(), idx.begin() + count, idx.end(), better);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<int> merge_sorted(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

/// Tracks the best iterate and applies the shared stopping rule.
struct IterationTracker {
  const RecoverySettings& settings;
  RecoveryReport& report;
  double best_residual = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd best_x;
  Eigen::VectorXcd best_coeffs;
  std::vector<int> best_support;

  IterationTracker(const RecoverySettings& s, RecoveryReport& r)
      : settings(s), report(r) {}

  /// Returns true when iteration should stop.
  bool record(double rel, const Eigen::VectorXcd& x,
              const Eigen::VectorXcd& coeffs, const std::vector<int>& supp) {
    report.residual_history.push_back(rel);
    ++report.iterations;
    if (rel < best_residual) {
      best_residual = rel;
      best_x = x;
      best_coeffs = coeffs;
      best_support = supp;
    }
    if (rel < settings.residual_tol) return true;
    std::size_t h = report.residual_history.size();
    if (h >= 2) {
      double prev = report.residual_history[h - 2];
      if (settings.halt_on_residual_increase && rel > prev) return true;
      if (std::abs(prev - rel) < 1e-8) return true;
    }
    return report.iterations >= settings.max_iterations;
  }

  void finalize() {
    report.estimate_x = std::move(best_x);
    report.estimate_coeffs = std::move(best_coeffs);
    report.support = std::move(best_support);
    report.converged = best_residual < settings.residual_tol;
  }
};

RecoveryReport zero_report(int n, int d) {
  RecoveryReport rep;
  rep.estimate_x = Eigen::VectorXcd::Zero(n);
  if (d > 0) rep.estimate_coeffs = Eigen::VectorXcd::Zero(d);
  rep.iterations = 1;
  rep.residual_history = {0.0};
  rep.converged = true;
  return rep;
}

/// Smallest singular value of A via two power iterations on A A^H: one for
/// the top eigenvalue, one for the top eigenvalue of the shifted complement.
double sigma_min_estimate(const MeasurementOperator& a) {
  Rng rng(Rng::finalize(a.seed ^ 0x51517EEDull));
  auto gram_apply = [&](const Eigen::VectorXcd& v) {
    return op_apply(a, op_adjoint(a, v));
  };
  Eigen::VectorXcd v(a.m);
  for (int i = 0; i < a.m; ++i) v[i] = rng.cgaussian();
  v.normalize();
  double lam_max = 0.0;
  for (int it = 0; it < 20; ++it) {
    Eigen::VectorXcd w = gram_apply(v);
    lam_max = w.norm();
    if (lam_max == 0.0) return 0.0;
    v = w / lam_max;
  }
  for (int i = 0; i < a.m; ++i) v[i] = rng.cgaussian();
  v.normalize();
  double shift_max = 0.0;
  for (int it = 0; it < 20; ++it) {
    Eigen::VectorXcd w = lam_max * v - gram_apply(v);
    shift_max = w.norm();
    if (shift_max == 0.0) break;
    v = w / shift_max;
  }
  double lam_min = std::max(lam_max - shift_max, 0.0);
  return std::sqrt(lam_min);
}

double resolve_gamma(const RecoverySettings& settings,
                     const MeasurementOperator& a, const Eigen::VectorXcd& y) {
  if (settings.gamma > 0.0) return settings.gamma;
  double smin = sigma_min_estimate(a);
  if (smin < 1e-12) return kInf;
  return 1.1 * y.norm() / smin;
}

/// A applied column-by-column to a complex matrix.
Eigen::MatrixXcd op_apply_matrix(const MeasurementOperator& a,
                                 const Eigen::MatrixXcd& x) {
  Eigen::MatrixXcd out(a.m, x.cols());
  for (int c = 0; c < x.cols(); ++c) out.col(c) = op_apply(a, x.col(c));
  return out;
}

}  // namespace

Eigen::VectorXcd hard_threshold(const Eigen::VectorXcd& v, int s) {
  if (s < 0 || s > v.size())
    throw std::invalid_argument("parameter-out-of-range: 0 <= S <= len(v)");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (int i : top_indices(v, s)) out[i] = v[i];
  return out;
}

RecoveryReport iht(const MeasurementOperator& a,
                   const MultibandDictionary* dict, const Eigen::VectorXcd& y,
                   int s, SolveMode mode, const RecoverySettings& settings) {
  if (y.size() != a.m) throw std::invalid_argument("dimension-mismatch");
  if (dict && dict->n != a.n) throw std::invalid_argument("dimension-mismatch");
  int d = dict ? dict->dim() : a.n;
  double ynorm = y.norm();
  if (ynorm == 0.0) return zero_report(a.n, d);

  RecoveryReport rep;
  IterationTracker tracker(settings, rep);
  bool coeff_mode = mode == SolveMode::coefficient;

  Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(d);  // coefficient iterate
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(a.n);    // signal iterate
  for (;;) {
    Eigen::VectorXcd x_cur = dict && coeff_mode ? dict_apply(*dict, alpha) : x;
    if (!dict) x_cur = alpha;  // identity dictionary: iterate lives in alpha
    Eigen::VectorXcd residual = y - op_apply(a, x_cur);
    Eigen::VectorXcd back = op_adjoint(a, residual);
    if (!dict) {
      alpha = hard_threshold(alpha + settings.mu * back, s);
      x_cur = alpha;
    } else if (coeff_mode) {
      alpha = hard_threshold(
          alpha + settings.mu * dict_adjoint(*dict, back), s);
      x_cur = dict_apply(*dict, alpha);
    } else {
      Eigen::VectorXcd grad_step = x + settings.mu * back;
      alpha = hard_threshold(dict_adjoint(*dict, grad_step), s);
      x = dict_apply(*dict, alpha);
      x_cur = x;
    }
    double rel = (y - op_apply(a, x_cur)).norm() / ynorm;
    std::vector<int> supp;
    for (int i = 0; i < alpha.size(); ++i)
      if (alpha[i] != std::complex<double>(0.0, 0.0)) supp.push_back(i);
    if (tracker.record(rel, x_cur, alpha, supp)) break;
  }
  tracker.finalize();
  return rep;
}

std::pair<BlockSupport, Eigen::VectorXcd> block_project(
    const Eigen::VectorXcd& x, const MultibandDictionary& dict, int k_blocks,
    const RecoverySettings& settings) {
  if (k_blocks < 0 || k_blocks > dict.j)
    throw std::invalid_argument("parameter-out-of-range: 0 <= K <= J");
  if (k_blocks == 0)
    return {BlockSupport{}, Eigen::VectorXcd::Zero(x.size())};

  std::vector<int> selected;
  std::vector<bool> taken(dict.j, false);
  Eigen::MatrixXcd q(dict.n, 0);  // orthonormal basis of selected blocks
  Eigen::VectorXcd r = x;
  for (int round = 0; round < k_blocks; ++round) {
    Eigen::VectorXcd proxy = dict_adjoint(dict, r);
    int pick = -1;
    double best = -1.0;
    for (int b = 0; b < dict.j; ++b) {
      if (taken[b]) continue;
      double e = proxy.segment(b * dict.k, dict.k).squaredNorm();
      if (e > best) {  // strict: ties keep the lowest index
        best = e;
        pick = b;
      }
    }
    taken[pick] = true;
    selected.push_back(pick);

    Eigen::MatrixXcd block = dict.block(pick);
    for (int c = 0; c < block.cols(); ++c) {
      Eigen::VectorXcd v = block.col(c);
      if (q.cols() > 0) {
        v -= q * (q.adjoint() * v);
        v -= q * (q.adjoint() * v);  // second pass for stability
      }
      double nv = v.norm();
      if (nv > settings.svd_tol) {
        q.conservativeResize(Eigen::NoChange, q.cols() + 1);
        q.col(q.cols() - 1) = v / nv;
      }
    }
    r = x - q * (q.adjoint() * x);
  }
  std::sort(selected.begin(), selected.end());
  return {BlockSupport{std::move(selected)}, x - r};
}

Eigen::VectorXcd constrained_ls(const MeasurementOperator& a,
                                const MultibandDictionary& dict,
                                const BlockSupport& support,
                                const Eigen::VectorXcd& y, double gamma,
                                double svd_tol) {
  if (support.empty()) throw std::invalid_argument("empty-support");
  if (!(gamma > 0.0))
    throw std::invalid_argument("parameter-out-of-range: gamma > 0");
  Eigen::MatrixXcd u = reduced_basis(dict, support, svd_tol);
  Eigen::MatrixXcd b = op_apply_matrix(a, u);
  Eigen::VectorXcd coords = la::ls_norm_constrained(b, y, gamma, svd_tol);
  return u * coords;
}

RecoveryReport bbcosamp(const MeasurementOperator& a,
                        const MultibandDictionary& dict,
                        const Eigen::VectorXcd& y, int k_blocks,
                        SolveMode mode, const RecoverySettings& settings) {
  if (y.size() != a.m || dict.n != a.n)
    throw std::invalid_argument("dimension-mismatch");
  if (k_blocks < 1 || k_blocks > dict.j)
    throw std::invalid_argument("parameter-out-of-range: 1 <= K <= J");
  double ynorm = y.norm();
  if (ynorm == 0.0) return zero_report(a.n, dict.dim());
  double gamma = resolve_gamma(settings, a, y);
  int identify_count = std::min(2 * k_blocks, dict.j);

  RecoveryReport rep;
  IterationTracker tracker(settings, rep);

  if (mode == SolveMode::signal) {
    std::vector<int> supp;
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(a.n);
    Eigen::VectorXcd r = y;
    for (;;) {
      Eigen::VectorXcd proxy = op_adjoint(a, r);
      auto [identified, ignored] =
          block_project(proxy, dict, identify_count, settings);
      std::vector<int> merged = merge_sorted(supp, identified.indices);
      Eigen::VectorXcd z = constrained_ls(a, dict, BlockSupport{merged}, y,
                                          gamma, settings.svd_tol);
      auto [pruned, ignored2] = block_project(z, dict, k_blocks, settings);
      // extra orthogonalization: re-solve on the pruned support
      x = constrained_ls(a, dict, pruned, y, gamma, settings.svd_tol);
      supp = pruned.indices;
      r = y - op_apply(a, x);
      if (tracker.record(r.norm() / ynorm, x, Eigen::VectorXcd(), supp)) break;
    }
  } else {
    // coefficient mode: A Psi with identity "dictionary"; block thresholding
    // of the coefficient vector is the exact projection here. The norm budget
    // constrains ||Psi alpha||, so the update solves in signal coordinates
    // and maps back through the stacked-dictionary pseudoinverse; when the
    // stacked blocks are nearly dependent (k well above 2NW) that map is
    // badly conditioned, which is inherent to this invocation.
    auto stack_blocks = [&](const std::vector<int>& blocks) {
      Eigen::MatrixXcd out(dict.n, dict.k * blocks.size());
      for (std::size_t i = 0; i < blocks.size(); ++i)
        out.middleCols(i * dict.k, dict.k) = dict.block(blocks[i]);
      return out;
    };
    auto scatter = [&](const std::vector<int>& blocks,
                       const Eigen::VectorXcd& packed) {
      Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(dict.dim());
      for (std::size_t i = 0; i < blocks.size(); ++i)
        alpha.segment(blocks[i] * dict.k, dict.k) =
            packed.segment(i * dict.k, dict.k);
      return alpha;
    };
    auto solve_alpha = [&](const std::vector<int>& blocks) {
      Eigen::MatrixXcd stacked = stack_blocks(blocks);
      Eigen::MatrixXcd u, v;
      Eigen::VectorXd s;
      la::svd_econ(stacked, u, s, v);
      int rank = 0;  // keep everything above the machine-precision floor
      while (rank < s.size() && s[rank] > 1e-15 * s[0]) ++rank;
      Eigen::MatrixXcd b = op_apply_matrix(a, u.leftCols(rank));
      Eigen::VectorXcd c = la::ls_norm_constrained(b, y, gamma,
                                                   settings.svd_tol);
      Eigen::VectorXcd packed =
          v.leftCols(rank) * c.cwiseQuotient(s.head(rank));
      return scatter(blocks, packed);
    };

    std::vector<int> supp;
    Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(dict.dim());
    Eigen::VectorXcd r = y;
    for (;;) {
      Eigen::VectorXcd proxy = dict_adjoint(dict, op_adjoint(a, r));
      std::vector<int> identified = top_blocks(proxy, dict.k, identify_count);
      std::vector<int> merged = merge_sorted(supp, identified);
      Eigen::VectorXcd merged_alpha = solve_alpha(merged);
      std::vector<int> pruned = top_blocks(merged_alpha, dict.k, k_blocks);
      // extra orthogonalization: re-solve on the pruned support
      alpha = solve_alpha(pruned);
      supp = pruned;
      Eigen::VectorXcd x = dict_apply(dict, alpha);
      r = y - op_apply(a, x);
      if (tracker.record(r.norm() / ynorm, x, alpha, supp)) break;
    }
  }
  tracker.finalize();
  return rep;
}

RecoveryReport cosamp(const MeasurementOperator& a, const Eigen::MatrixXcd* psi,
                      const Eigen::VectorXcd& y, int s,
                      const RecoverySettings& settings) {
  if (y.size() != a.m) throw std::invalid_argument("dimension-mismatch");
  if (s < 1) throw std::invalid_argument("parameter-out-of-range: S >= 1");
  if (3 * s > a.m)
    throw std::invalid_argument("parameter-violation: requires M >= 3S");
  if (psi && psi->rows() != a.n)
    throw std::invalid_argument("dimension-mismatch");
  int d = psi ? static_cast<int>(psi->cols()) : a.n;
  double ynorm = y.norm();
  if (ynorm == 0.0) return zero_report(a.n, d);

  // effective m x D matrix A Psi, materialized once
  Eigen::MatrixXcd phi =
      psi ? op_apply_matrix(a, *psi)
          : op_apply_matrix(a, Eigen::MatrixXcd::Identity(a.n, a.n));

  RecoveryReport rep;
  IterationTracker tracker(settings, rep);
  std::vector<int> supp;
  Eigen::VectorXcd r = y;
  for (;;) {
    Eigen::VectorXcd proxy = phi.adjoint() * r;
    std::vector<int> identified = top_indices(proxy, std::min(2 * s, d));
    std::sort(identified.begin(), identified.end());
    std::vector<int> merged = merge_sorted(supp, identified);

    Eigen::MatrixXcd sub(a.m, merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i)
      sub.col(i) = phi.col(merged[i]);
    Eigen::VectorXcd b = sub.completeOrthogonalDecomposition().solve(y);

    Eigen::VectorXcd dense_b = Eigen::VectorXcd::Zero(d);
    for (std::size_t i = 0; i < merged.size(); ++i) dense_b[merged[i]] = b[i];
    supp = top_indices(dense_b, s);
    std::sort(supp.begin(), supp.end());

    // extra orthogonalization on the pruned support
    Eigen::MatrixXcd sub2(a.m, supp.size());
    for (std::size_t i = 0; i < supp.size(); ++i)
      sub2.col(i) = phi.col(supp[i]);
    Eigen::VectorXcd b2 = sub2.completeOrthogonalDecomposition().solve(y);
    Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(d);
    for (std::size_t i = 0; i < supp.size(); ++i) alpha[supp[i]] = b2[i];

    r = y - sub2 * b2;
    Eigen::VectorXcd x = psi ? Eigen::VectorXcd(*psi * alpha) : alpha;
    if (tracker.record(r.norm() / ynorm, x, alpha, supp)) break;
  }
  tracker.finalize();
  return rep;
}

RecoveryReport block_iht(const MeasurementOperator& a,
                         const MultibandDictionary& dict,
                         const Eigen::VectorXcd& y, int k_blocks,
                         const RecoverySettings& settings) {
  if (y.size() != a.m || dict.n != a.n)
    throw std::invalid_argument("dimension-mismatch");
  if (k_blocks < 1 || k_blocks > dict.j)
    throw std::invalid_argument("parameter-out-of-range: 1 <= K <= J");
  double ynorm = y.norm();
  if (ynorm == 0.0) return zero_report(a.n, dict.dim());

  RecoveryReport rep;
  IterationTracker tracker(settings, rep);
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(a.n);
  for (;;) {
    Eigen::VectorXcd grad_step =
        x + settings.mu * op_adjoint(a, y - op_apply(a, x));
    auto [supp, projected] = block_project(grad_step, dict, k_blocks, settings);
    x = projected;
    double rel = (y - op_apply(a, x)).norm() / ynorm;
    if (tracker.record(rel, x, Eigen::VectorXcd(), supp.indices)) break;
  }
  tracker.finalize();
  return rep;
}

}  // namespace dpssband
