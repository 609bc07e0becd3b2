#include "auem/tensor.hpp"

#include <algorithm>

namespace auem {
namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<int> concat_dims(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> dims = a;
  dims.insert(dims.end(), b.begin(), b.end());
  return dims;
}

}  // namespace

PureState tensor_product(const PureState& a, const PureState& b) {
  Vector v(a.amps.size() * b.amps.size());
  for (Eigen::Index i = 0; i < a.amps.size(); ++i)
    v.segment(i * b.amps.size(), b.amps.size()) = a.amps(i) * b.amps;
  return PureState(concat_dims(a.dims, b.dims), std::move(v));
}

OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  return OperatorMatrix(concat_dims(a.dims, b.dims), kron(a.mat, b.mat));
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(concat_dims(a.dims, b.dims), kron(a.mat, b.mat));
}

namespace {

// Composite-index bookkeeping for a bipartition into kept and traced
// subsystems: the full index of (kept multi-index i, traced multi-index t)
// is keep_off[i] + trace_off[t].
struct IndexSplit {
  std::vector<int> keep_dims;
  std::vector<long long> keep_off;
  std::vector<long long> trace_off;
};

IndexSplit split_index(const std::vector<int>& dims, const std::vector<int>& keep,
                       const char* who) {
  const int n = static_cast<int>(dims.size());
  std::vector<char> kept(n, 0);
  for (int idx : keep) {
    if (idx < 0 || idx >= n)
      throw std::invalid_argument(std::string(who) + ": subsystem index out of range");
    kept[idx] = 1;
  }
  const int n_keep = static_cast<int>(std::count(kept.begin(), kept.end(), 1));
  if (n_keep == 0 || n_keep == n)
    throw std::invalid_argument(std::string(who) + ": keep must be a nonempty proper subset");

  std::vector<long long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> keep_pos, trace_pos;
  IndexSplit split;
  for (int i = 0; i < n; ++i) {
    if (kept[i]) {
      split.keep_dims.push_back(dims[i]);
      keep_pos.push_back(i);
    } else {
      trace_pos.push_back(i);
    }
  }
  const long long nk = dim_product(split.keep_dims);
  long long nt = 1;
  for (int i : trace_pos) nt *= dims[i];

  split.keep_off.assign(nk, 0);
  split.trace_off.assign(nt, 0);
  for (long long i = 0; i < nk; ++i) {
    long long rem = i;
    for (int k = static_cast<int>(keep_pos.size()) - 1; k >= 0; --k) {
      const int d = dims[keep_pos[k]];
      split.keep_off[i] += (rem % d) * stride[keep_pos[k]];
      rem /= d;
    }
  }
  for (long long t = 0; t < nt; ++t) {
    long long rem = t;
    for (int k = static_cast<int>(trace_pos.size()) - 1; k >= 0; --k) {
      const int d = dims[trace_pos[k]];
      split.trace_off[t] += (rem % d) * stride[trace_pos[k]];
      rem /= d;
    }
  }
  return split;
}

}  // namespace

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
  IndexSplit split = split_index(rho.dims, keep, "partial_trace");
  const long long nk = static_cast<long long>(split.keep_off.size());
  Matrix out = Matrix::Zero(nk, nk);
  for (long long i = 0; i < nk; ++i)
    for (long long j = 0; j < nk; ++j) {
      Complex s = 0.0;
      for (const long long t : split.trace_off) s += rho.mat(split.keep_off[i] + t, split.keep_off[j] + t);
      out(i, j) = s;
    }
  return DensityOperator(std::move(split.keep_dims), std::move(out));
}

DensityOperator reduced_density(const PureState& psi, const std::vector<int>& keep) {
  IndexSplit split = split_index(psi.dims, keep, "reduced_density");
  const long long nk = static_cast<long long>(split.keep_off.size());
  Matrix out = Matrix::Zero(nk, nk);
  for (long long i = 0; i < nk; ++i)
    for (long long j = 0; j < nk; ++j) {
      Complex s = 0.0;
      for (const long long t : split.trace_off)
        s += psi.amps(split.keep_off[i] + t) * std::conj(psi.amps(split.keep_off[j] + t));
      out(i, j) = s;
    }
  return DensityOperator(std::move(split.keep_dims), std::move(out));
}

std::vector<EigenPair> eig_hermitian(const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eig_hermitian: matrix not square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kTolAlg)
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const int n = static_cast<int>(h.rows());
  std::vector<EigenPair> pairs;
  pairs.reserve(n);
  for (int k = n - 1; k >= 0; --k) pairs.push_back({es.eigenvalues()(k), es.eigenvectors().col(k)});
  return pairs;
}

std::vector<EigenPair> eig_hermitian(const OperatorMatrix& h) { return eig_hermitian(h.mat); }

std::vector<PureState> complete_orthonormal(const std::vector<PureState>& vs) {
  if (vs.empty()) throw std::invalid_argument("complete_orthonormal: empty input");
  const std::vector<int> dims = vs.front().dims;
  const int n = vs.front().dim();
  if (static_cast<int>(vs.size()) > n)
    throw std::invalid_argument("complete_orthonormal: more vectors than dimensions");

  std::vector<Vector> basis;
  basis.reserve(n);
  for (const auto& v : vs) {
    if (v.dims != dims) throw std::invalid_argument("complete_orthonormal: mixed dims");
    basis.push_back(v.amps);
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = basis[j].dot(basis[i]);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - want) > kTolAlg)
        throw std::invalid_argument("complete_orthonormal: input set not orthonormal");
    }

  std::vector<PureState> added;
  for (int c = 0; c < n && static_cast<int>(basis.size()) < n; ++c) {
    Vector r = Vector::Zero(n);
    r(c) = 1.0;
    // two projection passes keep the basis orthonormal to machine precision
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) r -= b.dot(r) * b;
    const double nr = r.norm();
    if (nr < 1e-6) continue;
    r /= nr;
    basis.push_back(r);
    added.emplace_back(dims, std::move(r));
  }
  if (static_cast<int>(basis.size()) != n)
    throw std::logic_error("complete_orthonormal: basis completion failed");
  return added;
}

}  // namespace auem
