#include "ennorm/graded_basis.hpp"

#include <stdexcept>

namespace ennorm {

namespace {

using Cplx = std::complex<double>;

long long binom(long long n, int k) {
  if (k < 0 || n < 0) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

namespace detail {

// Column normalization followed by symmetric whitening: deterministic and
// stable for the mildly ill-conditioned normal-form parametrizations.
void orthonormalize_columns(Eigen::MatrixXcd& X) {
  int nu = static_cast<int>(X.cols());
  if (nu == 0) return;
  for (int s = 0; s < nu; ++s) {
    double n = X.col(s).norm();
    if (!(n > 0)) throw std::logic_error("zero column in slice parametrization");
    X.col(s) /= n;
  }
  Eigen::MatrixXcd gram = X.adjoint() * X;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const auto& ev = es.eigenvalues();
  if (ev(0) <= 1e-12 * ev(nu - 1))
    throw std::logic_error("degenerate slice Gram matrix");
  Eigen::MatrixXcd whiten =
      es.eigenvectors() * ev.cwiseInverse().cwiseSqrt().asDiagonal() *
      es.eigenvectors().adjoint();
  X = X * whiten;
}

}  // namespace detail

DegreeEnum::DegreeEnum(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  size_ = binom(degree + num_vars - 1, num_vars - 1);
  binom_.resize(static_cast<size_t>(degree + num_vars + 1) * num_vars);
  for (int a = 0; a <= degree + num_vars; ++a)
    for (int k = 0; k < num_vars; ++k)
      binom_[a * num_vars + k] =
          k == 0 ? 1 : (a == 0 ? 0 : binom_[(a - 1) * num_vars + k] +
                                         binom_[(a - 1) * num_vars + (k - 1)]);
}

long long DegreeEnum::rank(const std::vector<int>& e) const {
  long long r = 0;
  int tail = 0;  // sum of exponents after position idx
  for (int idx = num_vars_ - 1; idx >= 1; --idx) {
    int rem = degree_ - tail;
    r += choose(rem + idx, idx) - choose(rem - e[idx] + idx, idx);
    tail += e[idx];
  }
  return r;
}

SliceFactory::SliceFactory(const Ideal& a, WeightScheme w) : ideal_(a), weight_(w) {
  MonomialOrder ord = MonomialOrder::grevlex();
  if (!a.is_zero_ideal()) {
    for (const auto& g : a.groebner_basis(ord)) {
      Rewrite rw;
      const auto& [lt, lc] = g.leading_term(ord);
      rw.lt = lt.exponents();
      for (const auto& [m, c] : g.terms()) {
        if (m == lt) continue;
        rw.tail.push_back({m.exponents(), (c / lc).to_complex()});
      }
      rewrites_.push_back(std::move(rw));
      max_gen_degree_ = std::max(max_gen_degree_, lt.degree());
    }
  }
}

DegreeBlock SliceFactory::build(int degree) const {
  int d = ideal_.num_vars();
  DegreeEnum en(d, degree);
  long long D = en.size();

  DegreeBlock block;
  block.degree = degree;
  block.ambient = D;

  auto divides = [](const std::vector<int>& lt, const std::vector<int>& e) {
    for (size_t i = 0; i < lt.size(); ++i)
      if (lt[i] > e[i]) return false;
    return true;
  };

  // Pass 1: standard monomials (not divisible by any basis leading monomial).
  std::vector<char> is_std(D, 1);
  std::vector<long long> std_ranks;
  en.for_each_ascending([&](long long r, const std::vector<int>& e) {
    for (const auto& rw : rewrites_)
      if (divides(rw.lt, e)) {
        is_std[r] = 0;
        return;
      }
    std_ranks.push_back(r);
  });
  std::sort(std_ranks.begin(), std_ranks.end());
  int nu = static_cast<int>(std_ranks.size());
  std::vector<int> slot(D, -1);
  for (int s = 0; s < nu; ++s) slot[std_ranks[s]] = s;

  block.basis.resize(D, nu);
  if (nu == 0) return block;
  block.basis.setZero();

  // Per-coordinate sqrt weight factors.
  std::vector<double> sqrtf(degree + 1);
  for (int k = 0; k <= degree; ++k) sqrtf[k] = std::sqrt(weight_.factor(k));
  auto wnorm = [&](const std::vector<int>& e) {
    double p = 1;
    for (int i = 0; i < d; ++i) p *= sqrtf[e[i]];
    return p;
  };

  // Pass 2 (grevlex ascending): rows of the normal-form parametrization.
  // Standard rows are units; a non-standard monomial rewrites through the
  // first reducer onto strictly smaller monomials of the same degree, whose
  // rows are already complete.
  std::vector<int> target(d);
  en.for_each_ascending([&](long long r, const std::vector<int>& e) {
    if (is_std[r]) {
      block.std_monomials.push_back(Monomial(e));
      block.basis(r, slot[r]) = 1.0;
      return;
    }
    const Rewrite* rw = nullptr;
    for (const auto& cand : rewrites_)
      if (divides(cand.lt, e)) {
        rw = &cand;
        break;
      }
    for (const auto& [texp, c] : rw->tail) {
      for (int i = 0; i < d; ++i) target[i] = e[i] - rw->lt[i] + texp[i];
      long long tr = en.rank(target);
      block.basis.row(r) -= std::conj(c) * block.basis.row(tr);
    }
  });
  // std_monomials were collected in ascending visit order (descending rank);
  // flip to match the slot order.
  std::reverse(block.std_monomials.begin(), block.std_monomials.end());

  // Coefficient rows -> e-basis coordinates: scale row m by 1/w_m (the
  // column scale w_s^2 is absorbed by orthonormalization).
  en.for_each_ascending([&](long long r, const std::vector<int>& e) {
    block.basis.row(r) /= wnorm(e);
  });

  detail::orthonormalize_columns(block.basis);
  return block;
}

GradedBasis::GradedBasis(const Ideal& a, int max_degree, WeightScheme w)
    : factory_(a, w) {
  if (!a.is_homogeneous())
    throw std::invalid_argument("graded basis needs a homogeneous ideal");
  blocks_.reserve(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) blocks_.push_back(factory_.build(n));
}

GradedBasis graded_quotient_basis(const Ideal& a, int max_degree, WeightScheme w) {
  return GradedBasis(a, max_degree, w);
}

Eigen::MatrixXcd compression_block(const GradedBasis& basis, const Polynomial& f, int n) {
  int k = f.degree();
  if (k < 0) return Eigen::MatrixXcd::Zero(0, basis.dim(n));
  if (!f.is_homogeneous()) throw std::invalid_argument("compression_block needs homogeneous f");
  if (n + k > basis.max_degree()) throw std::out_of_range("block exceeds truncation");

  const DegreeBlock& src = basis.block(n);
  const DegreeBlock& dst = basis.block(n + k);
  int d = basis.ideal().num_vars();
  DegreeEnum src_en(d, n), dst_en(d, n + k);

  std::vector<double> sqrtf(n + k + 1);
  for (int j = 0; j <= n + k; ++j) sqrtf[j] = std::sqrt(basis.weight().factor(j));
  auto wnorm = [&](const std::vector<int>& e) {
    double p = 1;
    for (int i = 0; i < d; ++i) p *= sqrtf[e[i]];
    return p;
  };

  Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Zero(dst.ambient, src.dim());
  std::vector<int> target(d);
  src_en.for_each_ascending([&](long long r, const std::vector<int>& e) {
    double we = wnorm(e);
    for (const auto& [mon, c] : f.terms()) {
      for (int i = 0; i < d; ++i) target[i] = e[i] + mon[i];
      lifted.row(dst_en.rank(target)) +=
          c.to_complex() * (wnorm(target) / we) * src.basis.row(r);
    }
  });
  return dst.basis.adjoint() * lifted;
}

CompressionMatrices compression_matrices(const GradedBasis& basis) {
  CompressionMatrices out;
  out.num_vars = basis.ideal().num_vars();
  out.max_degree = basis.max_degree();
  out.weight = basis.weight();
  for (int n = 0; n <= out.max_degree; ++n) out.dims.push_back(basis.dim(n));
  out.blocks.resize(out.num_vars);
  for (int i = 0; i < out.num_vars; ++i) {
    Polynomial zi = Polynomial::variable(out.num_vars, i);
    for (int n = 0; n + 1 <= out.max_degree; ++n)
      out.blocks[i].push_back(compression_block(basis, zi, n));
  }
  return out;
}

}  // namespace ennorm
