#include "ennorm/oplab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "ennorm/decompose.hpp"

namespace ennorm {

namespace {

using Cplx = std::complex<double>;

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd commutator_block(const CompressionMatrices& m, int i, int j, int n) {
  int dim = m.dims[n];
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
  if (n + 1 <= m.max_degree) c += m.blocks[i][n].adjoint() * m.blocks[j][n];
  if (n >= 1) c -= m.blocks[j][n - 1] * m.blocks[i][n - 1].adjoint();
  return c;
}

}  // namespace

std::vector<double> commutator_tail_norms(const CompressionMatrices& m, int var_i, int var_j,
                                          std::span<const WindowSpec> windows) {
  std::vector<double> out;
  for (const auto& w : windows) {
    if (w.start < 0 || w.width < 0 || w.start + w.width > m.max_degree - 1)
      throw std::out_of_range("window exceeds truncation (boundary block is discarded)");
    double norm = 0;
    for (int n = w.start; n <= w.start + w.width; ++n)
      norm = std::max(norm, spectral_norm(commutator_block(m, var_i, var_j, n)));
    out.push_back(norm);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Berezin curve.

namespace {

// Per-degree squared kernel masses sum_{|alpha|=n} |lambda^alpha|^2/w_alpha^2
// by iterated one-variable convolutions.
std::vector<double> kernel_masses(std::span<const Cplx> lambda, const WeightScheme& w,
                                  int n_max) {
  std::vector<double> acc{1.0};
  for (const auto& li : lambda) {
    double rho = std::norm(li);
    std::vector<double> s(n_max + 1);
    double p = 1.0;
    for (int k = 0; k <= n_max; ++k) {
      s[k] = p / w.factor(k);
      p *= rho;
    }
    std::vector<double> next(n_max + 1, 0.0);
    for (int a = 0; a < static_cast<int>(acc.size()); ++a) {
      if (acc[a] == 0) continue;
      for (int k = 0; a + k <= n_max; ++k) next[a + k] += acc[a] * s[k];
    }
    acc = std::move(next);
  }
  acc.resize(n_max + 1, 0.0);
  return acc;
}

// Spanning frame of one degree slice of the module, with kernel overlaps.
struct DegreeFrame {
  int dim = 0;
  bool orthonormal = true;
  Eigen::MatrixXcd gram_pinv;  // used when not orthonormal
  Eigen::VectorXcd kernel;     // <kappa_n(dir), frame_s>
  // Sparse ambient representation (stream model only); ranks are the global
  // grevlex-descending ranks of the rows, themselves in descending order.
  std::vector<std::vector<int>> exps;
  std::vector<long long> ranks;
  Eigen::MatrixXcd rows;  // nnz x dim, e-coordinates
};

// Binary search in a descending rank list; -1 when absent.
int find_rank(const std::vector<long long>& ranks, long long r) {
  auto it = std::lower_bound(ranks.begin(), ranks.end(), r, std::greater<long long>());
  if (it != ranks.end() && *it == r) return static_cast<int>(it - ranks.begin());
  return -1;
}

Eigen::MatrixXcd pseudo_inverse_psd(const Eigen::MatrixXcd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  const auto& ev = es.eigenvalues();
  double floor = std::max(ev(ev.size() - 1), 0.0) * 1e-10 + 1e-300;
  Eigen::VectorXd inv(ev.size());
  for (int i = 0; i < ev.size(); ++i) inv(i) = ev(i) > floor ? 1.0 / ev(i) : 0.0;
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

class BerezinModel {
 public:
  virtual ~BerezinModel() = default;
  virtual DegreeFrame frame(int degree) = 0;
  /// F[j][k] = <f * frame_n[k], frame_m[j]> where m = n + deg f.
  virtual Eigen::MatrixXcd transfer(const Polynomial& f, const DegreeFrame& src, int src_degree,
                                    const DegreeFrame& dst) = 0;
};

// Exact model for radical ideals: slices are spanned by the degree-n parts
// of the reproducing kernels along the variety lines; all inner products are
// weighted geometric convolutions.
class LineKernelModel final : public BerezinModel {
 public:
  LineKernelModel(std::vector<std::vector<Cplx>> lines, std::vector<Cplx> dir, WeightScheme w,
                  int n_max)
      : lines_(std::move(lines)), dir_(std::move(dir)), w_(w) {
    int m = static_cast<int>(lines_.size());
    int d = static_cast<int>(dir_.size());
    cgram_.assign(m, std::vector<std::vector<Cplx>>(m));
    ckern_.assign(m, {});
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        // G_{jk} = <sigma^{(u_k)}, sigma^{(u_j)}>_n = conv_n(u_j conj(u_k)).
        std::vector<Cplx> t(d);
        for (int i = 0; i < d; ++i) t[i] = lines_[j][i] * std::conj(lines_[k][i]);
        cgram_[j][k] = weighted_conv(t, n_max);
      }
      // beta_j = <kappa(dir), sigma^{(u_j)}>_n = conv_n(u_j conj(dir)).
      std::vector<Cplx> t(d);
      for (int i = 0; i < d; ++i) t[i] = lines_[j][i] * std::conj(dir_[i]);
      ckern_[j] = weighted_conv(t, n_max);
    }
  }

  DegreeFrame frame(int degree) override {
    int m = static_cast<int>(lines_.size());
    DegreeFrame fr;
    fr.dim = m;
    fr.orthonormal = false;
    Eigen::MatrixXcd gram(m, m);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) gram(j, k) = cgram_[j][k][degree];
    fr.gram_pinv = pseudo_inverse_psd(gram);
    fr.kernel.resize(m);
    for (int j = 0; j < m; ++j) fr.kernel(j) = ckern_[j][degree];
    return fr;
  }

  Eigen::MatrixXcd transfer(const Polynomial& f, const DegreeFrame&, int src_degree,
                            const DegreeFrame&) override {
    // F_{jk} = <f sigma_n^{(u_k)}, sigma^{(u_j)}> = sum_beta f_beta u_j^beta G_{jk}(n).
    int m = static_cast<int>(lines_.size());
    int d = static_cast<int>(dir_.size());
    Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(m, m);
    for (const auto& [mon, c] : f.terms()) {
      for (int j = 0; j < m; ++j) {
        Cplx pw = 1;
        for (int i = 0; i < d; ++i)
          for (int e = 0; e < mon[i]; ++e) pw *= lines_[j][i];
        for (int k = 0; k < m; ++k)
          F(j, k) += c.to_complex() * pw * cgram_[j][k][src_degree];
      }
    }
    return F;
  }

 private:
  std::vector<Cplx> weighted_conv(const std::vector<Cplx>& t, int n_max) const {
    std::vector<Cplx> acc{1.0};
    for (const auto& ti : t) {
      std::vector<Cplx> s(n_max + 1);
      Cplx p = 1;
      for (int k = 0; k <= n_max; ++k) {
        s[k] = p / w_.factor(k);
        p *= ti;
      }
      std::vector<Cplx> next(n_max + 1, Cplx(0));
      for (int a = 0; a < static_cast<int>(acc.size()); ++a)
        for (int k = 0; a + k <= n_max; ++k) next[a + k] += acc[a] * s[k];
      acc = std::move(next);
    }
    acc.resize(n_max + 1, Cplx(0));
    return acc;
  }

  std::vector<std::vector<Cplx>> lines_;
  std::vector<Cplx> dir_;
  WeightScheme w_;
  std::vector<std::vector<std::vector<Cplx>>> cgram_;  // [j][k][n]
  std::vector<std::vector<Cplx>> ckern_;               // [j][n]
};

// Generic model: streams the normal-form slice parametrization degree by
// degree over the support box cut out by tail-free pure-power leading terms.
class StreamModel final : public BerezinModel {
 public:
  StreamModel(const SliceFactory& factory, std::vector<Cplx> dir)
      : factory_(factory), dir_(std::move(dir)) {
    d_ = factory.ideal().num_vars();
    caps_.assign(d_, -1);
    for (const auto& rw : factory_.rewrites()) {
      if (!rw.tail.empty()) continue;
      int var = -1, nz = 0;
      for (int i = 0; i < d_; ++i)
        if (rw.lt[i] > 0) {
          ++nz;
          var = i;
        }
      if (nz == 1 && (caps_[var] < 0 || rw.lt[var] < caps_[var])) caps_[var] = rw.lt[var];
    }
  }

  long long box_size(int degree) const {
    long long count = 0;
    count_box(degree, d_ - 1, count);
    return count;
  }

  DegreeFrame frame(int degree) override {
    DegreeEnum en(d_, degree);
    std::vector<std::vector<int>> exps;
    {
      std::vector<int> e(d_, 0);
      enumerate_box(e, d_ - 1, degree, exps);
    }
    // The box enumeration runs grevlex-ascending, so global ranks descend.
    std::vector<long long> box_ranks(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) box_ranks[i] = en.rank(exps[i]);

    const auto& rws = factory_.rewrites();
    auto divides = [&](const std::vector<int>& lt, const std::vector<int>& x) {
      for (int i = 0; i < d_; ++i)
        if (lt[i] > x[i]) return false;
      return true;
    };

    std::vector<char> is_std(exps.size(), 1);
    int nu = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
      for (const auto& rw : rws)
        if (divides(rw.lt, exps[i])) {
          is_std[i] = 0;
          break;
        }
      if (is_std[i]) ++nu;
    }

    Eigen::MatrixXcd rows = Eigen::MatrixXcd::Zero(exps.size(), nu);
    int slot = 0;
    std::vector<int> target(d_);
    for (size_t i = 0; i < exps.size(); ++i) {
      if (is_std[i]) {
        rows(i, slot++) = 1.0;
        continue;
      }
      const SliceFactory::Rewrite* rw = nullptr;
      for (const auto& cand : rws)
        if (divides(cand.lt, exps[i])) {
          rw = &cand;
          break;
        }
      for (const auto& [texp, c] : rw->tail) {
        for (int v = 0; v < d_; ++v) target[v] = exps[i][v] - rw->lt[v] + texp[v];
        int t = find_rank(box_ranks, en.rank(target));
        if (t < 0) continue;  // outside the box: zero row
        rows.row(i) -= std::conj(c) * rows.row(t);
      }
    }

    std::vector<double> sqrtf(degree + 1);
    for (int k = 0; k <= degree; ++k) sqrtf[k] = std::sqrt(factory_.weight().factor(k));
    std::vector<int> keep;
    for (size_t i = 0; i < exps.size(); ++i) {
      double wn = 1;
      for (int v = 0; v < d_; ++v) wn *= sqrtf[exps[i][v]];
      rows.row(i) /= wn;
      if (rows.row(i).squaredNorm() > 0) keep.push_back(static_cast<int>(i));
    }
    DegreeFrame fr;
    fr.dim = nu;
    fr.rows.resize(keep.size(), nu);
    fr.exps.reserve(keep.size());
    fr.ranks.reserve(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
      fr.rows.row(i) = rows.row(keep[i]);
      fr.exps.push_back(std::move(exps[keep[i]]));
      fr.ranks.push_back(box_ranks[keep[i]]);
    }
    if (nu > 0) detail::orthonormalize_columns(fr.rows);

    // Kernel coordinates via per-coordinate power tables.
    std::vector<std::vector<Cplx>> powc(d_, std::vector<Cplx>(degree + 1));
    for (int v = 0; v < d_; ++v) {
      powc[v][0] = 1;
      for (int k = 1; k <= degree; ++k) powc[v][k] = powc[v][k - 1] * std::conj(dir_[v]);
    }
    fr.kernel = Eigen::VectorXcd::Zero(nu);
    for (size_t i = 0; i < fr.exps.size(); ++i) {
      Cplx kv = 1;
      double wn = 1;
      for (int v = 0; v < d_; ++v) {
        kv *= powc[v][fr.exps[i][v]];
        wn *= sqrtf[fr.exps[i][v]];
      }
      fr.kernel += (kv / wn) * fr.rows.row(i).adjoint();
    }
    return fr;
  }

  Eigen::MatrixXcd transfer(const Polynomial& f, const DegreeFrame& src, int src_degree,
                            const DegreeFrame& dst) override {
    int dst_degree = src_degree + f.degree();
    DegreeEnum dst_en(d_, dst_degree);

    std::vector<double> sqrtf(dst_degree + 1);
    for (int j = 0; j <= dst_degree; ++j) sqrtf[j] = std::sqrt(factory_.weight().factor(j));
    auto wnorm = [&](const std::vector<int>& e) {
      double p = 1;
      for (int v = 0; v < d_; ++v) p *= sqrtf[e[v]];
      return p;
    };

    Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(dst.dim, src.dim);
    std::vector<int> target(d_);
    for (size_t i = 0; i < src.exps.size(); ++i) {
      double we = wnorm(src.exps[i]);
      for (const auto& [mon, c] : f.terms()) {
        for (int v = 0; v < d_; ++v) target[v] = src.exps[i][v] + mon[v];
        int t = find_rank(dst.ranks, dst_en.rank(target));
        if (t < 0) continue;
        F += (c.to_complex() * wnorm(target) / we) *
             (dst.rows.row(t).adjoint() * src.rows.row(i));
      }
    }
    return F;
  }

 private:
  void enumerate_box(std::vector<int>& e, int var, int rem,
                     std::vector<std::vector<int>>& out) const {
    if (var == 0) {
      if (caps_[0] >= 0 && rem >= caps_[0]) return;
      e[0] = rem;
      out.push_back(e);
      e[0] = 0;
      return;
    }
    int hi = caps_[var] >= 0 ? std::min(rem, caps_[var] - 1) : rem;
    for (int v = hi; v >= 0; --v) {
      e[var] = v;
      enumerate_box(e, var - 1, rem - v, out);
    }
    e[var] = 0;
  }

  void count_box(int rem, int var, long long& count) const {
    if (var == 0) {
      if (!(caps_[0] >= 0 && rem >= caps_[0])) ++count;
      return;
    }
    int hi = caps_[var] >= 0 ? std::min(rem, caps_[var] - 1) : rem;
    for (int v = hi; v >= 0; --v) count_box(rem - v, var - 1, count);
  }

  const SliceFactory& factory_;
  std::vector<Cplx> dir_;
  int d_ = 0;
  std::vector<int> caps_;
};

}  // namespace

BerezinCurve berezin_commutator_curve(const Ideal& a, const Polynomial& f,
                                      std::span<const Cplx> ray_direction,
                                      std::span<const double> radii, const GradedBasis& basis) {
  int d = a.num_vars();
  if (static_cast<int>(ray_direction.size()) != d)
    throw std::invalid_argument("ray dimension mismatch");
  if (f.num_vars() != d) throw std::invalid_argument("symbol ring mismatch");
  if (!basis.ideal().equals(a)) throw std::invalid_argument("basis built for a different ideal");
  if (radii.empty()) throw std::invalid_argument("no radii");
  for (size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0 && radii[i] < 1)) throw std::invalid_argument("radii must lie in (0,1)");
    if (i && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("radii must increase toward 1");
  }
  // The ray must lie in the variety (homogeneity: vanishing at the direction
  // point is vanishing on the whole ray).
  double scale = 0;
  for (const auto& g : a.gens())
    for (const auto& [m, c] : g.terms()) scale = std::max(scale, std::abs(c.to_complex()));
  for (const auto& g : a.gens())
    if (std::abs(g.eval(ray_direction)) > 1e-8 * std::max(1.0, scale))
      throw std::invalid_argument("ray direction is not on the variety");

  const WeightScheme& w = basis.weight();
  double rmax = radii.back();

  // Certified truncation: kernel tail below 1e-8 of its norm at the largest
  // radius. Masses are computed exactly per degree; the remainder beyond the
  // computed horizon is bounded geometrically.
  const int kHardCap = 4600;
  const int kSlack = 400;
  std::vector<Cplx> lambda(d);
  double rho = 0;
  for (int i = 0; i < d; ++i) {
    lambda[i] = rmax * ray_direction[i];
    rho = std::max(rho, std::norm(lambda[i]));
  }
  if (rho >= 0.99995) throw TruncationError("radius too close to 1 for a certified truncation");
  std::vector<double> mass = kernel_masses(lambda, w, kHardCap + kSlack);
  double total = 0;
  for (double v : mass) total += v;
  double remainder = mass.back() * rho / (1 - rho) * 4.0;  // conservative geometric bound
  total += remainder;
  double tail = remainder;
  int n_trunc = kHardCap + kSlack;
  const double kTailTarget = 1e-16;  // squared-norm fraction for a 1e-8 norm tail
  while (n_trunc > 0 && (tail + mass[n_trunc]) / total <= kTailTarget) {
    tail += mass[n_trunc];
    --n_trunc;
  }
  if (n_trunc > kHardCap)
    throw TruncationError("radius too close to 1 for a certified truncation");

  // Model choice: exact line-kernel model when the ideal is radical with
  // exact lines; otherwise the streamed normal-form model over the support
  // box, guarded by a memory budget.
  std::unique_ptr<BerezinModel> model;
  std::vector<Cplx> dir(ray_direction.begin(), ray_direction.end());
  LineExtraction ext = extract_lines(a);
  bool radical_case = false;
  if (ext.all_exact && ext.complete_certified) {
    Ideal rad = line_prime(ext.lines[0]);
    for (size_t k = 1; k < ext.lines.size(); ++k)
      rad = ideal_intersect(rad, line_prime(ext.lines[k]));
    if (rad.equals(a)) {
      std::vector<std::vector<Cplx>> lines;
      for (const auto& l : ext.lines) lines.push_back(l.direction_num);
      model = std::make_unique<LineKernelModel>(std::move(lines), dir, w, n_trunc + f.degree());
      radical_case = true;
    }
  }
  if (!radical_case) {
    auto stream = std::make_unique<StreamModel>(basis.factory(), dir);
    // Memory guard: two live frames of the support box.
    long long worst = std::max(stream->box_size(n_trunc), stream->box_size(n_trunc - 1));
    long long nu_bound = hilbert_function(a, n_trunc);
    if (worst * (nu_bound + 1) > 12000000LL)
      throw TruncationError("radius too close to 1 for the feasible truncation");
    model = std::move(stream);
  }

  // Sweep: x_n solves the frame Gram against the kernel overlaps; S_f and
  // S_f^* norms accumulate through the transfer blocks, radius scaling enters
  // as powers of r per degree.
  int k = f.degree();
  if (k < 0) return BerezinCurve{std::vector<double>(radii.size(), 0.0), n_trunc};
  size_t R = radii.size();
  std::vector<double> norm_sq(R, 0), sf_sq(R, 0), sfstar_sq(R, 0);
  std::vector<double> rpow(R, 1.0);  // r^{2n}, updated per degree

  std::deque<DegreeFrame> hist;   // frames for degrees n-k..n
  std::deque<Eigen::VectorXcd> xs;  // matching solved coordinates
  for (int n = 0; n <= n_trunc; ++n) {
    DegreeFrame fr = model->frame(n);
    Eigen::VectorXcd x = fr.orthonormal ? fr.kernel
                                        : Eigen::VectorXcd(fr.gram_pinv * fr.kernel);
    double contrib = std::real(fr.kernel.dot(x));  // ||P kappa_n||^2
    for (size_t r = 0; r < R; ++r) norm_sq[r] += rpow[r] * contrib;

    hist.push_back(std::move(fr));
    xs.push_back(std::move(x));
    if (static_cast<int>(hist.size()) > k + 1) {
      hist.pop_front();
      xs.pop_front();
    }
    if (n >= k) {
      const DegreeFrame& src = hist.front();
      const DegreeFrame& dst = hist.back();
      Eigen::MatrixXcd F = model->transfer(f, src, n - k, dst);
      // ||(S_f x)_n||^2 with x_{n-k} scaled by r^{n-k}.
      Eigen::VectorXcd b = F * xs.front();
      Eigen::VectorXcd gb = dst.orthonormal ? b : Eigen::VectorXcd(dst.gram_pinv * b);
      double sf = std::real(b.dot(gb));
      // ||(S_f^* x)_{n-k}||^2 with x_n scaled by r^n.
      Eigen::VectorXcd bs = F.adjoint() * xs.back();
      Eigen::VectorXcd gbs = src.orthonormal ? bs : Eigen::VectorXcd(src.gram_pinv * bs);
      double sfs = std::real(bs.dot(gbs));
      for (size_t r = 0; r < R; ++r) {
        double rnk = rpow[r] / std::pow(radii[r] * radii[r], k);  // r^{2(n-k)}
        sf_sq[r] += rnk * sf;
        sfstar_sq[r] += rpow[r] * sfs;
      }
    }
    for (size_t r = 0; r < R; ++r) rpow[r] *= radii[r] * radii[r];
  }

  BerezinCurve out;
  out.truncation_degree = n_trunc;
  for (size_t r = 0; r < R; ++r)
    out.values.push_back(norm_sq[r] > 0 ? (sf_sq[r] - sfstar_sq[r]) / norm_sq[r] : 0.0);
  return out;
}

// ---------------------------------------------------------------------------

FredholmIndex fredholm_index_estimate(const Ideal& component, const Line& u, int n_max,
                                      WeightScheme w) {
  if (!u.exact) throw std::invalid_argument("fredholm_index_estimate needs an exact line");
  if (n_max < 4) throw std::invalid_argument("n_max too small");
  int d = component.num_vars();
  Polynomial h(d);
  GaussianRational inv_k = GaussianRational::ratio(1, static_cast<long>(u.lambda.size()));
  for (int i : u.lambda)
    h += Polynomial::variable(d, i).scaled(u.direction[i].conj() * inv_k);

  GradedBasis basis(component, n_max, w);
  // ker/coker block by block; degree 0 is unreachable (S_h raises degree) and
  // counts toward the cokernel in full.
  auto estimate = [&](int top) {
    int ker = 0, coker = basis.dim(0);
    for (int n = 0; n + 1 <= top; ++n) {
      Eigen::MatrixXcd b = compression_block(basis, h, n);
      int rank = 0;
      if (b.rows() && b.cols()) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
        double thr = 1e-8 * std::max(1.0, svd.singularValues()(0));
        for (int i = 0; i < svd.singularValues().size(); ++i)
          if (svd.singularValues()(i) > thr) ++rank;
      }
      ker += basis.dim(n) - rank;
      coker += basis.dim(n + 1) - rank;
    }
    return ker - coker;
  };

  FredholmIndex out;
  for (int top : {n_max - 2, n_max - 1, n_max}) out.history.push_back(estimate(top));
  out.index = out.history.back();
  out.stable = out.history[0] == out.history[1] && out.history[1] == out.history[2];
  return out;
}

double asymptotic_orthogonality_norm(const Ideal& a, const Ideal& b, int degree, WeightScheme w,
                                     int width) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("ring mismatch");
  GradedBasis ba(a, degree + width, w), bb(b, degree + width, w);
  double norm = 0;
  for (int n = degree; n <= degree + width; ++n)
    norm = std::max(norm, spectral_norm(ba.block(n).basis.adjoint() * bb.block(n).basis));
  return norm;
}

std::vector<double> essential_spectrum_probe(
    const CompressionMatrices& m, std::span<const std::vector<Cplx>> grid, WindowSpec window) {
  int lo = window.start, hi = window.start + window.width;
  if (lo < 1 || hi + 1 > m.max_degree)
    throw std::out_of_range("window needs degrees [start-1, start+width] inside the truncation");

  std::vector<int> offset;
  int total = 0;
  for (int n = lo; n <= hi; ++n) {
    offset.push_back(total);
    total += m.dims[n];
  }

  std::vector<double> out;
  for (const auto& lambda : grid) {
    if (static_cast<int>(lambda.size()) != m.num_vars)
      throw std::invalid_argument("grid point dimension mismatch");
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(total, total);
    for (int i = 0; i < m.num_vars; ++i) {
      double l2 = std::norm(lambda[i]);
      for (int n = lo; n <= hi; ++n) {
        int o = offset[n - lo];
        int dim = m.dims[n];
        T.block(o, o, dim, dim) += l2 * Eigen::MatrixXcd::Identity(dim, dim);
        T.block(o, o, dim, dim) += m.blocks[i][n - 1] * m.blocks[i][n - 1].adjoint();
        if (n + 1 <= hi) {
          int o2 = offset[n + 1 - lo];
          int dim2 = m.dims[n + 1];
          // -(lambda S^*) and its adjoint couple adjacent degrees.
          T.block(o, o2, dim, dim2) -= lambda[i] * m.blocks[i][n].adjoint();
          T.block(o2, o, dim2, dim) -= std::conj(lambda[i]) * m.blocks[i][n];
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T);
    out.push_back(total ? es.eigenvalues()(0) : 0.0);
  }
  return out;
}

double multiplier_projection_defect(const GradedBasis& basis, int var, int n) {
  if (n + 1 > basis.max_degree()) throw std::out_of_range("degree exceeds truncation");
  // Gram of the ambient multiplication minus the compressed part:
  // ||P^perp z_i b_s||^2 = <z_i b_s, z_i b_t> - (S^H S)_{st}.
  int d = basis.ideal().num_vars();
  const DegreeBlock& src = basis.block(n);
  DegreeEnum src_en(d, n), dst_en(d, n + 1);
  std::vector<double> sqrtf(n + 2);
  for (int j = 0; j <= n + 1; ++j) sqrtf[j] = std::sqrt(basis.weight().factor(j));
  auto wnorm = [&](const std::vector<int>& e) {
    double p = 1;
    for (int i = 0; i < d; ++i) p *= sqrtf[e[i]];
    return p;
  };
  Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Zero(dst_en.size(), src.dim());
  std::vector<int> target(d);
  src_en.for_each_ascending([&](long long r, const std::vector<int>& e) {
    for (int i = 0; i < d; ++i) target[i] = e[i] + (i == var ? 1 : 0);
    lifted.row(dst_en.rank(target)) += (wnorm(target) / wnorm(e)) * src.basis.row(r);
  });
  Eigen::MatrixXcd s = basis.block(n + 1).basis.adjoint() * lifted;
  Eigen::MatrixXcd gram = lifted.adjoint() * lifted - s.adjoint() * s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  double top = es.eigenvalues().size() ? es.eigenvalues()(es.eigenvalues().size() - 1) : 0.0;
  return std::sqrt(std::max(0.0, top));
}

}  // namespace ennorm
