#include "heckefuse/projrep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "heckefuse/errors.hpp"

namespace heckefuse {

namespace {

constexpr std::size_t kSvdProjectorLimit = 64;  // d * d' up to which the projector rank is computed by SVD
constexpr int kSplitAttempts = 6;

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_same_group(const ProjRep& a, const ProjRep& b) {
  if (!(*a.group() == *b.group())) throw DomainError("representations of different groups");
}

void require_same_cocycle(const ProjRep& a, const ProjRep& b) {
  require_same_group(a, b);
  if (!a.cocycle().same_values(b.cocycle())) throw DomainError("representations with different cocycles");
}

}  // namespace

ProjRep::ProjRep(SubgroupPtr group, Cocycle2 cocycle, std::vector<Matrix> matrices)
    : group_(std::move(group)), cocycle_(std::move(cocycle)), matrices_(std::move(matrices)) {
  dim_ = matrices_.empty() ? 0 : static_cast<std::size_t>(matrices_.front().rows());
}

ProjRep ProjRep::from_matrices(SubgroupPtr group, Cocycle2 cocycle, std::vector<Matrix> matrices) {
  if (!(*cocycle.group() == *group)) throw DomainError("cocycle lives on another group");
  if (matrices.size() != group->order()) throw DomainError("need one matrix per group element");
  if (matrices.front().rows() == 0) throw DomainError("representations have positive dimension");
  ProjRep rep(std::move(group), std::move(cocycle), std::move(matrices));
  rep.validate();
  return rep;
}

ProjRep ProjRep::trivial(SubgroupPtr group, std::size_t dim) {
  std::vector<Matrix> mats(group->order(), Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
  Cocycle2 omega = Cocycle2::trivial(group);
  return ProjRep(std::move(group), std::move(omega), std::move(mats));
}

ProjRep ProjRep::scalar(const ScalarFunction& phi) {
  return twist(trivial(phi.group), phi);
}

std::vector<std::complex<double>> ProjRep::character() const {
  std::vector<std::complex<double>> chi(matrices_.size());
  for (std::size_t g = 0; g < matrices_.size(); ++g) chi[g] = matrices_[g].trace();
  return chi;
}

void ProjRep::validate(double tol) const {
  const std::size_t n = group_->order();
  if (matrices_.size() != n) throw InvariantViolation("matrix count differs from group order");
  const auto d = static_cast<Eigen::Index>(dim_);
  const Matrix id = Matrix::Identity(d, d);
  if ((matrices_[0] - id).cwiseAbs().maxCoeff() > tol) throw InvariantViolation("pi(e) is not the identity");
  for (std::size_t g = 0; g < n; ++g) {
    if (matrices_[g].rows() != d || matrices_[g].cols() != d) throw InvariantViolation("inconsistent dimensions");
    if ((matrices_[g].adjoint() * matrices_[g] - id).cwiseAbs().maxCoeff() > tol)
      throw InvariantViolation("pi(" + std::to_string(g) + ") is not unitary");
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const Matrix lhs = matrices_[g] * matrices_[h];
      const Matrix rhs = cocycle_.value(g, h) * matrices_[group_->local_mul(g, h)];
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tol)
        throw InvariantViolation("pi(g) pi(h) != Omega(g,h) pi(gh) at (" + std::to_string(g) + ", " +
                                 std::to_string(h) + ")");
    }
}

RepClass fingerprint(const ProjRep& rep) {
  RepClass cls;
  cls.dim = rep.dim();
  for (const auto& c : rep.character()) {
    cls.character.emplace_back(static_cast<std::int64_t>(std::llround(c.real() / kCharacterGrid)),
                               static_cast<std::int64_t>(std::llround(c.imag() / kCharacterGrid)));
  }
  return cls;
}

bool canonical_less(const RepClass& a, const RepClass& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.character > b.character;
}

ProjRep regular_rep(SubgroupPtr group, const Cocycle2& omega) {
  if (!(*omega.group() == *group)) throw DomainError("cocycle lives on another group");
  const std::size_t n = group->order();
  const auto d = static_cast<Eigen::Index>(n);
  std::vector<Matrix> mats(n, Matrix::Zero(d, d));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      mats[g](static_cast<Eigen::Index>(group->local_mul(g, h)), static_cast<Eigen::Index>(h)) = omega.value(g, h);
  return ProjRep(std::move(group), omega, std::move(mats));
}

ProjRep induce(const ProjRep& pi, SubgroupPtr group, const Cocycle2& omega) {
  const Subgroup& sub = *pi.group();
  const Subgroup& big = *group;
  if (!sub.is_subgroup_of(big)) throw DomainError("induction from a non-subgroup");
  if (!(*omega.group() == big)) throw DomainError("induction cocycle lives on another group");
  if (!omega.restrict_to(pi.group()).same_values(pi.cocycle()))
    throw DomainError("cocycle restriction mismatch: Omega restricted to the subgroup differs from pi's cocycle");

  const std::vector<Elem> reps = big.right_transversal(sub);  // local indices in big
  const std::size_t k = reps.size();
  const std::size_t n = big.order();
  // Every y in big is uniquely h * reps[j].
  std::vector<std::size_t> coset_of(n), h_of(n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t hl = 0; hl < sub.order(); ++hl) {
      const std::size_t h_big = big.local_of(sub.at(hl));
      const std::size_t y = big.local_mul(h_big, reps[j]);
      coset_of[y] = j;
      h_of[y] = hl;
    }

  const auto d = static_cast<Eigen::Index>(pi.dim());
  const auto total = static_cast<Eigen::Index>(k * pi.dim());
  std::vector<Matrix> mats(n, Matrix::Zero(total, total));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t y = big.local_mul(reps[i], g);
      const std::size_t j = coset_of[y];
      const std::size_t hl = h_of[y];
      const std::size_t h_big = big.local_of(sub.at(hl));
      const std::complex<double> scale = omega.value(reps[i], g) * std::conj(omega.value(h_big, reps[j]));
      mats[g].block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) = scale * pi(hl);
    }
  }
  return ProjRep(std::move(group), omega, std::move(mats));
}

ProjRep tensor(const ProjRep& a, const ProjRep& b) {
  require_same_group(a, b);
  std::vector<Matrix> mats(a.matrices().size());
  for (std::size_t g = 0; g < mats.size(); ++g) mats[g] = kron(a(g), b(g));
  return ProjRep(a.group(), a.cocycle() * b.cocycle(), std::move(mats));
}

ProjRep conjugate(const ProjRep& pi) {
  std::vector<Matrix> mats(pi.matrices().size());
  for (std::size_t g = 0; g < mats.size(); ++g) mats[g] = pi(g).conjugate();
  return ProjRep(pi.group(), pi.cocycle().inverse(), std::move(mats));
}

ProjRep restrict_to(const ProjRep& pi, SubgroupPtr sub) {
  if (!sub->is_subgroup_of(*pi.group())) throw DomainError("restriction to a non-subgroup");
  std::vector<Matrix> mats(sub->order());
  for (std::size_t x = 0; x < mats.size(); ++x) mats[x] = pi(pi.group()->local_of(sub->at(x)));
  Cocycle2 omega = pi.cocycle().restrict_to(sub);
  return ProjRep(std::move(sub), std::move(omega), std::move(mats));
}

ProjRep twist(const ProjRep& pi, const ScalarFunction& phi) {
  if (!(*phi.group == *pi.group())) throw DomainError("twisting function lives on another group");
  std::vector<Matrix> mats(pi.matrices().size());
  for (std::size_t g = 0; g < mats.size(); ++g) mats[g] = phi.value(g) * pi(g);
  return ProjRep(pi.group(), coboundary(phi) * pi.cocycle(), std::move(mats));
}

ProjRep transport(const ProjRep& pi, SubgroupPtr domain, const std::vector<std::size_t>& map) {
  const std::size_t n = domain->order();
  if (map.size() != n) throw DomainError("transport map has the wrong size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (map[domain->local_mul(x, y)] != pi.group()->local_mul(map[x], map[y]))
        throw DomainError("transport map is not a homomorphism");
  std::vector<Matrix> mats(n);
  for (std::size_t x = 0; x < n; ++x) mats[x] = pi(map[x]);
  Cocycle2 omega = pi.cocycle().pullback(domain, map);
  return ProjRep(std::move(domain), std::move(omega), std::move(mats));
}

ProjRep conjugate_by(const ProjRep& pi, SubgroupPtr domain, Elem c) {
  const FiniteGroup& G = domain->parent();
  std::vector<std::size_t> map(domain->order());
  for (std::size_t x = 0; x < map.size(); ++x) {
    auto local = pi.group()->local_index(G.conj(c, domain->at(x)));
    if (!local) throw DomainError("Ad c does not map the domain into the representation's group");
    map[x] = *local;
  }
  return transport(pi, std::move(domain), map);
}

ProjRep direct_sum(const ProjRep& a, const ProjRep& b) {
  require_same_cocycle(a, b);
  const auto da = static_cast<Eigen::Index>(a.dim()), db = static_cast<Eigen::Index>(b.dim());
  std::vector<Matrix> mats(a.matrices().size(), Matrix::Zero(da + db, da + db));
  for (std::size_t g = 0; g < mats.size(); ++g) {
    mats[g].topLeftCorner(da, da) = a(g);
    mats[g].bottomRightCorner(db, db) = b(g);
  }
  return ProjRep(a.group(), a.cocycle(), std::move(mats));
}

std::size_t hom_dim(const ProjRep& a, const ProjRep& b) {
  require_same_cocycle(a, b);
  const std::size_t n = a.group()->order();
  std::complex<double> trace = 0.0;
  for (std::size_t g = 0; g < n; ++g) trace += std::conj(a(g).trace()) * b(g).trace();
  trace /= static_cast<double>(n);
  const double rounded = std::round(trace.real());
  if (std::abs(trace - rounded) > kIntegralityTolerance)
    throw NumericalDegradation("numerical degradation: intertwiner dimension " + std::to_string(trace.real()) +
                               " is not integral");
  const auto result = static_cast<std::size_t>(rounded);

  if (a.dim() * b.dim() <= kSvdProjectorLimit) {
    const auto size = static_cast<Eigen::Index>(a.dim() * b.dim());
    Matrix projector = Matrix::Zero(size, size);
    for (std::size_t g = 0; g < n; ++g) projector += kron(b(g).transpose(), a(g).adjoint());
    projector /= static_cast<double>(n);
    Eigen::JacobiSVD<Matrix> svd(projector);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > kRankThreshold) ++rank;
    if (rank != result)
      throw NumericalDegradation("numerical degradation: projector rank " + std::to_string(rank) +
                                 " disagrees with its trace");
  }
  return result;
}

bool is_irreducible(const ProjRep& pi) { return hom_dim(pi, pi) == 1; }

bool equivalent(const ProjRep& a, const ProjRep& b) {
  if (a.dim() != b.dim() || !a.cocycle().same_values(b.cocycle())) return false;
  return fingerprint(a) == fingerprint(b);
}

ProjRep subrepresentation(const ProjRep& pi, const Matrix& basis) {
  std::vector<Matrix> mats(pi.matrices().size());
  for (std::size_t g = 0; g < mats.size(); ++g) {
    const Matrix image = pi(g) * basis;
    mats[g] = basis.adjoint() * image;
    if ((image - basis * mats[g]).cwiseAbs().maxCoeff() > kUnitaryTolerance)
      throw NumericalDegradation("numerical degradation: eigenspace is not invariant");
  }
  return ProjRep(pi.group(), pi.cocycle(), std::move(mats));
}

namespace {

void split_into(const ProjRep& pi, std::mt19937_64& rng, std::vector<ProjRep>& out) {
  if (pi.dim() == 1) {
    out.push_back(pi);
    return;
  }
  const auto d = static_cast<Eigen::Index>(pi.dim());
  const std::size_t n = pi.group()->order();
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    Matrix x(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) x(i, j) = {normal(rng), normal(rng)};
    x = (x + x.adjoint()).eval() * 0.5;
    Matrix avg = Matrix::Zero(d, d);
    for (std::size_t g = 0; g < n; ++g) avg += pi(g).adjoint() * x * pi(g);
    avg /= static_cast<double>(n);
    avg = (avg + avg.adjoint()).eval() * 0.5;

    Eigen::SelfAdjointEigenSolver<Matrix> solver(avg);
    const Eigen::VectorXd& values = solver.eigenvalues();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
    Eigen::Index begin = 0;
    for (Eigen::Index i = 1; i <= d; ++i) {
      if (i == d || values(i) - values(i - 1) > 1e-6 * scale) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    }
    if (clusters.size() == 1) {
      if (is_irreducible(pi)) {
        out.push_back(pi);
        return;
      }
      continue;
    }
    try {
      std::vector<ProjRep> pieces;
      for (auto [b, e] : clusters) pieces.push_back(subrepresentation(pi, solver.eigenvectors().middleCols(b, e - b)));
      for (const auto& piece : pieces) split_into(piece, rng, out);
      return;
    } catch (const NumericalDegradation&) {
      continue;
    }
  }
  throw NumericalDegradation("numerical degradation: irreducible splitting did not converge");
}

}  // namespace

std::vector<ProjRep> split_irreducibles(const ProjRep& pi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProjRep> out;
  split_into(pi, rng, out);
  return out;
}

RepMultiset decompose(const ProjRep& pi, std::uint64_t seed) {
  RepMultiset out;
  for (const auto& piece : split_irreducibles(pi, seed)) ++out[fingerprint(piece)];
  return out;
}

std::vector<Irrep> irreps(SubgroupPtr group, const Cocycle2& omega, std::uint64_t seed) {
  const ProjRep regular = regular_rep(group, omega);
  std::vector<Irrep> out;
  for (auto& piece : split_irreducibles(regular, seed)) {
    RepClass cls = fingerprint(piece);
    const bool known = std::any_of(out.begin(), out.end(), [&](const Irrep& r) { return r.cls == cls; });
    if (!known) out.push_back(Irrep{std::move(cls), std::move(piece)});
  }
  std::sort(out.begin(), out.end(), [](const Irrep& a, const Irrep& b) { return canonical_less(a.cls, b.cls); });
  std::size_t sum_sq = 0;
  for (const auto& r : out) sum_sq += r.cls.dim * r.cls.dim;
  if (sum_sq != group->order())
    throw InvariantViolation("irreducible list incomplete: sum of squared dimensions " + std::to_string(sum_sq) +
                             " != group order " + std::to_string(group->order()));
  return out;
}

std::vector<std::uint64_t> multiplicities(const ProjRep& pi, const std::vector<Irrep>& basis) {
  std::vector<std::uint64_t> out(basis.size(), 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = hom_dim(basis[i].rep, pi);
    total += out[i] * basis[i].cls.dim;
  }
  if (total != pi.dim())
    throw NumericalDegradation("numerical degradation: constituents account for " + std::to_string(total) + " of " +
                               std::to_string(pi.dim()) + " dimensions");
  return out;
}

}  // namespace heckefuse
