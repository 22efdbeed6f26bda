#include "matos/resonance.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "matos/exterior.hpp"
#include "matos/os_algebra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matos {

namespace {

// Multiplication by e_lambda from the degree-q quotient into the degree-(q+1)
// quotient, in the free (non-pivot) coordinates of the ideal slices.
RatMatrix multiplication_matrix(const Matroid& m, const LambdaVector& lambda, int q,
                                const GradedSubspace& ideal_q, const GradedSubspace& ideal_q1) {
  const std::vector<int> domain = ideal_q.free_columns();
  const std::vector<int> target = ideal_q1.free_columns();
  std::vector<int> target_pos(static_cast<std::size_t>(ideal_q1.ambient_dim()), -1);
  for (int i = 0; i < static_cast<int>(target.size()); ++i)
    target_pos[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] = i;

  RatMatrix mat(static_cast<int>(target.size()), static_cast<int>(domain.size()));
  std::vector<Rat> row(static_cast<std::size_t>(ideal_q1.ambient_dim()));
  for (int j = 0; j < static_cast<int>(domain.size()); ++j) {
    Subset t = ideal_q.index().mask(domain[static_cast<std::size_t>(j)]);
    std::fill(row.begin(), row.end(), Rat(0));
    for (int i = 1; i <= m.n(); ++i) {
      if (contains(t, i)) continue;
      const Rat& li = lambda[static_cast<std::size_t>(i - 1)];
      if (li == 0) continue;
      int sign = wedge_sign(bit_of(i), t);
      row[static_cast<std::size_t>(ideal_q1.index().column(t | bit_of(i)))] += sign > 0 ? li : -li;
    }
    ideal_q1.reduce(row);
    for (int c = 0; c < ideal_q1.ambient_dim(); ++c) {
      if (row[static_cast<std::size_t>(c)] == 0) continue;
      int pos = target_pos[static_cast<std::size_t>(c)];
      if (pos < 0) throw std::logic_error("reduced vector has a pivot coordinate");
      mat.at(pos, j) = row[static_cast<std::size_t>(c)];
    }
  }
  return mat;
}

bool matrix_is_zero(const RatMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) return false;
  return true;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rat& w = b.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

}  // namespace

ResonanceReport hp_dim(const Matroid& m, const LambdaVector& lambda, int p) {
  if (!m.is_simple()) throw std::invalid_argument("hp_dim requires a simple matroid");
  if (m.n() > 12) throw CapacityError("hp_dim limited to n <= 12");
  if (static_cast<int>(lambda.size()) != m.n()) throw std::invalid_argument("lambda has wrong length");
  if (std::all_of(lambda.begin(), lambda.end(), [](const Rat& v) { return v == 0; }))
    throw std::invalid_argument("lambda must be nonzero");
  if (p < 0 || p > m.rank() - 1) throw std::invalid_argument("degree p out of [0, rank-1]");

  GradedSubspace i_pm1 = p >= 1 ? ideal_component(m, p - 1) : GradedSubspace(m.n(), 0, RatMatrix(0, 1));
  GradedSubspace i_p = ideal_component(m, p);
  GradedSubspace i_p1 = ideal_component(m, p + 1);

  RatMatrix up = multiplication_matrix(m, lambda, p, i_p, i_p1);
  RatMatrix down = p >= 1 ? multiplication_matrix(m, lambda, p - 1, i_pm1, i_p)
                          : RatMatrix(up.cols(), 0);

  if (!matrix_is_zero(multiply(up, down))) throw std::logic_error("multiplication by e_lambda does not square to zero");

  const long dim_os_p = up.cols();
  const long rank_up = rref(up).rows();
  const long rank_down = rref(down).rows();

  ResonanceReport report;
  report.p = p;
  report.dim_kernel = dim_os_p - rank_up;
  report.dim_image = rank_down;
  report.dim_hp = report.dim_kernel - report.dim_image;
  if (report.dim_hp < 0) throw std::logic_error("negative cohomology dimension");
  report.member = report.dim_hp > 0;
  return report;
}

std::vector<LocalComponent> local_components(const Matroid& m) {
  if (!m.is_simple()) throw std::invalid_argument("local_components requires a simple matroid");
  if (m.n() > 16) throw CapacityError("local_components limited to n <= 16");
  std::vector<LocalComponent> out;
  if (m.rank() < 2) return out;
  for (Subset flat : m.flats_of_rank(2)) {
    const int size = set_size(flat);
    if (size < 3) continue;
    // {lambda : support in flat, coordinates sum to zero}.
    RatMatrix constraints(m.n() - size + 1, m.n());
    int row = 0;
    for (int e = 1; e <= m.n(); ++e) {
      if (!contains(flat, e)) constraints.at(row++, e - 1) = 1;
    }
    for (int e : elements_of(flat)) constraints.at(row, e - 1) = 1;
    out.push_back({flat, size - 1, kernel_basis(constraints)});
  }
  return out;
}

bool r1_membership(const Matroid& m, const LambdaVector& lambda) {
  if (m.rank() < 2) throw std::invalid_argument("R_1 needs rank >= 2");
  return hp_dim(m, lambda, 1).member;
}

std::vector<bool> r1_membership_batch_serial(const Matroid& m, const std::vector<LambdaVector>& lambdas) {
  std::vector<bool> out(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) out[i] = r1_membership(m, lambdas[i]);
  return out;
}

std::vector<bool> r1_membership_batch_parallel(const Matroid& m, const std::vector<LambdaVector>& lambdas) {
  std::vector<char> out(lambdas.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lambdas.size()); ++i)
    out[static_cast<std::size_t>(i)] = r1_membership(m, lambdas[static_cast<std::size_t>(i)]) ? 1 : 0;
  return {out.begin(), out.end()};
}

std::vector<bool> r1_membership_batch(const Matroid& m, const std::vector<LambdaVector>& lambdas) {
#ifdef _OPENMP
  if (lambdas.size() > 4) return r1_membership_batch_parallel(m, lambdas);
#endif
  return r1_membership_batch_serial(m, lambdas);
}

CandidateSpaceReport coloration_candidate_space(const Matroid& m, const Coloration& pi, unsigned seed) {
  if (!is_regular(m, pi)) throw std::invalid_argument("coloration is not regular");
  if (pi.k() < 3) throw std::invalid_argument("candidate spaces need k >= 3 classes");
  const int k = pi.k();

  // Constraints on the k class values: zero sum over every multicolored flat.
  std::vector<std::vector<Rat>> rows;
  for (Subset flat : m.flats_of_rank(2)) {
    int met = 0;
    for (Subset cls : pi.classes())
      if (flat & cls) ++met;
    if (met < 2) continue;
    std::vector<Rat> row(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) row[static_cast<std::size_t>(c)] = set_size(flat & pi.classes()[static_cast<std::size_t>(c)]);
    rows.push_back(std::move(row));
  }
  RatMatrix constraints(static_cast<int>(rows.size()), k);
  for (int r = 0; r < constraints.rows(); ++r)
    for (int c = 0; c < k; ++c) constraints.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];

  RatMatrix class_basis = kernel_basis(constraints);

  CandidateSpaceReport report;
  report.dimension = class_basis.rows();
  report.basis = RatMatrix(class_basis.rows(), m.n());
  for (int r = 0; r < class_basis.rows(); ++r)
    for (int e = 1; e <= m.n(); ++e)
      report.basis.at(r, e - 1) = class_basis.at(r, pi.class_of(e));

  std::vector<LambdaVector> samples;
  for (int r = 0; r < report.basis.rows(); ++r) {
    LambdaVector lambda(static_cast<std::size_t>(m.n()));
    for (int e = 0; e < m.n(); ++e) lambda[static_cast<std::size_t>(e)] = report.basis.at(r, e);
    samples.push_back(std::move(lambda));
  }
  if (report.dimension > 0) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 9);
    LambdaVector lambda(static_cast<std::size_t>(m.n()), Rat(0));
    for (int r = 0; r < report.basis.rows(); ++r) {
      int c = coeff(rng);
      for (int e = 0; e < m.n(); ++e) lambda[static_cast<std::size_t>(e)] += Rat(c) * report.basis.at(r, e);
    }
    if (!std::all_of(lambda.begin(), lambda.end(), [](const Rat& v) { return v == 0; }))
      samples.push_back(std::move(lambda));
  }

  std::vector<bool> members = r1_membership_batch(m, samples);
  report.all_members = !samples.empty();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    report.samples.emplace_back(samples[i], members[i]);
    report.all_members = report.all_members && members[i];
  }
  return report;
}

}  // namespace matos
