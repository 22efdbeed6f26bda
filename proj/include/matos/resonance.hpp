#pragma once

#include <utility>
#include <vector>

#include "matos/coloration.hpp"
#include "matos/linalg.hpp"
#include "matos/matroid.hpp"

namespace matos {

struct ResonanceReport {
  int p = 0;
  long dim_kernel = 0;  // of multiplication OS_p -> OS_{p+1}
  long dim_image = 0;   // of multiplication OS_{p-1} -> OS_p
  long dim_hp = 0;      // kernel - image
  bool member = false;  // lambda in R_p
};

using LambdaVector = std::vector<Rat>;

/// Dimensions of H^p of the complex (OS, e_lambda wedge -) at a rational
/// parameter point. The composite of consecutive multiplication matrices is
/// checked to vanish on every call.
ResonanceReport hp_dim(const Matroid& m, const LambdaVector& lambda, int p);

struct LocalComponent {
  Subset flat;
  int dimension;    // |flat| - 1
  RatMatrix basis;  // RREF rows in lambda coordinates
};

/// One component of R_1 per rank-2 flat with at least 3 elements.
std::vector<LocalComponent> local_components(const Matroid& m);

bool r1_membership(const Matroid& m, const LambdaVector& lambda);

/// Batch membership; the parallel variant fans the independent lambda checks
/// over threads and must agree with the serial one.
std::vector<bool> r1_membership_batch_serial(const Matroid& m, const std::vector<LambdaVector>& lambdas);
std::vector<bool> r1_membership_batch_parallel(const Matroid& m, const std::vector<LambdaVector>& lambdas);
std::vector<bool> r1_membership_batch(const Matroid& m, const std::vector<LambdaVector>& lambdas);

struct CandidateSpaceReport {
  int dimension = 0;
  RatMatrix basis;  // rows are lambda vectors spanning the candidate space
  std::vector<std::pair<LambdaVector, bool>> samples;
  bool all_members = false;
};

/// Solution space of "lambda constant on classes, zero-sum on multicolored
/// rank-2 flats" for a regular coloration with k >= 3 classes, with R_1
/// membership evidence for its basis vectors and one random combination.
/// Reports facts only; it never asserts the space is a component.
CandidateSpaceReport coloration_candidate_space(const Matroid& m, const Coloration& pi,
                                                unsigned seed = 20240901);

}  // namespace matos
