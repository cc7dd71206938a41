#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "heckefuse/catalog.hpp"

namespace heckefuse {

struct CheckResult {
  std::string module;  // perm-core | cocycle | projrep | hecke | ext-hecke | elementary | cli-catalog
  std::string name;
  bool ok = true;
  bool skipped = false;
  std::string detail;  // witness on failure, reason when skipped
  double seconds = 0;
};

struct CheckOptions {
  std::uint64_t seed = 0;
  std::size_t random_trials = 100;          // randomized representative re-draws per table
  std::size_t max_group_order = kDefaultOrderCap;
  std::size_t exhaustive_triples = 8000;    // above this, triple checks are sampled
  std::size_t sampled_triples = 2000;
  unsigned gl2_bound = 12;
  unsigned bc_bound = 12;
};

/// The invariant suite for one catalog entry.  Finite pairs run every
/// module's invariants; gl2 and bc run the Hecke-layer invariants.  Failures
/// never throw: exceptions are caught and reported as the witness.
std::vector<CheckResult> run_checks(const CatalogEntry& entry, const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace heckefuse
