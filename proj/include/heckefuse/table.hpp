#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "heckefuse/elementary.hpp"
#include "heckefuse/ext_hecke.hpp"
#include "heckefuse/hecke.hpp"
#include "heckefuse/projrep.hpp"

namespace heckefuse {

struct TableBasisEntry {
  BasisKey key;
  std::string name;   // "[K:1]" or "H((0 1),1)"
  std::string label;  // double-coset name
  std::string delta;  // canonical representative in cycle notation
  RepClass cls;
  Rational dim_left, dim_right, lambda;
};

/// All products of basis elements.  products[i * n + j] = basis[i] * basis[j].
struct FusionTable {
  std::string pair;
  std::string kind;     // "ext-hecke" | "elementary"
  std::string cocycle;  // "trivial" for ext-hecke
  std::uint64_t seed = 0;
  std::vector<TableBasisEntry> basis;
  std::vector<ExtHeckeElement> products;

  std::size_t size() const { return basis.size(); }
  const ExtHeckeElement& product(std::size_t i, std::size_t j) const { return products[i * basis.size() + j]; }
};

enum class Schedule { Serial, Parallel };

/// Seed 0 uses the canonical representatives throughout.  A nonzero seed
/// re-draws every representative choice from a stream derived from
/// (seed, i, j), so the result does not depend on the schedule.
FusionTable ext_table(const ExtHeckePair& pair, const std::string& name, std::uint64_t seed = 0,
                      Schedule schedule = Schedule::Parallel);
FusionTable elementary_table(const ElementaryCalculus& calc, const std::string& name, const std::string& cocycle,
                             std::uint64_t seed = 0, Schedule schedule = Schedule::Parallel);

bool same_products(const FusionTable& a, const FusionTable& b);

/// Schema 1, keys in a fixed order, two-space indent, trailing newline.
std::string to_json(const FusionTable& table);
std::string to_text(const FusionTable& table);

/// Independent stream for the product (i, j) of a table drawn with `seed`.
std::uint64_t product_seed(std::uint64_t seed, std::size_t i, std::size_t j);

}  // namespace heckefuse
