#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "heckefuse/cocycle.hpp"
#include "heckefuse/group.hpp"

namespace heckefuse {

/// "trivial", "heisenberg N k" (on the first two generators of Gamma), or an
/// explicit exponent table over the local indices of Gamma.
struct CocycleSpec {
  enum class Kind { Trivial, Heisenberg, Table };
  Kind kind = Kind::Trivial;
  std::uint32_t n = 1;  // modulus
  std::uint32_t k = 0;  // Heisenberg parameter
  std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> entries;

  std::string describe() const;
};

/// Parses the one-line forms "trivial", "heisenberg N k" and "table m"; table
/// entries come from the catalog body.
CocycleSpec parse_cocycle_spec(std::string_view text, std::size_t line = 1, std::size_t column = 1);

struct CatalogEntry {
  std::string name;
  std::string backend = "finite";  // finite | gl2 | bc
  std::size_t degree = 0;
  std::vector<std::string> g_generators;
  std::vector<std::string> gamma_generators;
  std::optional<CocycleSpec> omega;
  std::string note;
};

/// Record format, one block per pair:
///
///   pair NAME
///   backend finite|gl2|bc        (optional, default finite)
///   degree N
///   G = ["(0 1)", "(0 1 2 3)"]
///   Gamma = ["(0 1)", "(0 1 2)"]
///   omega heisenberg 2 1 | omega table m   (then lines "g h e")
///   note free text
///   end
///
/// Blank lines and lines starting with '#' are ignored.  Errors carry the
/// line and column of the offending token.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// The bundled pairs: S3_in_S4, Z3_regular, D4_klein, Heis3, D4_in_S4, gl2, bc.
const std::vector<CatalogEntry>& bundled_catalog();
std::string_view bundled_catalog_text();

/// A finite catalog pair with its groups built.
struct FinitePair {
  CatalogEntry entry;
  GroupPtr group;
  SubgroupPtr gamma;
  std::shared_ptr<const DoubleCosetSystem> system;
  Cocycle2 omega;  // trivial when the entry has none
};

FinitePair load_finite_pair(const CatalogEntry& entry, std::size_t max_group_order = kDefaultOrderCap);

Cocycle2 build_cocycle(const CocycleSpec& spec, const SubgroupPtr& gamma);

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name);

}  // namespace heckefuse
