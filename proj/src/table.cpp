#include "heckefuse/table.hpp"

#include <cmath>
#include <exception>
#include <random>
#include <sstream>

#include <json.hpp>

namespace heckefuse {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Fuser>
std::vector<ExtHeckeElement> all_products(const Fuser& fuser, const std::vector<BasisKey>& keys, std::uint64_t seed,
                                          Schedule schedule) {
  const std::size_t n = keys.size();
  std::vector<ExtHeckeElement> out(n * n);
  std::vector<std::exception_ptr> errors(n * n);
  auto one = [&](std::size_t slot) {
    try {
      if (seed == 0) {
        out[slot] = fuser.fuse_basis(keys[slot / n], keys[slot % n]);
      } else {
        std::mt19937_64 rng(product_seed(seed, slot / n, slot % n));
        out[slot] = fuser.fuse_basis(keys[slot / n], keys[slot % n], &rng);
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  };
  if (schedule == Schedule::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t slot = 0; slot < n * n; ++slot) one(slot);
  } else {
    for (std::size_t slot = 0; slot < n * n; ++slot) one(slot);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

TableBasisEntry entry_for(const DoubleCosetSystem& sys, const FiniteHecke& hecke, BasisKey key, const Irrep& irrep,
                          std::string name) {
  TableBasisEntry e;
  e.key = key;
  e.name = std::move(name);
  e.label = sys.name(key.label);
  e.delta = sys.group()->element(sys[key.label].representative).to_cycles();
  e.cls = irrep.cls;
  const Integer d = irrep.cls.dim;
  e.dim_left = Rational(hecke.left_count(key.label) * d);
  e.dim_right = Rational(hecke.right_count(key.label) * d);
  e.lambda = modular_lambda(hecke, key.label);
  return e;
}

nlohmann::ordered_json character_json(const RepClass& cls) {
  auto round6 = [](std::int64_t v) { return static_cast<double>(v) * kCharacterGrid; };
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [re, im] : cls.character) out.push_back({round6(re), round6(im)});
  return out;
}

}  // namespace

std::uint64_t product_seed(std::uint64_t seed, std::size_t i, std::size_t j) {
  return splitmix(splitmix(seed) ^ splitmix((static_cast<std::uint64_t>(i) << 32) | j));
}

FusionTable ext_table(const ExtHeckePair& pair, const std::string& name, std::uint64_t seed, Schedule schedule) {
  FusionTable t;
  t.pair = name;
  t.kind = "ext-hecke";
  t.cocycle = "trivial";
  t.seed = seed;
  for (const BasisKey& k : pair.basis())
    t.basis.push_back(entry_for(pair.system(), pair.hecke(), k, pair.irreps_at(k.label)[k.irrep], pair.format_key(k)));
  t.products = all_products(pair, pair.basis(), seed, schedule);
  return t;
}

FusionTable elementary_table(const ElementaryCalculus& calc, const std::string& name, const std::string& cocycle,
                             std::uint64_t seed, Schedule schedule) {
  FusionTable t;
  t.pair = name;
  t.kind = "elementary";
  t.cocycle = cocycle;
  t.seed = seed;
  const FiniteHecke hecke(calc.system_ptr());
  for (const BasisKey& k : calc.basis())
    t.basis.push_back(entry_for(calc.system(), hecke, k, calc.irreps_at(k.label)[k.irrep], calc.format_key(k)));
  t.products = all_products(calc, calc.basis(), seed, schedule);
  return t;
}

bool same_products(const FusionTable& a, const FusionTable& b) {
  if (a.basis.size() != b.basis.size()) return false;
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (a.basis[i].key != b.basis[i].key || !(a.basis[i].cls == b.basis[i].cls)) return false;
  return a.products == b.products;
}

std::string to_json(const FusionTable& table) {
  using json = nlohmann::ordered_json;
  json out;
  out["schema"] = 1;
  out["pair"] = table.pair;
  out["kind"] = table.kind;
  out["cocycle"] = table.cocycle;
  out["seed"] = table.seed;
  json basis = json::array();
  for (const auto& e : table.basis) {
    json b;
    b["name"] = e.name;
    b["label"] = e.label;
    b["delta"] = e.delta;
    b["irrep"] = e.key.irrep;
    b["repclass"] = {{"dim", e.cls.dim}, {"character", character_json(e.cls)}};
    b["dims"] = {{"left", to_string(e.dim_left)}, {"right", to_string(e.dim_right)}};
    b["lambda"] = to_string(e.lambda);
    basis.push_back(std::move(b));
  }
  out["basis"] = std::move(basis);
  json products = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      json terms = json::array();
      for (const auto& [z, m] : table.product(i, j).terms) {
        std::size_t zi = 0;
        while (zi < table.size() && table.basis[zi].key != z) ++zi;
        terms.push_back({{"z", table.basis.at(zi).name}, {"mult", m}});
      }
      products.push_back({{"x", table.basis[i].name}, {"y", table.basis[j].name}, {"terms", std::move(terms)}});
    }
  out["products"] = std::move(products);
  return out.dump(2) + "\n";
}

std::string to_text(const FusionTable& table) {
  std::ostringstream os;
  os << table.kind << " fusion table for " << table.pair << " (cocycle " << table.cocycle << ", " << table.size()
     << " basis elements)\n";
  for (const auto& e : table.basis)
    os << "  " << e.name << "  dim " << e.cls.dim << "  dims " << to_string(e.dim_left) << "/"
       << to_string(e.dim_right) << "  lambda " << to_string(e.lambda) << "\n";
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      os << table.basis[i].name << " * " << table.basis[j].name << " = ";
      const auto& p = table.product(i, j);
      if (p.empty()) os << "0";
      bool first = true;
      for (const auto& [z, m] : p.terms) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        for (const auto& e : table.basis)
          if (e.key == z) os << e.name;
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace heckefuse
