#include "heckefuse/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "heckefuse/errors.hpp"

namespace heckefuse {

namespace {

constexpr std::string_view kBundled = R"cat(# Bundled Hecke pairs.  Points are 0-based; cycles in the usual notation.

pair S3_in_S4
degree 4
G = ["(0 1)", "(0 1 2 3)"]
Gamma = ["(0 1)", "(0 1 2)"]
note Gamma = Stab(3) in S4: two double cosets, the nontrivial one a union of 3 right cosets.
end

pair Z3_regular
degree 3
G = ["(0 1 2)", "(0 1)"]
Gamma = ["(0 1 2)"]
note Z/3 acting regularly on 3 points inside its normalizer S3.
end

pair D4_klein
degree 4
G = ["(0 1 2 3)", "(0 2)"]
Gamma = ["(0 2)", "(1 3)"]
omega heisenberg 2 1
note Klein four {e, (0 2), (1 3), (0 2)(1 3)} normal in D4, with the nontrivial Klein-four class.
end

pair Heis3
degree 9
G = ["(0 1 2)(3 4 5)(6 7 8)", "(0 3 6)(1 4 7)(2 5 8)", "(1 3)(2 6)(5 7)", "(1 2)(3 6)(4 8)(5 7)"]
Gamma = ["(0 1 2)(3 4 5)(6 7 8)", "(0 3 6)(1 4 7)(2 5 8)"]
omega heisenberg 3 1
note (Z/3)^2 acting regularly on x + 3y, extended by the coordinate swap and by -1 (order 36).
end

pair D4_in_S4
degree 4
G = ["(0 1)", "(0 1 2 3)"]
Gamma = ["(0 1 2 3)", "(0 2)"]
note Dihedral group of order 8, a Sylow 2-subgroup of S4: two double cosets, the nontrivial one of size 16.
end

pair gl2
backend gl2
note SL(2,Z) < GL(2,Q), positive determinant; plain Hecke layer only.
end

pair bc
backend bc
note (1, Z) < Q+* x| Q, the ax+b pair; plain Hecke layer only.
end
)cat";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t column_of(std::string_view line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

std::uint64_t parse_number(std::string_view token, std::size_t line, std::size_t column) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw ParseError("expected a nonnegative integer, got '" + std::string(token) + "'", line, column);
  return value;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> parse_generator_list(std::string_view text, std::size_t line, std::size_t column) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed generator list", line, column + (e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!parsed.is_array()) throw ParseError("generator list must be a [...] list", line, column);
  std::vector<std::string> out;
  for (const auto& g : parsed) {
    if (!g.is_string()) throw ParseError("generators must be quoted cycle strings", line, column);
    out.push_back(g.get<std::string>());
  }
  return out;
}

}  // namespace

std::string CocycleSpec::describe() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Heisenberg:
      return "heisenberg " + std::to_string(n) + " " + std::to_string(k);
    case Kind::Table:
      return "table " + std::to_string(n) + " (" + std::to_string(entries.size()) + " entries)";
  }
  return "trivial";
}

CocycleSpec parse_cocycle_spec(std::string_view text, std::size_t line, std::size_t column) {
  const auto words = split_words(text);
  auto col = [&](std::size_t i) { return column + static_cast<std::size_t>(words[i].data() - text.data()); };
  CocycleSpec spec;
  if (words.empty()) throw ParseError("empty cocycle specification", line, column);
  if (words[0] == "trivial") {
    if (words.size() != 1) throw ParseError("unexpected token after 'trivial'", line, col(1));
    return spec;
  }
  if (words[0] == "heisenberg") {
    if (words.size() != 3) throw ParseError("expected 'heisenberg N k'", line, col(0));
    spec.kind = CocycleSpec::Kind::Heisenberg;
    spec.n = static_cast<std::uint32_t>(parse_number(words[1], line, col(1)));
    spec.k = static_cast<std::uint32_t>(parse_number(words[2], line, col(2)));
    if (spec.n < 2) throw ParseError("heisenberg needs N >= 2", line, col(1));
    if (spec.k >= spec.n) throw ParseError("heisenberg needs 0 <= k < N", line, col(2));
    return spec;
  }
  if (words[0] == "table") {
    if (words.size() != 2) throw ParseError("expected 'table m'", line, col(0));
    spec.kind = CocycleSpec::Kind::Table;
    spec.n = static_cast<std::uint32_t>(parse_number(words[1], line, col(1)));
    if (spec.n < 1) throw ParseError("modulus must be positive", line, col(1));
    return spec;
  }
  throw ParseError("unknown cocycle kind '" + std::string(words[0]) + "'", line, col(0));
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::optional<CatalogEntry> current;
  bool in_table = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto words = split_words(line);
    const std::string_view key = words[0];
    const std::size_t key_col = column_of(raw, key);

    if (!current) {
      if (key != "pair") throw ParseError("expected 'pair NAME'", line_no, key_col);
      if (words.size() != 2) throw ParseError("'pair' takes exactly one name", line_no, key_col);
      current.emplace();
      current->name = std::string(words[1]);
    } else if (key == "end") {
      if (current->backend == "finite") {
        if (current->degree == 0) throw ParseError("pair '" + current->name + "' has no degree", line_no, key_col);
        if (current->g_generators.empty() && current->gamma_generators.empty())
          throw ParseError("pair '" + current->name + "' has no generators", line_no, key_col);
      }
      out.push_back(std::move(*current));
      current.reset();
      in_table = false;
    } else if (in_table && std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      if (words.size() != 3) throw ParseError("table rows are 'g h exponent'", line_no, key_col);
      current->omega->entries.emplace_back(parse_number(words[0], line_no, key_col),
                                           parse_number(words[1], line_no, column_of(raw, words[1])),
                                           static_cast<std::uint32_t>(parse_number(words[2], line_no, column_of(raw, words[2]))));
    } else if (key == "backend") {
      if (words.size() != 2 || (words[1] != "finite" && words[1] != "gl2" && words[1] != "bc"))
        throw ParseError("backend must be finite, gl2 or bc", line_no, key_col);
      current->backend = std::string(words[1]);
    } else if (key == "degree") {
      if (words.size() != 2) throw ParseError("'degree' takes one number", line_no, key_col);
      current->degree = parse_number(words[1], line_no, column_of(raw, words[1]));
    } else if (key == "G" || key == "Gamma") {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected '=' after " + std::string(key), line_no, key_col);
      const std::string_view list = trim(line.substr(eq + 1));
      auto gens = parse_generator_list(list, line_no, column_of(raw, list));
      (key == "G" ? current->g_generators : current->gamma_generators) = std::move(gens);
    } else if (key == "omega") {
      const std::string_view rest = trim(line.substr(key.size()));
      current->omega = parse_cocycle_spec(rest, line_no, column_of(raw, rest));
      in_table = current->omega->kind == CocycleSpec::Kind::Table;
    } else if (key == "note") {
      current->note = std::string(trim(line.substr(key.size())));
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, key_col);
    }
    if (end == text.size()) break;
  }
  if (current) throw ParseError("pair '" + current->name + "' is missing 'end'", line_no, 1);
  return out;
}

std::string_view bundled_catalog_text() { return kBundled; }

const std::vector<CatalogEntry>& bundled_catalog() {
  static const std::vector<CatalogEntry> catalog = parse_catalog(kBundled);
  return catalog;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name) {
  for (const auto& e : catalog)
    if (e.name == name) return e;
  throw DomainError("unknown pair '" + std::string(name) + "'");
}

Cocycle2 build_cocycle(const CocycleSpec& spec, const SubgroupPtr& gamma) {
  switch (spec.kind) {
    case CocycleSpec::Kind::Trivial:
      return Cocycle2::trivial(gamma);
    case CocycleSpec::Kind::Heisenberg: {
      const auto& gens = gamma->generators();
      if (gens.size() != 2) throw DomainError("heisenberg cocycles need Gamma generated by two elements");
      return heisenberg_cocycle(gamma, gens[0], gens[1], spec.n, spec.k);
    }
    case CocycleSpec::Kind::Table: {
      const std::size_t n = gamma->order();
      std::vector<std::uint32_t> table(n * n, 0);
      for (const auto& [g, h, e] : spec.entries) {
        if (g >= n || h >= n) throw DomainError("cocycle table index out of range");
        table[g * n + h] = e % spec.n;
      }
      return Cocycle2::from_table(gamma, spec.n, std::move(table));
    }
  }
  return Cocycle2::trivial(gamma);
}

FinitePair load_finite_pair(const CatalogEntry& entry, std::size_t max_group_order) {
  if (entry.backend != "finite") throw DomainError("pair '" + entry.name + "' is not a finite pair");
  std::vector<Perm> g_gens, gamma_gens;
  for (const auto& s : entry.g_generators) g_gens.push_back(Perm::from_cycles(s, entry.degree));
  for (const auto& s : entry.gamma_generators) gamma_gens.push_back(Perm::from_cycles(s, entry.degree));
  std::vector<Perm> all = g_gens;
  all.insert(all.end(), gamma_gens.begin(), gamma_gens.end());
  FinitePair out;
  out.entry = entry;
  out.group = FiniteGroup::closure(entry.degree, all, max_group_order);
  std::vector<Elem> idx;
  for (const auto& p : gamma_gens) idx.push_back(out.group->index_of(p));
  out.gamma = Subgroup::generated(out.group, idx);
  out.system = std::make_shared<const DoubleCosetSystem>(out.group, out.gamma);
  out.omega = entry.omega ? build_cocycle(*entry.omega, out.gamma) : Cocycle2::trivial(out.gamma);
  return out;
}

}  // namespace heckefuse
