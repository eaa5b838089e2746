#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fop/constructions.hpp"
#include "fop/errors.hpp"
#include "fop/formal.hpp"
#include "fop/group.hpp"

namespace fop {

// ---------------------------------------------------------------------------
// Scenario files. Line oriented, '#' starts a comment, tokens separated by
// whitespace. See README for the full schema. Parsing keeps every element
// literal verbatim so serialize(parse(text)) round-trips losslessly.
// ---------------------------------------------------------------------------

struct GroupSpec {
  enum class Kind { ElementaryAbelian, Dihedral, Wreath, Generators };
  Kind kind = Kind::ElementaryAbelian;
  int n = 0;        // parameter for the named constructors
  int npoints = 0;  // generators form
  std::vector<std::string> generators;  // signed-perm literals

  bool operator==(const GroupSpec&) const = default;
};

struct CocycleSpec {
  enum class Kind { Trivial, BilinearForm, Table };
  Kind kind = Kind::Trivial;
  std::vector<std::string> rows;  // bitstring rows, or +- table rows

  bool operator==(const CocycleSpec&) const = default;
};

struct CharacterSpec {
  enum class Kind { Trivial, Solve, GeneratorValues, Table };
  Kind kind = Kind::Trivial;
  std::vector<std::pair<std::string, int>> values;  // (element literal, +-1)

  bool operator==(const CharacterSpec&) const = default;
};

struct SubgroupSpec {
  std::string role;  // "H", "H2" or "K"
  std::vector<std::string> generators;  // element literals
  CharacterSpec character;

  bool operator==(const SubgroupSpec&) const = default;
};

struct ScenarioSpec {
  std::string name;
  GroupSpec group;
  CocycleSpec cocycle;
  std::vector<SubgroupSpec> subgroups;  // in file order
  std::vector<std::string> symbols_a, symbols_b;
  bool amicable = false;

  bool operator==(const ScenarioSpec&) const = default;
};

namespace detail {

inline input_error parse_error(int line, const std::string& msg) {
  return input_error("scenario parse error at line " + std::to_string(line) + ": " + msg);
}

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace detail

inline ScenarioSpec parse_scenario(const std::string& text) {
  ScenarioSpec spec;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool saw_scenario = false, saw_group = false, saw_cocycle = false;
  int pending_table_rows = 0;

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;

    if (pending_table_rows > 0) {
      spec.cocycle.rows.push_back(toks[0]);
      if (toks.size() != 1) throw detail::parse_error(lineno, "cocycle table rows hold one token per line");
      --pending_table_rows;
      continue;
    }

    const std::string& kw = toks[0];
    if (kw == "scenario") {
      if (toks.size() != 2) throw detail::parse_error(lineno, "scenario takes exactly one name");
      spec.name = toks[1];
      saw_scenario = true;
    } else if (kw == "group") {
      if (toks.size() < 2) throw detail::parse_error(lineno, "group needs a kind");
      saw_group = true;
      const std::string& kind = toks[1];
      if (kind == "elementary_abelian" || kind == "dihedral" || kind == "wreath") {
        if (toks.size() != 3) throw detail::parse_error(lineno, "group " + kind + " takes one integer parameter");
        spec.group.kind = kind == "elementary_abelian" ? GroupSpec::Kind::ElementaryAbelian
                          : kind == "dihedral"         ? GroupSpec::Kind::Dihedral
                                                       : GroupSpec::Kind::Wreath;
        try {
          spec.group.n = std::stoi(toks[2]);
        } catch (...) {
          throw detail::parse_error(lineno, "group parameter must be an integer");
        }
      } else if (kind == "generators") {
        if (toks.size() < 3) throw detail::parse_error(lineno, "group generators needs a point count");
        spec.group.kind = GroupSpec::Kind::Generators;
        try {
          spec.group.npoints = std::stoi(toks[2]);
        } catch (...) {
          throw detail::parse_error(lineno, "point count must be an integer");
        }
        spec.group.generators.assign(toks.begin() + 3, toks.end());
      } else {
        throw detail::parse_error(lineno, "unknown group kind '" + kind + "'");
      }
    } else if (kw == "cocycle") {
      if (toks.size() < 2) throw detail::parse_error(lineno, "cocycle needs a kind");
      saw_cocycle = true;
      const std::string& kind = toks[1];
      if (kind == "trivial") {
        spec.cocycle.kind = CocycleSpec::Kind::Trivial;
      } else if (kind == "bilinear_form") {
        spec.cocycle.kind = CocycleSpec::Kind::BilinearForm;
        spec.cocycle.rows.assign(toks.begin() + 2, toks.end());
        if (spec.cocycle.rows.empty()) throw detail::parse_error(lineno, "bilinear_form needs bit rows");
      } else if (kind == "table") {
        if (toks.size() != 3) throw detail::parse_error(lineno, "cocycle table takes the row count");
        spec.cocycle.kind = CocycleSpec::Kind::Table;
        try {
          pending_table_rows = std::stoi(toks[2]);
        } catch (...) {
          throw detail::parse_error(lineno, "cocycle table row count must be an integer");
        }
        if (pending_table_rows <= 0) throw detail::parse_error(lineno, "cocycle table row count must be positive");
      } else {
        throw detail::parse_error(lineno, "unknown cocycle kind '" + kind + "'");
      }
    } else if (kw == "subgroup") {
      if (toks.size() < 2) throw detail::parse_error(lineno, "subgroup needs a role (H, H2 or K)");
      SubgroupSpec sg;
      sg.role = toks[1];
      if (sg.role != "H" && sg.role != "H2" && sg.role != "K")
        throw detail::parse_error(lineno, "subgroup role must be H, H2 or K");
      sg.generators.assign(toks.begin() + 2, toks.end());
      for (const auto& existing : spec.subgroups)
        if (existing.role == sg.role) throw detail::parse_error(lineno, "duplicate subgroup role " + sg.role);
      spec.subgroups.push_back(std::move(sg));
    } else if (kw == "character") {
      if (toks.size() < 3) throw detail::parse_error(lineno, "character needs a role and a kind");
      SubgroupSpec* sg = nullptr;
      for (auto& s : spec.subgroups)
        if (s.role == toks[1]) sg = &s;
      if (!sg) throw detail::parse_error(lineno, "character for undeclared subgroup " + toks[1]);
      const std::string& kind = toks[2];
      CharacterSpec ch;
      if (kind == "trivial") {
        ch.kind = CharacterSpec::Kind::Trivial;
      } else if (kind == "solve") {
        ch.kind = CharacterSpec::Kind::Solve;
      } else if (kind == "gens" || kind == "table") {
        ch.kind = kind == "gens" ? CharacterSpec::Kind::GeneratorValues : CharacterSpec::Kind::Table;
        for (std::size_t i = 3; i < toks.size(); ++i) {
          auto eq = toks[i].rfind('=');
          if (eq == std::string::npos || eq + 2 != toks[i].size())
            throw detail::parse_error(lineno, "character values look like ELEM=+ or ELEM=-");
          char s = toks[i][eq + 1];
          if (s != '+' && s != '-') throw detail::parse_error(lineno, "character value sign must be + or -");
          ch.values.emplace_back(toks[i].substr(0, eq), s == '+' ? 1 : -1);
        }
        if (ch.values.empty()) throw detail::parse_error(lineno, "character " + kind + " needs values");
      } else {
        throw detail::parse_error(lineno, "unknown character kind '" + kind + "'");
      }
      sg->character = std::move(ch);
    } else if (kw == "symbols") {
      if (toks.size() < 3) throw detail::parse_error(lineno, "symbols needs a factor (A or B) and names");
      if (toks[1] == "A")
        spec.symbols_a.assign(toks.begin() + 2, toks.end());
      else if (toks[1] == "B")
        spec.symbols_b.assign(toks.begin() + 2, toks.end());
      else
        throw detail::parse_error(lineno, "symbols factor must be A or B");
    } else if (kw == "amicable") {
      spec.amicable = true;
    } else {
      throw detail::parse_error(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (pending_table_rows > 0) throw detail::parse_error(lineno, "cocycle table ended early");
  if (!saw_scenario) throw input_error("scenario parse error: missing 'scenario NAME'");
  if (!saw_group) throw input_error("scenario parse error: missing 'group' block");
  if (!saw_cocycle) throw input_error("scenario parse error: missing 'cocycle' block");
  return spec;
}

inline std::string serialize_scenario(const ScenarioSpec& spec) {
  std::ostringstream os;
  os << "scenario " << spec.name << "\n";
  switch (spec.group.kind) {
    case GroupSpec::Kind::ElementaryAbelian:
      os << "group elementary_abelian " << spec.group.n << "\n";
      break;
    case GroupSpec::Kind::Dihedral:
      os << "group dihedral " << spec.group.n << "\n";
      break;
    case GroupSpec::Kind::Wreath:
      os << "group wreath " << spec.group.n << "\n";
      break;
    case GroupSpec::Kind::Generators:
      os << "group generators " << spec.group.npoints;
      for (const auto& g : spec.group.generators) os << ' ' << g;
      os << "\n";
      break;
  }
  switch (spec.cocycle.kind) {
    case CocycleSpec::Kind::Trivial:
      os << "cocycle trivial\n";
      break;
    case CocycleSpec::Kind::BilinearForm:
      os << "cocycle bilinear_form";
      for (const auto& r : spec.cocycle.rows) os << ' ' << r;
      os << "\n";
      break;
    case CocycleSpec::Kind::Table:
      os << "cocycle table " << spec.cocycle.rows.size() << "\n";
      for (const auto& r : spec.cocycle.rows) os << r << "\n";
      break;
  }
  for (const auto& sg : spec.subgroups) {
    os << "subgroup " << sg.role;
    for (const auto& g : sg.generators) os << ' ' << g;
    os << "\n";
    os << "character " << sg.role << ' ';
    switch (sg.character.kind) {
      case CharacterSpec::Kind::Trivial:
        os << "trivial";
        break;
      case CharacterSpec::Kind::Solve:
        os << "solve";
        break;
      case CharacterSpec::Kind::GeneratorValues:
      case CharacterSpec::Kind::Table:
        os << (sg.character.kind == CharacterSpec::Kind::GeneratorValues ? "gens" : "table");
        for (const auto& [e, s] : sg.character.values) os << ' ' << e << '=' << (s > 0 ? '+' : '-');
        break;
    }
    os << "\n";
  }
  if (!spec.symbols_a.empty()) {
    os << "symbols A";
    for (const auto& s : spec.symbols_a) os << ' ' << s;
    os << "\n";
  }
  if (!spec.symbols_b.empty()) {
    os << "symbols B";
    for (const auto& s : spec.symbols_b) os << ' ' << s;
    os << "\n";
  }
  if (spec.amicable) os << "amicable\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Element literals. Forms accepted everywhere: "sp:IMAGE:SIGNS" (signed
// permutation one-line notation) and "id:K". Friendly forms per group kind:
// "bits:0111" for elementary-abelian vectors and the wreath base,
// "rot:K" / "rot:K,bits:V" for wreath elements, "aff:+,B" / "aff:-,B" for
// dihedral affine maps.
// ---------------------------------------------------------------------------

inline int resolve_element(const FiniteGroup& grp, const std::string& literal) {
  auto starts = [&](const char* p) { return literal.rfind(p, 0) == 0; };
  if (starts("id:")) {
    int id = std::stoi(literal.substr(3));
    if (id < 0 || static_cast<std::size_t>(id) >= grp.order()) throw input_error("element literal out of range: " + literal);
    return id;
  }
  if (starts("sp:")) return grp.id_of(SignedPerm::parse(literal.substr(3)));
  if (starts("bits:") || (!literal.empty() && (literal[0] == '0' || literal[0] == '1'))) {
    std::string bits = starts("bits:") ? literal.substr(5) : literal;
    int v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        v |= 1 << i;
      else if (bits[i] != '0')
        throw input_error("bad bit literal: " + literal);
    }
    auto kind = grp.meta().kind;
    if (kind == FiniteGroup::Kind::ElementaryAbelian || kind == FiniteGroup::Kind::WreathZ2Zn) {
      if (static_cast<int>(bits.size()) != grp.meta().n)
        throw input_error("bit literal has wrong length for this group: " + literal);
      return v;  // base vectors occupy ids 0..2^n-1 in both constructions
    }
    throw input_error("bit literals need an elementary_abelian or wreath group: " + literal);
  }
  if (starts("rot:")) {
    if (grp.meta().kind != FiniteGroup::Kind::WreathZ2Zn)
      throw input_error("rot literals need a wreath group: " + literal);
    int n = grp.meta().n;
    std::string rest = literal.substr(4);
    int k = 0, v = 0;
    auto comma = rest.find(',');
    if (comma == std::string::npos) {
      k = std::stoi(rest);
    } else {
      k = std::stoi(rest.substr(0, comma));
      std::string tail = rest.substr(comma + 1);
      if (tail.rfind("bits:", 0) != 0) throw input_error("rot literal tail must be bits:...: " + literal);
      std::string bits = tail.substr(5);
      if (static_cast<int>(bits.size()) != n) throw input_error("bit literal has wrong length: " + literal);
      for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') v |= 1 << i;
    }
    if (k < 0 || k >= n) throw input_error("rotation out of range: " + literal);
    return k * (1 << n) + v;
  }
  if (starts("aff:")) {
    if (grp.meta().kind != FiniteGroup::Kind::DihedralAffine)
      throw input_error("aff literals need a dihedral group: " + literal);
    int n = grp.meta().n;
    std::string rest = literal.substr(4);
    if (rest.size() < 3 || (rest[0] != '+' && rest[0] != '-') || rest[1] != ',')
      throw input_error("aff literal looks like aff:+,B or aff:-,B: " + literal);
    int b = std::stoi(rest.substr(2));
    if (b < 0 || b >= n) throw input_error("translation out of range: " + literal);
    return (rest[0] == '+' ? 0 : n) + b;
  }
  throw input_error("unrecognized element literal: " + literal);
}

// ---------------------------------------------------------------------------
// Realization: scenario spec -> live pipeline inputs.
// ---------------------------------------------------------------------------

using RealizedScenario = std::variant<FopScenario, AmicableScenario>;

namespace detail {

inline GroupPtr realize_group(const GroupSpec& gs) {
  switch (gs.kind) {
    case GroupSpec::Kind::ElementaryAbelian:
      return elementary_abelian(gs.n);
    case GroupSpec::Kind::Dihedral:
      return dihedral_affine(gs.n);
    case GroupSpec::Kind::Wreath:
      return wreath_z2_zn(gs.n);
    case GroupSpec::Kind::Generators: {
      if (gs.npoints < 1) throw input_error("group generators: point count must be >= 1");
      std::vector<SignedPerm> gens;
      gens.reserve(gs.generators.size());
      for (const auto& lit : gs.generators) gens.push_back(SignedPerm::parse(lit));
      for (const auto& g : gens)
        if (static_cast<int>(g.size()) != gs.npoints)
          throw input_error("generator acts on " + std::to_string(g.size()) + " points, expected " +
                            std::to_string(gs.npoints));
      if (gens.empty())
        return FiniteGroup::from_elements({SignedPerm::identity(static_cast<std::size_t>(gs.npoints))},
                                          {FiniteGroup::Kind::Generic, 0});
      return group_from_generators(gens);
    }
  }
  throw engine_error("unreachable group kind");
}

inline TwoCocycle realize_cocycle(const CocycleSpec& cs, GroupPtr group) {
  switch (cs.kind) {
    case CocycleSpec::Kind::Trivial:
      return trivial_cocycle(std::move(group));
    case CocycleSpec::Kind::BilinearForm: {
      std::vector<std::vector<int>> form;
      for (const auto& row : cs.rows) {
        std::vector<int> r;
        for (char c : row) {
          if (c != '0' && c != '1') throw input_error("bilinear form rows are bitstrings");
          r.push_back(c - '0');
        }
        form.push_back(std::move(r));
      }
      return cocycle_from_bilinear_form(std::move(group), form);
    }
    case CocycleSpec::Kind::Table: {
      std::size_t m = group->order();
      if (cs.rows.size() != m) throw input_error("cocycle table must have |G| rows");
      std::vector<std::int8_t> table;
      table.reserve(m * m);
      for (const auto& row : cs.rows) {
        if (row.size() != m) throw input_error("cocycle table rows must have |G| signs");
        for (char c : row) {
          if (c != '+' && c != '-') throw input_error("cocycle table entries are + or -");
          table.push_back(c == '+' ? 1 : -1);
        }
      }
      return TwoCocycle::from_table(std::move(group), std::move(table));
    }
  }
  throw engine_error("unreachable cocycle kind");
}

inline std::pair<Subgroup, SignCharacter> realize_subgroup(const SubgroupSpec& ss, GroupPtr group,
                                                           const TwoCocycle& w) {
  std::vector<int> gens;
  gens.reserve(ss.generators.size());
  for (const auto& lit : ss.generators) gens.push_back(resolve_element(*group, lit));
  Subgroup h = subgroup_generated(group, gens);
  switch (ss.character.kind) {
    case CharacterSpec::Kind::Trivial:
      return {h, trivial_character(w, h)};
    case CharacterSpec::Kind::Solve: {
      auto chi = solve_trivialization(w, h);
      if (!chi)
        throw input_error("subgroup " + ss.role + ": the restricted cocycle class is nontrivial, no chi exists");
      return {h, *chi};
    }
    case CharacterSpec::Kind::GeneratorValues:
    case CharacterSpec::Kind::Table: {
      std::map<int, int> values;
      for (const auto& [lit, s] : ss.character.values) values[resolve_element(*group, lit)] = s;
      if (ss.character.kind == CharacterSpec::Kind::GeneratorValues)
        return {h, character_from_generator_values(w, h, values)};
      return {h, character_from_values(w, h, values)};
    }
  }
  throw engine_error("unreachable character kind");
}

}  // namespace detail

inline RealizedScenario realize_scenario(const ScenarioSpec& spec) {
  GroupPtr group = detail::realize_group(spec.group);
  TwoCocycle w = detail::realize_cocycle(spec.cocycle, group);

  const SubgroupSpec* h = nullptr;
  const SubgroupSpec* h2 = nullptr;
  const SubgroupSpec* k = nullptr;
  for (const auto& sg : spec.subgroups) {
    if (sg.role == "H") h = &sg;
    if (sg.role == "H2") h2 = &sg;
    if (sg.role == "K") k = &sg;
  }
  if (!h || !h2) throw input_error("scenario needs subgroups with roles H and H2");

  auto [sh, chi] = detail::realize_subgroup(*h, group, w);
  auto [sh2, chi2] = detail::realize_subgroup(*h2, group, w);

  std::vector<Symbol> sa, sb;
  for (const auto& n : spec.symbols_a) sa.push_back(Symbol{n});
  for (const auto& n : spec.symbols_b) sb.push_back(Symbol{n});

  if (spec.amicable) {
    AmicableScenario s;
    s.name = spec.name;
    s.group = group;
    s.cocycle = std::move(w);
    s.h = std::move(sh);
    s.chi = std::move(chi);
    s.h2 = std::move(sh2);
    s.chi2 = std::move(chi2);
    s.symbols_a = std::move(sa);
    s.symbols_b = std::move(sb);
    return s;
  }
  if (!k) throw input_error("FOP scenario needs a subgroup with role K (or mark the scenario amicable)");
  auto [sk, chik] = detail::realize_subgroup(*k, group, w);
  FopScenario s;
  s.name = spec.name;
  s.group = group;
  s.cocycle = std::move(w);
  s.h = std::move(sh);
  s.chi = std::move(chi);
  s.h2 = std::move(sh2);
  s.chi2 = std::move(chi2);
  s.k = std::move(sk);
  s.chi_k = std::move(chik);
  s.symbols_a = std::move(sa);
  s.symbols_b = std::move(sb);
  return s;
}

// ---------------------------------------------------------------------------
// Symbolic matrix grids: header "ROWS COLS", then ROWS lines of tokens from
// {0, name, -name}.
// ---------------------------------------------------------------------------

inline std::string write_formal_matrix(const FormalMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      const FreePoly& e = m.at(r, c);
      if (e.is_zero()) {
        os << '0';
      } else if (auto ss = e.as_signed_symbol()) {
        if (ss->second < 0) os << '-';
        os << ss->first.name;
      } else {
        throw input_error("matrix grid format holds only 0 / name / -name entries");
      }
    }
    os << "\n";
  }
  return os.str();
}

inline FormalMatrix read_formal_matrix(const std::string& text) {
  std::istringstream is(text);
  int rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0)
    throw input_error("matrix grid: header must be 'ROWS COLS'");
  FormalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::string tok;
      if (!(is >> tok)) throw input_error("matrix grid: too few entries");
      if (tok == "0") continue;
      int sign = 1;
      if (tok[0] == '-') {
        sign = -1;
        tok = tok.substr(1);
      }
      if (tok.empty() || tok == "0") throw input_error("matrix grid: bad token");
      for (char ch : tok)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
          throw input_error("matrix grid: symbol names are alphanumeric, got '" + tok + "'");
      if (std::isdigit(static_cast<unsigned char>(tok[0])))
        throw input_error("matrix grid: symbol names cannot start with a digit: '" + tok + "'");
      m.at(r, c) = FreePoly::symbol(Symbol{tok}, sign);
    }
  std::string extra;
  if (is >> extra) throw input_error("matrix grid: trailing tokens after the last entry");
  return m;
}

// ---------------------------------------------------------------------------
// Block files for substitution: repeated "block NAME ROWS COLS" headers,
// each followed by ROWS lines of COLS integers.
// ---------------------------------------------------------------------------

inline std::map<Symbol, IntMatrix> read_blocks(const std::string& text) {
  std::map<Symbol, IntMatrix> blocks;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::optional<std::pair<Symbol, IntMatrix>> current;
  int filled_rows = 0;

  auto flush = [&]() {
    if (!current) return;
    if (filled_rows != current->second.rows())
      throw input_error("block '" + current->first.name + "': expected " +
                        std::to_string(current->second.rows()) + " rows");
    if (!blocks.emplace(current->first, current->second).second)
      throw input_error("duplicate block for symbol '" + current->first.name + "'");
    current.reset();
    filled_rows = 0;
  };

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "block") {
      flush();
      if (toks.size() != 4) throw detail::parse_error(lineno, "block header is: block NAME ROWS COLS");
      int r, c;
      try {
        r = std::stoi(toks[2]);
        c = std::stoi(toks[3]);
      } catch (...) {
        throw detail::parse_error(lineno, "block dimensions must be integers");
      }
      if (r <= 0 || c <= 0) throw detail::parse_error(lineno, "block dimensions must be positive");
      current = {Symbol{toks[1]}, IntMatrix(r, c)};
    } else {
      if (!current) throw detail::parse_error(lineno, "matrix row outside a block");
      if (filled_rows >= current->second.rows()) throw detail::parse_error(lineno, "too many rows in block");
      if (static_cast<int>(toks.size()) != current->second.cols())
        throw detail::parse_error(lineno, "wrong number of entries in block row");
      for (int c = 0; c < current->second.cols(); ++c) {
        try {
          current->second.at(filled_rows, c) = std::stoll(toks[static_cast<std::size_t>(c)]);
        } catch (...) {
          throw detail::parse_error(lineno, "block entries must be integers");
        }
      }
      ++filled_rows;
    }
  }
  flush();
  if (blocks.empty()) throw input_error("block file holds no blocks");
  return blocks;
}

}  // namespace fop
