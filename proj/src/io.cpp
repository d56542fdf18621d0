#include "rankvar/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "rankvar/homalg.hpp"
#include "rankvar/parse.hpp"

namespace rankvar {

namespace {

uint32_t small_prime(uint64_t n) {
  if (n < 2 || n > 65521) return 0;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return 0;
  return static_cast<uint32_t>(n);
}

FieldPtr finite_from_order(uint64_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!small_prime(p)) continue;
    unsigned k = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) throw InputError("field order " + std::to_string(q) + " is not a prime power");
    return Field::finite(p, k);
  }
  throw InputError("field order " + std::to_string(q) + " is not a prime power");
}

}  // namespace

FieldPtr parse_field_spec(const std::string& text) {
  static const std::regex re(R"(\s*(?:GF\(|F_?)?(\d+)(?:\^(\d+))?\)?\s*(?:\(\s*(t\d*(?:\s*,\s*t\d*)*)\s*\))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InputError("cannot parse field '" + text + "'");
  FieldPtr base;
  try {
    const uint64_t a = std::stoull(m[1].str());
    if (m[2].matched) {
      const uint32_t p = small_prime(a);
      if (!p) throw InputError("'" + m[1].str() + "' is not a prime");
      base = Field::finite(p, static_cast<unsigned>(std::stoul(m[2].str())));
    } else {
      base = finite_from_order(a);
    }
  } catch (const std::out_of_range&) {
    throw InputError("field '" + text + "' is too large");
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field '") + text + "': " + e.what());
  }
  if (!m[3].matched) return base;
  const std::string vars = m[3].str();
  const unsigned n = static_cast<unsigned>(std::count(vars.begin(), vars.end(), ',')) + 1;
  return Field::rational_functions(base, n);
}

json field_to_json(FieldPtr f) {
  switch (f->kind()) {
    case FieldKind::Prime:
      return {{"kind", "prime"}, {"p", f->characteristic()}};
    case FieldKind::Extension:
      return {{"kind", "ext"}, {"p", f->characteristic()}, {"degree", f->degree()}, {"modulus", f->modulus()}};
    case FieldKind::RationalFunctions:
      return {{"kind", "ratfunc"}, {"base", field_to_json(f->base())}, {"nvars", f->nvars()}};
  }
  return {};
}

FieldPtr field_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_field_spec(j.get<std::string>());
    if (j.is_number_unsigned()) return finite_from_order(j.get<uint64_t>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime") {
      const uint32_t p = small_prime(j.at("p").get<uint64_t>());
      if (!p) throw InputError("field.p is not a small prime");
      return Field::prime(p);
    }
    if (kind == "ext") {
      const uint32_t p = small_prime(j.at("p").get<uint64_t>());
      if (!p) throw InputError("field.p is not a small prime");
      if (j.contains("modulus")) return Field::extension(p, j.at("modulus").get<std::vector<uint32_t>>());
      return Field::finite(p, j.at("degree").get<unsigned>());
    }
    if (kind == "ratfunc") return Field::rational_functions(field_from_json(j.at("base")), j.at("nvars").get<unsigned>());
    throw InputError("unknown field kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field description: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad field description: ") + e.what());
  }
}

json module_to_json(const LambdaModule& m) {
  json acts = json::array();
  for (const auto& z : m.actions()) {
    json row = json::array();
    for (const auto& e : z.data()) row.push_back(e.str());
    acts.push_back(row);
  }
  return {{"p", m.spec().p},        {"r", m.spec().r},   {"field", field_to_json(m.field())},
          {"flavor", flavor_name(m.spec().flavor)}, {"dim", m.dim()}, {"actions", acts}};
}

LambdaModule module_from_json(const json& j) {
  AlgebraSpec spec;
  size_t dim = 0;
  std::vector<Matrix> acts;
  try {
    const uint32_t p = small_prime(j.at("p").get<uint64_t>());
    if (!p) throw InputError("p must be a prime");
    const unsigned r = j.at("r").get<unsigned>();
    if (r == 0 || r > kMaxVars) throw InputError("r out of range");
    FieldPtr f = j.contains("field") ? field_from_json(j.at("field")) : Field::prime(p);
    if (f->characteristic() != p) throw InputError("field characteristic differs from p");
    const HopfFlavor h = j.contains("flavor") ? parse_flavor(j.at("flavor").get<std::string>()) : HopfFlavor::GroupLike;
    spec = AlgebraSpec::make(p, r, f, h);
    dim = j.at("dim").get<size_t>();
    const auto& a = j.at("actions");
    if (!a.is_array() || a.size() != r) throw InputError("expected " + std::to_string(r) + " action matrices");
    for (size_t i = 0; i < r; ++i) {
      const auto& rows = a[i];
      if (!rows.is_array() || rows.size() != dim * dim)
        throw InputError("action " + std::to_string(i + 1) + " must have dim*dim = " + std::to_string(dim * dim) +
                         " row-major entries");
      Matrix z(f, dim, dim);
      for (size_t k = 0; k < dim * dim; ++k) {
        const auto& e = rows[k];
        try {
          z(k / dim, k % dim) = e.is_string() ? parse_elem(f, e.get<std::string>())
                                              : f->from_int(e.get<int64_t>());
        } catch (const ParseError& pe) {
          throw InputError("action " + std::to_string(i + 1) + " entry " + std::to_string(k) + ": " + pe.what());
        }
      }
      acts.push_back(std::move(z));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad module file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad module file: ") + e.what());
  }
  try {
    return LambdaModule(spec, std::move(acts));
  } catch (const InvalidModule& e) {
    throw InputError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LambdaModule load_module(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return module_from_json(j);
}

void save_module(const LambdaModule& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << module_to_json(m).dump(1) << "\n";
}

GradedIdeal parse_ideal_text(const std::string& text, FieldPtr field, unsigned r) {
  std::vector<std::pair<size_t, std::string>> lines;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  unsigned max_index = 0;
  static const std::regex var_re(R"(y(\d+))");
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    if (line[0] == '%') {
      std::istringstream d(line.substr(1));
      std::string key, value;
      d >> key >> value;
      if (key == "r") {
        try {
          r = static_cast<unsigned>(std::stoul(value));
        } catch (const std::exception&) {
          throw InputError("line " + std::to_string(lineno) + ": bad %r directive");
        }
      } else if (key == "field") {
        field = parse_field_spec(value);
      } else {
        throw InputError("line " + std::to_string(lineno) + ": unknown directive %" + key);
      }
      continue;
    }
    for (auto it = std::sregex_iterator(line.begin(), line.end(), var_re); it != std::sregex_iterator(); ++it)
      max_index = std::max(max_index, static_cast<unsigned>(std::stoul((*it)[1].str())));
    lines.push_back({lineno, line});
  }
  if (!field) throw InputError("ideal has no coefficient field");
  if (r == 0) r = std::max(1u, max_index);
  if (max_index > r) throw InputError("variable y" + std::to_string(max_index) + " exceeds r = " + std::to_string(r));
  if (r > kMaxVars) throw InputError("too many variables");
  GradedIdeal out{field, r, {}};
  const auto names = class_variable_names(r);
  for (const auto& [no, l] : lines) {
    Poly g;
    try {
      g = parse_poly(field, names, l);
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(no) + ": " + e.what());
    }
    if (!g.is_homogeneous()) throw InputError("line " + std::to_string(no) + ": polynomial is not homogeneous");
    if (!g.is_zero()) out.gens.push_back(g);
  }
  return out;
}

GradedIdeal load_ideal(const std::string& path, FieldPtr field, unsigned r) {
  return parse_ideal_text(read_file(path), field, r);
}

std::string ideal_to_text(const GradedIdeal& ideal) {
  std::string s = "%r " + std::to_string(ideal.nvars) + "\n";
  for (const auto& g : ideal.gens) s += g.str(class_variable_names(ideal.nvars)) + "\n";
  return s;
}

json points_to_json(const std::vector<ProjPoint>& pts) {
  json a = json::array();
  for (const auto& pt : pts) a.push_back(pt.str());
  return a;
}

json support_report_to_json(const SupportReport& rep) {
  return {{"field", rep.field->describe()},
          {"twist", rep.twist},
          {"points", points_to_json(rep.support)},
          {"cosupport", points_to_json(rep.cosupport)},
          {"charts", rep.charts}};
}

json generic_point_to_json(const GenericPointData& d) {
  const auto names = class_variable_names(d.prime.nvars);
  json b = json::array(), norm = json::array();
  for (const auto& x : d.b) b.push_back(x.str(names));
  for (const auto& x : d.normalization) norm.push_back(x.str(names));
  return {{"base_field", d.prime.field->describe()},
          {"extension_field", d.extension->describe()},
          {"prime", d.prime.strs(names)},
          {"normalization", norm},
          {"n", d.normalization.size() - 1},
          {"b", b},
          {"q", d.q.strs(names)},
          {"checks",
           {{"closed_point", d.closed_point},
            {"contraction", d.contraction_matches},
            {"weak_sequence", d.weak_sequence}}},
          {"certificates",
           {{"q_dimension", d.q_dimension},
            {"q_basis_size", d.q_basis_size},
            {"contraction_generators", d.contraction.strs(names)},
            {"contraction_basis_size", d.contraction_basis_size},
            {"weak_localized", d.weak.localized},
            {"weak_unlocalized", d.weak.unlocalized},
            {"primality", "unverified"}}}};
}

json report(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

}  // namespace rankvar
