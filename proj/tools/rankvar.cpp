#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankvar/homalg.hpp"
#include "rankvar/io.hpp"
#include "rankvar/parse.hpp"
#include "rankvar/verify.hpp"

using namespace rankvar;

namespace {

struct Options {
  std::string field;
  std::string flavor;
  uint64_t seed = 0;
  unsigned twist = 0;
  unsigned ext_bound = 10;
};

struct PropertyFailure {};

LambdaModule open_module(const std::string& path, const Options& o) {
  LambdaModule m = load_module(path);
  if (!o.flavor.empty()) m = m.with_flavor(parse_flavor(o.flavor));
  return m;
}

FieldPtr field_or(const Options& o, FieldPtr fallback) { return o.field.empty() ? fallback : parse_field_spec(o.field); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json module_summary(const LambdaModule& m) {
  return {{"spec", m.spec().describe()}, {"dim", m.dim()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support varieties and pi-points for elementary abelian p-groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "coefficient or enumeration field, e.g. 2, 4, GF(9), 3(t)");
  app.add_option("--flavor", o.flavor, "grouplike or primitive")->check(CLI::IsMember({"grouplike", "primitive"}));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--twist", o.twist, "Frobenius twist exponent for reported points");
  app.add_option("--ext-bound", o.ext_bound, "largest Ext degree examined")->check(CLI::PositiveNumber);

  std::string module_path, other_path, text, out_path;
  std::vector<std::string> classes;
  unsigned rank = 2;
  bool charts = false;

  auto* jordan = app.add_subcommand("jordan", "Jordan type of a module at a pi-point");
  jordan->add_option("module", module_path)->required();
  jordan->add_option("pi-point", text, "polynomial in z1..zr")->required();

  auto* support = app.add_subcommand("support", "rational points of the support");
  support->add_option("module", module_path)->required();
  support->add_flag("--charts", charts, "also report the generic chart verdicts");

  auto* cosupport = app.add_subcommand("cosupport", "rational points of the cosupport");
  cosupport->add_option("module", module_path)->required();

  auto* carlson = app.add_subcommand("carlson", "the module L_zeta of a cohomology class");
  carlson->add_option("class", text, "polynomial in y1..yr")->required();
  carlson->add_option("-r,--rank", rank, "rank of the elementary abelian group")->check(CLI::Range(1u, 8u));
  carlson->add_option("-o,--output", out_path);

  auto* koszul = app.add_subcommand("koszul", "the Koszul object of a module and classes");
  koszul->add_option("module", module_path)->required();
  koszul->add_option("classes", classes, "polynomials in y1..yr")->required();
  koszul->add_option("-o,--output", out_path);

  auto* ext = app.add_subcommand("ext", "dimensions of Ext^i(M, N)");
  ext->add_option("module", module_path)->required();
  ext->add_option("other", other_path)->required();

  auto* gp = app.add_subcommand("generic-point", "generic point of a homogeneous prime");
  gp->add_option("ideal", other_path)->required();
  gp->add_option("-r,--rank", rank, "number of variables when the file does not say");

  SuiteConfig cfg;
  std::vector<uint32_t> primes;
  std::vector<unsigned> ranks;
  auto* verify = app.add_subcommand("verify", "run a named property suite");
  verify->add_option("suite", text)->required();
  verify->add_option("-p,--prime", primes, "primes, comma separated")->delimiter(',');
  verify->add_option("-r,--rank", ranks, "ranks, comma separated")->delimiter(',');
  verify->add_option("--corpus", cfg.corpus_size, "modules per (p, r)");
  verify->add_option("--pairs", cfg.pair_count, "pairs per (p, r)");
  verify->add_option("--cases", cfg.hygiene_cases, "cases per hygiene property");
  verify->add_option("--degrees", cfg.field_degrees, "enumeration field degrees")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*jordan) {
      const LambdaModule m = open_module(module_path, o);
      const AlgebraSpec spec = m.spec().with_field(field_or(o, m.field()));
      std::cout << jordan_type(parse_pi_point(spec, text), m).str() << "\n";
    } else if (*support) {
      const LambdaModule m = open_module(module_path, o);
      const FieldPtr f = field_or(o, m.field());
      json j = report("support");
      j["module"] = module_summary(m);
      j["field"] = f->describe();
      j["twist"] = o.twist;
      j["points"] = points_to_json(support_points(m, f, o.twist));
      if (charts) j["charts"] = chart_verdicts(m);
      emit(j);
    } else if (*cosupport) {
      const LambdaModule m = open_module(module_path, o);
      const FieldPtr f = field_or(o, m.field());
      json j = report("cosupport");
      j["module"] = module_summary(m);
      j["field"] = f->describe();
      j["twist"] = o.twist;
      j["points"] = points_to_json(cosupport_points(m, f, o.twist));
      emit(j);
    } else if (*carlson) {
      const FieldPtr f = field_or(o, Field::prime(2));
      const HopfFlavor h = o.flavor.empty() ? HopfFlavor::GroupLike : parse_flavor(o.flavor);
      const auto spec = AlgebraSpec::make(f->characteristic(), rank, f, h);
      const LambdaModule m = carlson_module(parse_class(spec, text));
      if (out_path.empty())
        std::cout << module_to_json(m).dump(1) << "\n";
      else
        save_module(m, out_path);
    } else if (*koszul) {
      const LambdaModule m = open_module(module_path, o);
      std::vector<CohClass> zs;
      for (const auto& c : classes) zs.push_back(parse_class(m.spec(), c));
      const LambdaModule k = koszul_object(m, zs);
      if (out_path.empty())
        std::cout << module_to_json(k).dump(1) << "\n";
      else
        save_module(k, out_path);
    } else if (*ext) {
      const LambdaModule m = open_module(module_path, o), n = open_module(other_path, o);
      const auto dims = ext_dims(m, n, o.ext_bound);
      json j = report("ext");
      j["bound"] = o.ext_bound;
      j["dims"] = dims;
      json zeros = json::array();
      for (size_t i = 1; i < dims.size(); ++i)
        if (dims[i] == 0) zeros.push_back(i);
      j["vanishing_degrees"] = zeros;
      emit(j);
    } else if (*gp) {
      const GradedIdeal ideal = load_ideal(other_path, field_or(o, Field::prime(2)), gp->count("--rank") ? rank : 0);
      const GenericPointData d = generic_point(ideal);
      json j = report("generic-point");
      j.update(generic_point_to_json(d));
      emit(j);
      if (!d.passed()) throw PropertyFailure{};
    } else if (*verify) {
      if (!primes.empty()) cfg.primes = primes;
      if (!ranks.empty()) cfg.ranks = ranks;
      if (!o.flavor.empty()) cfg.flavor = parse_flavor(o.flavor);
      cfg.seed = o.seed;
      cfg.twist = o.twist;
      cfg.ext_bound = o.ext_bound;
      const SuiteResult r = run_suite(text, cfg);
      json j = report("verify");
      j.update(suite_result_to_json(r));
      emit(j);
      std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases, " << r.failed
                << " failed)\n";
      if (!r.passed()) throw PropertyFailure{};
    }
  } catch (const PropertyFailure&) {
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
