// klab: command-line front end for the local-length toolkit.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "klab/cache.hpp"
#include "klab/colength.hpp"
#include "klab/error.hpp"
#include "klab/experiment.hpp"
#include "klab/families.hpp"
#include "klab/fpmodules.hpp"
#include "klab/invariants.hpp"
#include "klab/koszul.hpp"
#include "klab/parse.hpp"
#include "klab/report.hpp"
#include "klab/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace klab;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kComputation = 3 };

struct Common {
  std::optional<std::uint64_t> prime;
  unsigned cap = kFamilyLengthCap;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string config;
};

struct RingArgs {
  std::string vars;
  std::string rel;
  std::string proxy;
  std::string ideal;
  std::string module = "R";
};

void add_ring_options(CLI::App* app, RingArgs& r, bool ideal_required) {
  app->add_option("--vars", r.vars, "Variables, e.g. \"x,y,z\"")->required();
  app->add_option("--rel", r.rel, "Quotient relations of the ring, comma separated");
  app->add_option("--proxy", r.proxy, "Variable standing in for a DVR uniformizer");
  auto* o = app->add_option("--ideal", r.ideal, "Ideal or sequence generators, comma separated");
  if (ideal_required) o->required();
  app->add_option("--module", r.module, "Module: R, ideal(...) or quotient(...)");
}

RingSpec build_ring(const RingArgs& a, std::uint64_t prime) {
  std::optional<std::string> proxy;
  if (!a.proxy.empty()) proxy = a.proxy;
  RingSpec bare(PrimeField(prime), parse_variable_list(a.vars), {}, proxy);
  return bare.with_relations(parse_poly_list(a.rel, bare));
}

std::uint64_t prime_of(const Common& c) {
  std::optional<std::uint64_t> from_config;
  if (!c.config.empty()) from_config = load_config(c.config).prime;
  return resolve_prime(c.prime, from_config, std::getenv("KLAB_PRIME"));
}

void write_output(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path p(c.out);
  if (p.has_parent_path() && !std::filesystem::is_directory(p.parent_path())) {
    throw IoError("directory for " + c.out + " does not exist");
  }
  write_file_atomic(p, text);
}

void write_json(const Common& c, const json& j) { write_output(c, j.dump(2) + "\n"); }

json certificate_json(const LengthCertificate& c) {
  json j;
  j["value"] = c.value;
  j["status"] = to_string(c.status);
  j["method"] = to_string(c.method);
  j["truncation_degree"] = c.truncation_degree;
  j["witness"] = {c.witness.first, c.witness.second};
  return j;
}

json multiplicity_json(const MultiplicityEstimate& e) {
  return {{"value", e.value},
          {"dimension", e.dimension},
          {"status", to_string(e.status)},
          {"lengths", e.lengths},
          {"differences", e.differences_window}};
}

json profile_json(const FinitenessProfile& p) {
  json entries = json::array();
  for (const auto& e : p.entries) {
    json j{{"i", e.index}, {"ext_index", e.ext_index}, {"finite", to_string(e.finite)}};
    if (e.length) j["length"] = certificate_json(*e.length);
    if (e.support) j["support_dimension"] = e.support->dimension;
    if (e.support) j["conical"] = e.support->conical;
    if (e.growth) j["growth_degree"] = e.growth->degree;
    entries.push_back(j);
  }
  return {{"dimension", p.dimension},
          {"certified_asydepth", p.certified_asydepth},
          {"semi", p.semi},
          {"entries", entries}};
}

/// Sequence x_i^e + random terms of higher degree; m-primary at the origin.
std::vector<Polynomial> random_parameter_ideal(const RingSpec& ring, std::mt19937_64& rng) {
  std::vector<Polynomial> out;
  std::uniform_int_distribution<std::uint64_t> coeff(1, ring.field().modulus() - 1);
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    unsigned e = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    std::ostringstream s;
    s << ring.variables()[v] << "^" << e;
    for (int k = 0; k < 2; ++k) {
      unsigned deg = std::uniform_int_distribution<unsigned>(e + 1, 4)(rng);
      s << " + " << coeff(rng);
      for (unsigned i = 0; i < deg; ++i) {
        s << "*" << ring.variables()[std::uniform_int_distribution<std::size_t>(0, ring.nvars() - 1)(rng)];
      }
    }
    out.push_back(parse_poly(s.str(), ring));
  }
  return out;
}

json poly_list_json(const std::vector<Polynomial>& f, const RingSpec& ring) {
  json a = json::array();
  for (const auto& g : f) a.push_back(g.to_string(ring.variables()));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"klab: local lengths, Koszul homology and multiplicities over GF(p)"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--prime", common.prime, "Field characteristic (overrides config and KLAB_PRIME)");
  app.add_option("--cap", common.cap, "Truncation cap for length certificates");
  app.add_option("--seed", common.seed, "Seed for random instances");
  app.add_option("--format", common.format, "Report format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", common.out, "Write output to this file instead of stdout");
  app.add_option("--config", common.config, "Experiment config (JSON)");

  RingArgs len_args, kz_args, mult_args, serre_args, lech_args, prof_args, asy_args;
  auto* len = app.add_subcommand("len", "Certified length of M/IM at the origin");
  add_ring_options(len, len_args, false);
  auto* kz = app.add_subcommand("koszul", "Koszul cohomology lengths H^i(f; M)");
  add_ring_options(kz, kz_args, true);
  auto* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity e_I(M)");
  add_ring_options(mult, mult_args, true);
  auto* serre = app.add_subcommand("serre", "Compare e_f(M) with the Koszul Euler characteristic");
  add_ring_options(serre, serre_args, false);
  unsigned random_count = 0;
  serre->add_option("--random", random_count, "Check this many random parameter ideals instead of --ideal");
  auto* lech = app.add_subcommand("lech", "Lech's inequality for an m-primary ideal");
  add_ring_options(lech, lech_args, true);
  auto* prof = app.add_subcommand("profile", "Finiteness of local cohomology through Ext");
  add_ring_options(prof, prof_args, false);
  auto* asy = app.add_subcommand("asydepth", "Certified asymptotic depth");
  add_ring_options(asy, asy_args, false);

  auto* family = app.add_subcommand("family", "Family catalog and experiment runs");
  family->require_subcommand(1);
  family->fallthrough();
  auto* family_list = family->add_subcommand("list", "Print the family catalog");
  auto* family_run = family->add_subcommand("run", "Run an experiment");
  std::string run_family, run_n, run_i = "0", run_target = "R", cache_dir;
  std::optional<std::uint64_t> run_t;
  unsigned run_s = 1, run_k = 1, run_d = 3;
  std::string run_dvr;
  family_run->add_option("id", run_family, "Family id (or use --config)");
  family_run->add_option("-n,--n", run_n, "n values: 3, 2..4 or [2,3]");
  family_run->add_option("-i,--index", run_i, "Cohomological indices");
  family_run->add_option("--target", run_target, "Target module name");
  family_run->add_option("--t", run_t, "Override the exponent t");
  family_run->add_option("--s", run_s, "Relation exponent s");
  family_run->add_option("--k", run_k, "Power k of the uniformizer target");
  family_run->add_option("--d", run_d, "Dimension of the general construction");
  family_run->add_option("--dvr", run_dvr, "Replace x or z by the uniformizer")->check(CLI::IsMember({"", "x", "z"}));
  family_run->add_option("--cache", cache_dir, "Result cache directory");

  auto* report = app.add_subcommand("report", "Re-render a JSON report");
  std::string report_in;
  report->add_option("input", report_in, "JSON report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*len) {
      auto ring = build_ring(len_args, prime_of(common));
      auto m = resolve_target(len_args.module, ring);
      auto f = parse_poly_list(len_args.ideal, ring);
      auto c = module_local_colength(quotient_by_elements(m, f), common.cap);
      write_json(common, certificate_json(c));
      return c.certified() ? kOk : kCheckFailed;
    }
    if (*kz) {
      auto ring = build_ring(kz_args, prime_of(common));
      auto f = parse_poly_list(kz_args.ideal, ring);
      auto prof = koszul_cohomology_profile(f, resolve_target(kz_args.module, ring), common.cap);
      json j{{"sequence", poly_list_json(f, ring)}, {"cohomology", json::array()}};
      for (std::size_t i = 0; i < prof.cohomology.size(); ++i) {
        j["cohomology"].push_back({{"i", i}, {"length", certificate_json(prof.cohomology[i])}});
      }
      j["top_consistent"] = prof.top_consistent;
      write_json(common, j);
      return kOk;
    }
    if (*mult) {
      auto ring = build_ring(mult_args, prime_of(common));
      MultiplicityOptions o;
      o.cap = common.cap;
      auto e = hs_multiplicity(parse_poly_list(mult_args.ideal, ring), resolve_target(mult_args.module, ring), o);
      write_json(common, multiplicity_json(e));
      return e.stabilized() ? kOk : kCheckFailed;
    }
    if (*serre) {
      auto ring = build_ring(serre_args, prime_of(common));
      auto m = resolve_target(serre_args.module, ring);
      MultiplicityOptions o;
      o.cap = common.cap;
      auto one = [&](const std::vector<Polynomial>& f) {
        auto s = serre_check(f, m, o);
        return json{{"sequence", poly_list_json(f, ring)},
                    {"multiplicity", multiplicity_json(s.multiplicity)},
                    {"cohomology_lengths", s.lengths},
                    {"alternating_sum", s.alternating_sum},
                    {"conclusive", s.conclusive},
                    {"pass", s.pass}};
      };
      if (random_count == 0) {
        auto r = one(parse_poly_list(serre_args.ideal, ring));
        write_json(common, r);
        return r["pass"].get<bool>() ? kOk : kCheckFailed;
      }
      std::mt19937_64 rng(common.seed);
      json runs = json::array();
      std::size_t failures = 0;
      while (runs.size() < random_count) {
        auto f = random_parameter_ideal(ring, rng);
        if (!local_colength(f, ring, common.cap).certified()) continue;
        runs.push_back(one(f));
        if (!runs.back()["pass"].get<bool>()) ++failures;
      }
      write_json(common, {{"seed", common.seed}, {"failures", failures}, {"runs", runs}});
      return failures == 0 ? kOk : kCheckFailed;
    }
    if (*lech) {
      auto ring = build_ring(lech_args, prime_of(common));
      MultiplicityOptions o;
      o.cap = common.cap;
      auto l = lech_check(parse_poly_list(lech_args.ideal, ring), ring, o);
      write_json(common, {{"e_ideal", l.e_ideal},
                          {"e_maximal", l.e_maximal},
                          {"colength", l.colength},
                          {"dimension", l.dimension},
                          {"lhs", l.lhs},
                          {"rhs", l.rhs},
                          {"conclusive", l.conclusive},
                          {"pass", l.pass}});
      return l.pass ? kOk : kCheckFailed;
    }
    if (*prof) {
      auto ring = build_ring(prof_args, prime_of(common));
      write_json(common, profile_json(lc_finiteness_profile(resolve_target(prof_args.module, ring), common.cap)));
      return kOk;
    }
    if (*asy) {
      auto ring = build_ring(asy_args, prime_of(common));
      auto a = certified_asydepth(resolve_target(asy_args.module, ring), common.cap);
      write_json(common, {{"asydepth", a.value}, {"semi", a.semi}, {"profile", profile_json(a.profile)}});
      return kOk;
    }
    if (*family_list) {
      json cat = json::array();
      for (const auto& f : list_families()) {
        cat.push_back({{"id", f.id},
                       {"title", f.title},
                       {"ring", f.ring},
                       {"generators", f.generators},
                       {"parameters", f.parameters},
                       {"targets", f.targets},
                       {"notes", f.notes}});
      }
      write_json(common, cat);
      return kOk;
    }
    if (*family_run) {
      ExperimentConfig cfg;
      if (!common.config.empty()) {
        cfg = load_config(common.config);
      } else {
        if (run_family.empty() || run_n.empty()) throw ArgumentError("family run needs an id and --n, or --config");
        json doc{{"family", run_family}, {"target", run_target}, {"cap", common.cap}, {"seed", common.seed},
                 {"s", run_s},           {"k", run_k},           {"d", run_d}};
        if (!run_dvr.empty()) doc["dvr"] = run_dvr;
        if (run_t) doc["t"] = *run_t;
        auto range = [](const std::string& s) {
          json parsed = json::parse(s, nullptr, false);
          return parsed.is_discarded() ? json(s) : parsed;
        };
        doc["n"] = range(run_n);
        doc["i"] = range(run_i);
        cfg = parse_config(doc.dump());
      }
      cfg.prime = resolve_prime(common.prime, cfg.prime, std::getenv("KLAB_PRIME"));
      if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
      std::optional<ResultCache> cache;
      if (cfg.cache_dir) cache.emplace(*cfg.cache_dir);
      auto r = run_experiment(cfg, cache ? &*cache : nullptr);
      write_output(common, render(r, parse_report_format(common.format)));
      return kOk;
    }
    if (*report) {
      std::ifstream in(report_in);
      if (!in) throw IoError("cannot read " + report_in);
      std::ostringstream buf;
      buf << in.rdbuf();
      write_output(common, render(report_from_json(buf.str()), parse_report_format(common.format)));
      return kOk;
    }
  } catch (const ArgumentError& e) {
    std::cerr << "klab: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "klab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "klab: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
