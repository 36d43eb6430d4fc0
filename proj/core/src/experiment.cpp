#include "klab/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "klab/colength.hpp"
#include "klab/error.hpp"
#include "klab/fpmodules.hpp"
#include "klab/koszul.hpp"
#include "klab/parse.hpp"
#include "klab/version.hpp"

namespace klab {

using json = nlohmann::json;

namespace {

template <class T>
std::vector<T> parse_range(const json& j, const std::string& field) {
  std::vector<T> out;
  auto bad = [&] { return ArgumentError("config: '" + field + "' must be an integer, a list, \"a..b\" or {from, to}"); };
  auto push_span = [&](long long a, long long b) {
    if (a < 0 || b < 0) throw bad();
    for (long long v = a; v <= b; ++v) out.push_back(static_cast<T>(v));
  };
  if (j.is_number_integer()) {
    push_span(j.get<long long>(), j.get<long long>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw bad();
      out.push_back(v.get<T>());
    }
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    auto dots = s.find("..");
    try {
      if (dots == std::string::npos) {
        push_span(std::stoll(s), std::stoll(s));
      } else {
        push_span(std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2)));
      }
    } catch (const std::logic_error&) {
      throw bad();
    }
  } else if (j.is_object() && j.contains("from") && j.contains("to")) {
    push_span(j.at("from").get<long long>(), j.at("to").get<long long>());
  } else {
    throw bad();
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (j.is_string()) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : j.get<std::string>()) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }
  if (!j.is_array()) throw ArgumentError("config: '" + field + "' must be a string or a list of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ArgumentError("config: '" + field + "' must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return join(s, ",");
}

std::string inner(const std::string& spec, const std::string& head) {
  if (spec.size() < head.size() + 2 || spec.compare(0, head.size() + 1, head + "(") != 0 || spec.back() != ')') {
    return {};
  }
  return spec.substr(head.size() + 1, spec.size() - head.size() - 2);
}

std::string describe_module(const ModulePresentation& m) {
  std::string out = "rank " + std::to_string(m.ambient_rank()) + ":";
  for (const auto& u : m.relations()) out += " " + u.to_string(m.ring().variables()) + ";";
  return out;
}

struct Cell {
  std::uint64_t len_hi = 0, len_r = 0, len_m = 0;
  unsigned cert = 0;
  bool hi_ok = false, r_ok = false, m_ok = false;
};

json cell_to_json(const Cell& c) {
  return {{"len_Hi", c.len_hi}, {"cert_N", c.cert},  {"hi_certified", c.hi_ok}, {"len_R_mod_I", c.len_r},
          {"r_certified", c.r_ok},  {"len_M_mod_IM", c.len_m}, {"m_certified", c.m_ok}};
}

Cell cell_from_json(const json& j) {
  Cell c;
  c.len_hi = j.at("len_Hi").get<std::uint64_t>();
  c.cert = j.at("cert_N").get<unsigned>();
  c.hi_ok = j.at("hi_certified").get<bool>();
  c.len_r = j.at("len_R_mod_I").get<std::uint64_t>();
  c.r_ok = j.at("r_certified").get<bool>();
  c.len_m = j.at("len_M_mod_IM").get<std::uint64_t>();
  c.m_ok = j.at("m_certified").get<bool>();
  return c;
}

/// One (ring, sequence, target) triple evaluated at several indices.
void run_instance(const std::string& family, unsigned n, std::optional<std::uint64_t> t, const RingSpec& ring,
                  const std::vector<Polynomial>& ideal, const ModulePresentation& target, const ExperimentConfig& config,
                  ResultCache* cache, std::vector<ReportRow>& rows) {
  std::optional<KoszulComplex> k;
  std::optional<LengthCertificate> lr, lm;
  std::vector<std::string> gens;
  for (const auto& g : ideal) gens.push_back(g.to_string(ring.variables()));
  for (std::size_t i : config.indices) {
    ReportRow row;
    row.family = family;
    row.n = n;
    row.t = t;
    row.i = i;
    try {
      if (i > ideal.size()) throw ArgumentError("index " + std::to_string(i) + " exceeds the sequence length");
      json key = {{"op", "koszul-cell"},     {"version", kVersion}, {"ring", ring.to_string()},
                  {"ideal", gens},           {"target", describe_module(target)},
                  {"i", i},                  {"cap", config.cap}};
      const std::string key_text = key.dump();
      std::optional<Cell> cell;
      if (cache) {
        if (auto hit = cache->get(key_text)) cell = cell_from_json(json::parse(*hit));
      }
      if (!cell) {
        if (!k) k = build_koszul(ideal, target);
        if (!lr) lr = local_colength(ideal, ring, config.cap);
        if (!lm) lm = module_local_colength(quotient_by_elements(target, ideal), config.cap);
        auto hi = koszul_homology_length(*k, ideal.size() - i, config.cap);
        cell = Cell{hi.value, lr->value, lm->value, hi.truncation_degree, hi.certified(), lr->certified(), lm->certified()};
        if (cache) cache->put(key_text, cell_to_json(*cell).dump());
      }
      row.len_hi = cell->len_hi;
      row.len_r_mod_i = cell->len_r;
      row.len_m_mod_im = cell->len_m;
      row.cert_n = cell->cert;
      row.status = cell->hi_ok && cell->r_ok && cell->m_ok ? "certified" : "cap_exceeded";
    } catch (const Error& e) {
      row.status = "error";
      row.error = e.what();
    }
    set_ratio(row);
    rows.push_back(std::move(row));
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ArgumentError("config: not a JSON object");
  static const std::vector<std::string> known{"family", "ring",  "variables", "relations", "ideal", "proxy",
                                              "n",      "t",     "s",         "k",         "d",     "dvr",
                                              "target", "i",     "indices",   "cap",       "prime", "seed",
                                              "cache_dir"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ArgumentError("config: unknown field '" + key + "'");
    }
  }
  ExperimentConfig c;
  try {
    if (j.contains("family")) c.family = j.at("family").get<std::string>();
    const json* ring = j.contains("ring") ? &j.at("ring") : &j;
    if (ring->contains("variables")) c.variables = string_list(ring->at("variables"), "variables");
    if (ring->contains("relations")) c.relations = string_list(ring->at("relations"), "relations");
    if (ring->contains("proxy")) c.proxy = ring->at("proxy").get<std::string>();
    if (j.contains("ideal")) c.ideal = string_list(j.at("ideal"), "ideal");
    if (c.family.empty() == c.variables.empty()) {
      throw ArgumentError("config: give either 'family' or an explicit ring with 'variables'");
    }
    if (!c.family.empty() && !c.ideal.empty()) throw ArgumentError("config: 'ideal' is only used with an explicit ring");
    if (c.family.empty() && c.ideal.empty()) throw ArgumentError("config: an explicit ring needs 'ideal'");
    if (j.contains("n")) {
      c.n_values = parse_range<unsigned>(j.at("n"), "n");
    } else if (!c.family.empty()) {
      throw ArgumentError("config: a family run needs 'n'");
    }
    if (j.contains("t")) c.parameters.t = j.at("t").get<std::uint64_t>();
    if (j.contains("s")) c.parameters.s = j.at("s").get<unsigned>();
    if (j.contains("k")) c.parameters.k = j.at("k").get<unsigned>();
    if (j.contains("d")) c.parameters.d = j.at("d").get<unsigned>();
    if (j.contains("dvr")) c.parameters.dvr = j.at("dvr").get<std::string>();
    if (j.contains("target")) c.target = j.at("target").get<std::string>();
    if (j.contains("i") && j.contains("indices")) throw ArgumentError("config: use one of 'i' and 'indices'");
    if (j.contains("i")) c.indices = parse_range<std::size_t>(j.at("i"), "i");
    if (j.contains("indices")) c.indices = parse_range<std::size_t>(j.at("indices"), "indices");
    if (c.indices.empty()) throw ArgumentError("config: at least one index 'i' is required");
    if (j.contains("cap")) c.cap = j.at("cap").get<unsigned>();
    if (c.cap < 2) throw ArgumentError("config: 'cap' must be at least 2");
    if (j.contains("prime")) c.prime = j.at("prime").get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("cache_dir")) c.cache_dir = j.at("cache_dir").get<std::string>();
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config: wrong value type (") + e.what() + ")");
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::uint64_t resolve_prime(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> config,
                            const char* environment) {
  if (flag) return *flag;
  if (config) return *config;
  if (environment && *environment) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(environment, &end, 10);
    if (end == environment || *end != '\0') {
      throw ArgumentError(std::string("KLAB_PRIME is not an integer: '") + environment + "'");
    }
    return v;
  }
  return PrimeField::kDefaultModulus;
}

ModulePresentation resolve_target(const std::string& spec, const RingSpec& ring, const FamilyInstance* family) {
  if (family) {
    for (const auto& t : family->targets) {
      if (t.name == spec) return t.module;
    }
  }
  if (spec == "R") return quotient_presentation({}, ring);
  std::string body = inner(spec, "ideal");
  if (!body.empty()) return present_ideal_module(parse_poly_list(body, ring), ring);
  body = inner(spec, "quotient");
  if (!body.empty()) return quotient_presentation(parse_poly_list(body, ring), ring);
  throw ArgumentError("unknown target '" + spec + "' (expected a family target, R, ideal(...) or quotient(...))");
}

ExperimentReport run_experiment(const ExperimentConfig& config, ResultCache* cache) {
  const std::uint64_t prime = resolve_prime(std::nullopt, config.prime, std::getenv("KLAB_PRIME"));
  ExperimentReport report;
  auto& h = report.header;
  h.prime = prime;
  h.seed = config.seed;
  h.tool_version = kVersion;
  h.target = config.target;
  h.parameters["cap"] = std::to_string(config.cap);
  h.parameters["i"] = join_numbers(config.indices);
  std::vector<std::size_t> indices = config.indices;
  std::sort(indices.begin(), indices.end());
  ExperimentConfig sorted = config;
  sorted.indices = indices;

  if (config.family.empty()) {
    RingSpec bare(PrimeField(prime), config.variables, {}, config.proxy);
    std::vector<Polynomial> rels;
    for (const auto& r : config.relations) rels.push_back(parse_poly(r, bare));
    RingSpec ring = bare.with_relations(rels);
    h.family = "custom";
    h.ring = ring.to_string();
    h.parameters["ideal"] = join(config.ideal, ", ");
    std::vector<Polynomial> ideal;
    for (const auto& g : config.ideal) ideal.push_back(parse_poly(g, ring));
    run_instance("custom", 0, std::nullopt, ring, ideal, resolve_target(config.target, ring), sorted, cache,
                 report.rows);
    return report;
  }

  const auto catalog = list_families();
  auto info = std::find_if(catalog.begin(), catalog.end(), [&](const FamilyInfo& f) { return f.id == config.family; });
  if (info == catalog.end()) throw ArgumentError("unknown family '" + config.family + "'");
  h.family = config.family;
  h.ring = info->ring;
  h.parameters["n"] = join_numbers(config.n_values);
  if (config.parameters.t) h.parameters["t"] = std::to_string(*config.parameters.t);
  h.parameters["s"] = std::to_string(config.parameters.s);
  h.parameters["k"] = std::to_string(config.parameters.k);
  h.parameters["d"] = std::to_string(config.parameters.d);
  if (!config.parameters.dvr.empty()) h.parameters["dvr"] = config.parameters.dvr;

  std::vector<unsigned> ns = config.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (unsigned n : ns) {
    FamilyParameters p = config.parameters;
    p.n = n;
    p.prime = prime;
    try {
      FamilyInstance inst = instantiate_family(config.family, p);
      auto target = resolve_target(config.target, inst.ring, &inst);
      run_instance(config.family, n, inst.parameters.t, inst.ring, inst.ideal, target, sorted, cache, report.rows);
      for (const auto& e : inst.expected) report.citations.push_back({n, e.quantity, e.value, e.basis});
    } catch (const Error& e) {
      for (std::size_t i : indices) {
        ReportRow row;
        row.family = config.family;
        row.n = n;
        row.t = p.t;
        row.i = i;
        row.status = "error";
        row.error = e.what();
        set_ratio(row);
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace klab
