#include "klab/families.hpp"

#include <algorithm>

#include "klab/error.hpp"
#include "klab/fpmodules.hpp"
#include "klab/parse.hpp"

namespace klab {

namespace {

std::string pw(const std::string& base, std::uint64_t e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string sign(bool negative) { return negative ? " - " : " + "; }

RingSpec make(const std::vector<std::string>& vars, const std::string& relations, std::uint64_t prime,
              std::optional<std::string> proxy = std::nullopt) {
  RingSpec bare(PrimeField(prime), vars, {}, proxy);
  if (relations.empty()) return bare;
  return bare.with_relations(parse_poly_list(relations, bare));
}

void set_ideal(FamilyInstance& inst, std::vector<std::string> text) {
  inst.generator_text = std::move(text);
  for (const auto& g : inst.generator_text) inst.ideal.push_back(parse_poly(g, inst.ring));
}

ModulePresentation ideal_module(const RingSpec& ring, const std::vector<std::string>& names, std::string label) {
  std::vector<Polynomial> gens;
  for (const auto& v : names) gens.push_back(ring.var(v));
  auto p = present_ideal_module(gens, ring);
  return ModulePresentation(ring, p.ambient_rank(), p.relations(), std::move(label));
}

ModulePresentation cyclic(const RingSpec& ring, const std::string& ideal, std::string label) {
  auto p = quotient_presentation(ideal.empty() ? std::vector<Polynomial>{} : parse_poly_list(ideal, ring), ring);
  return ModulePresentation(ring, 1, p.relations(), std::move(label));
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

/// Generators of the general-d construction in the roles x, y, z, v_1..v_{d-3}.
std::vector<std::string> general_generators(unsigned n, std::uint64_t t, unsigned d, const std::string& x,
                                            const std::string& y, const std::string& z,
                                            const std::vector<std::string>& v) {
  std::vector<std::string> g;
  g.push_back(pw(z, t) + " - " + pw(z, n) + "*" + pw(x, n));
  g.push_back(pw(x, n + 1) + " - " + x + "*" + pw(z, t - n) + " + " + y + "*" + pw(z, n));
  // w_1..w_{d-2} = v_1..v_{d-3}, x with alternating signs (-1)^(j+1).
  std::string f3 = pw(y, n);
  for (unsigned j = 1; j + 3 <= d; ++j) f3 += sign(j % 2 == 0) + v[j - 1] + "*" + pw(z, n);
  f3 += sign((d - 2) % 2 == 0) + x + "*" + pw(z, n);
  g.push_back(f3);
  for (unsigned i = 1; i + 3 <= d; ++i) {
    std::string inner;
    for (unsigned j = i + 1; j <= d - 2; ++j) {
      const std::string& w = j + 3 <= d ? v[j - 1] : x;
      bool negative = (j - i - 1) % 2 == 1;
      inner += inner.empty() ? (negative ? "-" + w : w) : sign(negative) + w;
    }
    const std::string& vi = v[i - 1];
    g.push_back(pw(vi, n) + " + " + vi + "*" + pw(z, t - n) + " - (" + inner + ")^" + std::to_string(n) + " + " +
                vi + "*" + pw(z, n) + " - " + vi + "*" + pw(x, n));
  }
  return g;
}

std::vector<std::string> v_names(unsigned d) {
  std::vector<std::string> v;
  for (unsigned i = 1; i + 3 <= d; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

FamilyInstance f1(const FamilyParameters& p) {
  const unsigned n = p.n;
  const std::uint64_t t = p.t.value_or(default_t("F1", n, 3));
  require(t >= 2 * n, "F1 needs t >= 2n");
  FamilyInstance inst{"F1", p, make({"x", "y", "z"}, "", p.prime), {}, {}, {}, {}, false};
  inst.parameters.t = t;
  inst.parameters.d = 3;
  set_ideal(inst, {pw("z", t) + " - " + pw("z", n) + "*" + pw("x", n), pw("y", n) + " - " + pw("z", n) + "*x",
                   pw("x", n + 1) + " - x*" + pw("z", t - n) + " + y*" + pw("z", n)});
  inst.targets.push_back({"M", "the ideal (x, y) as a module", ideal_module(inst.ring, {"x", "y"}, "M")});
  inst.targets.push_back({"N", "R/(x, y)", cyclic(inst.ring, "x, y", "N")});
  inst.targets.push_back({"R", "the ring itself", cyclic(inst.ring, "", "R")});
  inst.expected.push_back({"len_R_mod_I_plus_M", t, "R/(I + (x,y)) = k[z]/(z^t)"});
  inst.expected.push_back({"H2_M", t, "H^2(I; M) = H^1(I; N) = k[z]/(z^t)"});
  if (t == ipow(n, 4)) {
    inst.expected.push_back({"len_R_mod_I_upper", (t + 2 * n) + (2 * n + 1) * (2 * n + 1) * (3 * n),
                             "spanning-set count for R/I"});
  }
  return inst;
}

FamilyInstance f2(const FamilyParameters& p) {
  const unsigned n = p.n, d = p.d;
  require(d >= 3, "F2 needs d >= 3");
  require(p.dvr.empty() || p.dvr == "x" || p.dvr == "z", "F2 dvr must be empty, x or z");
  const std::uint64_t t = p.t.value_or(default_t("F2", n, d));
  require(t >= 2 * n, "F2 needs t >= 2n");
  std::string x = p.dvr == "x" ? "pi" : "x";
  std::string z = p.dvr == "z" ? "pi" : "z";
  auto v = v_names(d);
  std::vector<std::string> vars{x, "y", z};
  vars.insert(vars.end(), v.begin(), v.end());
  std::optional<std::string> proxy;
  if (!p.dvr.empty()) proxy = "pi";
  FamilyInstance inst{"F2", p, make(vars, "", p.prime, proxy), {}, {}, {}, {}, proxy.has_value()};
  inst.parameters.t = t;
  set_ideal(inst, general_generators(n, t, d, x, "y", z, v));
  std::vector<std::string> m{x, "y"};
  m.insert(m.end(), v.begin(), v.end());
  inst.targets.push_back({"M", "the ideal (" + join(m) + ") as a module", ideal_module(inst.ring, m, "M")});
  inst.targets.push_back({"N", "R/M", cyclic(inst.ring, join(m), "N")});
  inst.targets.push_back({"R", "the ring itself", cyclic(inst.ring, "", "R")});
  inst.expected.push_back({"len_R_mod_I_plus_M", t, "R/(I + M) = k[z]/(z^t)"});
  return inst;
}

FamilyInstance f3(const FamilyParameters& p) {
  const unsigned n = p.n;
  FamilyInstance inst{"F3", p, make({"x", "y", "z"}, "x*z, y*z", p.prime), {}, {}, {}, {}, false};
  inst.parameters.d = 2;
  inst.parameters.t.reset();
  set_ideal(inst, {pw("x", n) + " - " + pw("z", ipow(n, 3)), pw("y", n)});
  inst.targets.push_back({"R", "the ring itself", cyclic(inst.ring, "", "R")});
  const std::uint64_t n3 = ipow(n, 3), n2 = ipow(n, 2);
  inst.expected.push_back({"len_R_mod_I", n3 + n2, "z^j for 1 <= j <= n^3 and x^a y^b with a, b < n"});
  inst.expected.push_back({"multiplicity", n2, "e of (x^n, y^n) on k[x,y], the top-dimensional component"});
  inst.expected.push_back({"H1_R", n3, "Serre: length minus multiplicity"});
  return inst;
}

FamilyInstance f4(const FamilyParameters& p) {
  const unsigned n = p.n;
  FamilyInstance inst{"F4", p, make({"x1", "x2"}, "", p.prime), {}, {}, {}, {}, false};
  inst.parameters.d = 2;
  inst.parameters.t.reset();
  set_ideal(inst, {pw("x1", n + 1) + " - x1*" + pw("x2", n), pw("x2", ipow(n, 3)) + " + " + pw("x1", n)});
  inst.targets.push_back({"N", "R/(x1)", cyclic(inst.ring, "x1", "N")});
  inst.targets.push_back({"R", "the ring itself", cyclic(inst.ring, "", "R")});
  const std::uint64_t n3 = ipow(n, 3), n2 = ipow(n, 2);
  inst.expected.push_back({"len_R_mod_I", n3 + n2, "R/(x1, x2^(n^3)) plus R/(x1^n - x2^n, x2^n, x1^n)"});
  inst.expected.push_back({"len_N_mod_IN", n3, "R/(I + (x1)) = k[x2]/(x2^(n^3))"});
  inst.expected.push_back({"H1_N", n3, "x1 is a nonzerodivisor on R, so H^1(I; N) has the length of N/IN"});
  return inst;
}

FamilyInstance f5(const FamilyParameters& p) {
  const unsigned n = p.n;
  require(p.s >= 1 && p.k >= 1, "F5 needs s >= 1 and k >= 1");
  FamilyInstance inst{"F5", p, make({"pi", "x1", "x2"}, pw("pi", p.s) + "*x1", p.prime, "pi"), {}, {}, {}, {}, true};
  inst.parameters.d = 2;
  inst.parameters.t.reset();
  set_ideal(inst, {pw("x2", n + 1) + " - x2*" + pw("(pi - x1)", n), pw("(pi - x1)", ipow(n, 3)) + " + " + pw("x2", n)});
  inst.targets.push_back({"N_pi", "R/(pi^" + std::to_string(p.k) + ", x2)",
                          cyclic(inst.ring, pw("pi", p.k) + ", x2", "N_pi")});
  inst.targets.push_back({"N_x1", "R/(x1, x2)", cyclic(inst.ring, "x1, x2", "N_x1")});
  inst.targets.push_back({"R", "the ring itself", cyclic(inst.ring, "", "R")});
  const std::uint64_t n3 = ipow(n, 3), n2 = ipow(n, 2);
  inst.expected.push_back({"len_S_mod_I_pi", n3 + n2, "the F4 count after setting pi = 0"});
  inst.expected.push_back({"len_S_mod_I_x1", n3 + n2, "the F4 count after setting x1 = 0"});
  inst.expected.push_back({"len_N_x1_mod_I", n3, "R/(I + (x1, x2)) = k[pi]/(pi^(n^3))"});
  if (p.k == 1) inst.expected.push_back({"len_N_pi_mod_I", n3, "R/(I + (pi, x2)) = k[x1]/(x1^(n^3))"});
  return inst;
}

FamilyInstance f6(const FamilyParameters& p) {
  const unsigned n = p.n, d = p.d;
  require(d >= 3, "F6 needs d >= 3");
  require(p.s >= 1, "F6 needs s >= 1");
  const std::uint64_t t = p.t.value_or(default_t("F6", n, d));
  require(t >= 2 * n, "F6 needs t >= 2n");
  auto v = v_names(d);
  std::vector<std::string> vars{"pi", "x", "y", "z"};
  vars.insert(vars.end(), v.begin(), v.end());
  FamilyInstance inst{"F6", p, make(vars, pw("pi", p.s) + "*x", p.prime, "pi"), {}, {}, {}, {}, true};
  inst.parameters.t = t;
  set_ideal(inst, general_generators(n, t, d, "(x - pi)", "y", "z", v));
  // Parameters x_1..x_d of the ring are x, y, v_1..v_{d-3}, z.
  std::vector<std::string> xs{"x", "y"};
  xs.insert(xs.end(), v.begin(), v.end());
  xs.push_back("z");
  std::vector<std::string> m1{"pi"}, m2 = xs, m3{"pi"};
  m1.insert(m1.end(), xs.begin(), xs.end() - 1);
  m3.insert(m3.end(), xs.begin() + 1, xs.end());
  int idx = 1;
  for (const auto& m : {m1, m2, m3}) {
    std::string tag = std::to_string(idx++);
    inst.targets.push_back({"M" + tag, "the ideal (" + join(m) + ") as a module", ideal_module(inst.ring, m, "M" + tag)});
    inst.targets.push_back({"N" + tag, "R/(" + join(m) + ")", cyclic(inst.ring, join(m), "N" + tag)});
  }
  inst.targets.push_back({"R", "the ring itself", cyclic(inst.ring, "", "R")});
  inst.expected.push_back({"len_R_mod_I_plus_M1", t, "R/(I + M1) = k[z]/(z^t)"});
  return inst;
}

}  // namespace

const NamedTarget& FamilyInstance::target(const std::string& name) const {
  for (const auto& t : targets) {
    if (t.name == name) return t;
  }
  throw ArgumentError("family " + family_id + " has no target named '" + name + "'");
}

std::optional<std::uint64_t> FamilyInstance::expected_value(const std::string& quantity) const {
  for (const auto& e : expected) {
    if (e.quantity == quantity) return e.value;
  }
  return std::nullopt;
}

std::uint64_t default_t(const std::string& id, unsigned n, unsigned d) {
  if (id == "F1") return ipow(n, 4);
  return 4 * ipow(n, d - 1);
}

std::vector<FamilyInfo> list_families() {
  return {
      {"F1", "three-dimensional regular family", "k[x,y,z]",
       "z^t - z^n*x^n, y^n - z^n*x, x^(n+1) - x*z^(t-n) + y*z^n", "n >= 2, t >= 2n (default n^4)",
       {"M", "N", "R"}, "M = (x,y)R is not asymptotically Cohen-Macaulay; H^2(I_n; M) has length t"},
      {"F2", "regular family in any dimension d >= 3", "k[x,y,z,v1..v(d-3)]",
       "z^t - z^n*x^n, x^(n+1) - x*z^(t-n) + y*z^n, y^n +- v_i*z^n +- x*z^n, "
       "v_i^n + v_i*z^(t-n) - (alternating tail)^n + v_i*z^n - v_i*x^n",
       "n >= 2, d >= 3, t >= 2n (default 4*n^(d-1)), optional DVR proxy for x or z", {"M", "N", "R"},
       "M = (x,y,v...)R and N = R/M; at d = 3 the third generator is y^n + x*z^n, a sign flip against F1"},
      {"F3", "non-unmixed surface", "k[x,y,z]/(xz, yz)", "x^n - z^(n^3), y^n", "n >= 2", {"R"},
       "length n^3 + n^2, multiplicity n^2, H^1 of length n^3"},
      {"F4", "regular plane family", "k[x1,x2]", "x1^(n+1) - x1*x2^n, x2^(n^3) + x1^n", "n >= 2", {"N", "R"},
       "N = R/(x1): the annihilating element is x1, so H^1(I_n; N) has length n^3"},
      {"F5", "DVR proxy, dimension 2", "k[pi,x1,x2]/(pi^s*x1)", "x2^(n+1) - x2*(pi-x1)^n, (pi-x1)^(n^3) + x2^n",
       "n >= 2, s >= 1, k >= 1", {"N_pi", "N_x1", "R"}, "pi models the uniformizer of a DVR"},
      {"F6", "DVR proxy in any dimension d >= 3", "k[pi,x,y,z,v1..v(d-3)]/(pi^s*x)",
       "the F2 generators with x - pi in place of x", "n >= 2, d >= 3, s >= 1, t >= 2n (default 4*n^(d-1))",
       {"M1", "N1", "M2", "N2", "M3", "N3", "R"},
       "pi models the uniformizer; parameters ordered x, y, v..., z; M1 = (pi, x, y, v...), M2 = all, "
       "M3 = (pi, y, v..., z)"},
  };
}

FamilyInstance instantiate_family(const std::string& id, const FamilyParameters& parameters) {
  require(parameters.n >= 2, "family parameter n must be at least 2");
  if (id == "F1") return f1(parameters);
  if (id == "F2") return f2(parameters);
  if (id == "F3") return f3(parameters);
  if (id == "F4") return f4(parameters);
  if (id == "F5") return f5(parameters);
  if (id == "F6") return f6(parameters);
  throw ArgumentError("unknown family '" + id + "'");
}

}  // namespace klab
