#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "klab/cache.hpp"
#include "klab/error.hpp"
#include "klab/experiment.hpp"
#include "klab/families.hpp"
#include "klab/report.hpp"
#include "test_util.hpp"

using namespace klab;
using namespace klab::testing;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("klab_cli_io_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig f3_config() {
  return parse_config(R"({"family": "F3", "n": "2..3", "i": 1, "prime": 32003})");
}

}  // namespace

TEST(FormatDecimal, RoundHalfEven) {
  EXPECT_EQ(format_decimal(10, 14), "0.714286");
  EXPECT_EQ(format_decimal(1, 3), "0.333333");
  EXPECT_EQ(format_decimal(2, 3), "0.666667");
  // 1/128 = 0.0078125 sits exactly on a tie at six digits.
  EXPECT_EQ(format_decimal(1, 128), "0.007812");
  EXPECT_EQ(format_decimal(3, 128), "0.023438");
  EXPECT_EQ(format_decimal(5, 1), "5.000000");
  EXPECT_EQ(format_decimal(0, 7), "0.000000");
  EXPECT_EQ(format_decimal(1, 0), "");
  EXPECT_EQ(format_decimal(1, 8, 2), "0.12");
  EXPECT_EQ(format_decimal(3, 8, 2), "0.38");
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Config, Ranges) {
  EXPECT_EQ(parse_config(R"({"family":"F4","n":[2,4],"i":1})").n_values, (std::vector<unsigned>{2, 4}));
  EXPECT_EQ(parse_config(R"({"family":"F4","n":"2..4","i":1})").n_values, (std::vector<unsigned>{2, 3, 4}));
  EXPECT_EQ(parse_config(R"({"family":"F4","n":{"from":3,"to":4},"i":"0..1"})").indices,
            (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(parse_config(R"({"family":"F4","n":"3..2","i":1})").n_values.empty());
  auto c = parse_config(R"({"ring":{"variables":"x,y","relations":[]},"ideal":["x^2","y^3"],"i":[0,1,2]})");
  EXPECT_EQ(c.variables, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(c.ideal.size(), 2u);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("not json"), ArgumentError);
  EXPECT_THROW(parse_config(R"({"family":"F4","i":1})"), ArgumentError);
  EXPECT_THROW(parse_config(R"({"family":"F4","n":2})"), ArgumentError);
  EXPECT_THROW(parse_config(R"({"family":"F4","n":2,"i":1,"colour":"red"})"), ArgumentError);
  EXPECT_THROW(parse_config(R"({"family":"F4","n":"a..b","i":1})"), ArgumentError);
  EXPECT_THROW(parse_config(R"({"family":"F4","n":2,"i":1,"cap":"big"})"), ArgumentError);
  EXPECT_THROW(parse_config(R"({"variables":["x"],"i":1})"), ArgumentError);
  EXPECT_THROW(load_config("/nonexistent/klab.json"), IoError);
}

TEST(Config, PrimePrecedence) {
  EXPECT_EQ(resolve_prime(101, 103, "107"), 101u);
  EXPECT_EQ(resolve_prime(std::nullopt, 103, "107"), 103u);
  EXPECT_EQ(resolve_prime(std::nullopt, std::nullopt, "107"), 107u);
  EXPECT_EQ(resolve_prime(std::nullopt, std::nullopt, nullptr), 32003u);
  EXPECT_EQ(resolve_prime(std::nullopt, std::nullopt, ""), 32003u);
  EXPECT_THROW(resolve_prime(std::nullopt, std::nullopt, "seven"), ArgumentError);
}

TEST(Targets, Resolve) {
  auto r = make_ring("x,y,z");
  EXPECT_EQ(resolve_target("R", r).ambient_rank(), 1u);
  EXPECT_EQ(resolve_target("ideal(x, y)", r).ambient_rank(), 2u);
  EXPECT_EQ(resolve_target("quotient(x)", r).relations().size(), 1u);
  EXPECT_THROW(resolve_target("M", r), ArgumentError);
  auto inst = instantiate_family("F1", 2);
  EXPECT_EQ(resolve_target("M", inst.ring, &inst).ambient_rank(), 2u);
}

// Values come from running the family at n = 2, 3: R/I has length n^3 + n^2
// and H^1(I; R) has length n^3 (see the families unit tests for derivations).
TEST(RunExperiment, F3Rows) {
  auto r = run_experiment(f3_config());
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.header.family, "F3");
  EXPECT_EQ(r.header.prime, 32003u);
  const auto& a = r.rows[0];
  EXPECT_EQ(a.n, 2u);
  EXPECT_EQ(a.i, 1u);
  EXPECT_EQ(a.len_hi, 8u);
  EXPECT_EQ(a.len_r_mod_i, 12u);
  EXPECT_EQ(a.len_m_mod_im, 12u);
  EXPECT_EQ(a.status, "certified");
  EXPECT_EQ(r.rows[1].len_hi, 27u);
  EXPECT_EQ(r.rows[1].len_r_mod_i, 36u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.ratio_num, row.len_hi);
    EXPECT_EQ(row.ratio_den, row.len_r_mod_i);
  }
  EXPECT_FALSE(r.citations.empty());

  std::istringstream csv(to_csv(r));
  std::string header, line;
  std::getline(csv, header);
  EXPECT_EQ(header, kCsvHeader);
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("F3,2,,1,8,12,12,8,12,0.666667,", 0), 0u) << line;
}

TEST(RunExperiment, F1GuidingExample) {
  auto r = run_experiment(parse_config(R"({"family":"F1","n":2,"target":"M","i":"0..2"})"));
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].len_hi, 0u);
  EXPECT_EQ(r.rows[1].len_hi, 0u);
  EXPECT_EQ(r.rows[2].len_hi, 16u);
  EXPECT_EQ(r.rows[2].t, 16u);
}

TEST(RunExperiment, EmptyRange) {
  auto r = run_experiment(parse_config(R"({"family":"F3","n":"3..2","i":1})"));
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.header.family, "F3");
  EXPECT_EQ(to_csv(r), std::string(kCsvHeader) + "\n");
}

TEST(RunExperiment, ErrorsStayInRow) {
  auto r = run_experiment(parse_config(R"({"family":"F3","n":2,"i":[1,7]})"));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].status, "certified");
  EXPECT_EQ(r.rows[1].status, "error");
  EXPECT_FALSE(r.rows[1].error.empty());
}

TEST(RunExperiment, CustomRing) {
  auto r = run_experiment(parse_config(R"({"variables":["x","y"],"ideal":"x^2, y^3","i":[0,2]})"));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.header.family, "custom");
  EXPECT_EQ(r.rows[0].len_hi, 0u);
  EXPECT_EQ(r.rows[1].len_hi, 6u);
  EXPECT_EQ(r.rows[1].len_r_mod_i, 6u);
}

TEST(Report, JsonRoundTrip) {
  auto r = run_experiment(f3_config());
  ReportRow extra;
  extra.family = "F3";
  extra.n = 9;
  extra.i = 2;
  extra.status = "error";
  extra.error = "quote \" and comma ,";
  set_ratio(extra);
  r.rows.push_back(extra);
  EXPECT_EQ(report_from_json(to_json(r)), r);
  EXPECT_THROW(report_from_json("{\"header\": "), ParseError);
  EXPECT_THROW(report_from_json("{}"), ParseError);
}

TEST(Report, EmitWritesNewlineTerminatedFiles) {
  auto dir = fresh_dir("emit");
  auto r = run_experiment(f3_config());
  emit_report(r, ReportFormat::kCsv, dir / "r.csv");
  emit_report(r, ReportFormat::kJson, dir / "r.json");
  EXPECT_EQ(slurp(dir / "r.csv").back(), '\n');
  EXPECT_EQ(slurp(dir / "r.json").back(), '\n');
  EXPECT_EQ(report_from_json(slurp(dir / "r.json")), r);
  try {
    emit_report(r, ReportFormat::kCsv, dir / "missing" / "r.csv");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
  }
  EXPECT_THROW(parse_report_format("xml"), ArgumentError);
  fs::remove_all(dir);
}

TEST(Cache, StoresAndChecksKeys) {
  auto dir = fresh_dir("cache");
  ResultCache c(dir / "nested");
  EXPECT_FALSE(c.get("k1"));
  c.put("k1", "{\"a\":1}");
  ASSERT_TRUE(c.get("k1"));
  EXPECT_EQ(*c.get("k1"), "{\"a\":1}");
  EXPECT_EQ(c.path_for("k1").filename().string(), sha256_hex("k1") + ".json");
  EXPECT_EQ(c.misses(), 1u);
  EXPECT_EQ(c.hits(), 2u);
  fs::remove_all(dir);
}

TEST(Cache, Transparency) {
  auto dir = fresh_dir("transparency");
  auto cfg = parse_config(R"({"family":"F4","n":"2..3","target":"N","i":[0,1]})");
  const std::string plain = to_csv(run_experiment(cfg)) + to_json(run_experiment(cfg));
  ResultCache cold(dir);
  const std::string first = to_csv(run_experiment(cfg, &cold));
  EXPECT_EQ(cold.hits(), 0u);
  ResultCache warm(dir);
  auto cached = run_experiment(cfg, &warm);
  EXPECT_EQ(warm.misses(), 0u);
  EXPECT_EQ(warm.hits(), 4u);
  EXPECT_EQ(first + to_json(cached), plain);
  fs::remove_all(dir);
}

TEST(Determinism, SameSeedSameCsv) {
  auto cfg = parse_config(R"({"family":"F5","n":2,"s":2,"target":"N_pi","i":"0..2","seed":7,"prime":101})");
  auto a = to_csv(run_experiment(cfg));
  auto b = to_csv(run_experiment(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(run_experiment(cfg).header.prime, 101u);
}

// emit(parse(s)) must reparse to the same polynomial.
TEST(Parser, RoundTripCorpus) {
  std::vector<std::pair<RingSpec, std::string>> corpus;
  auto r3 = make_ring("x,y,z");
  for (const char* s : {"0", "1", "-1", "x", "-x", "x + y + z", "x*y*z", "x^2*y - 3*z^5", "(x + y)^3",
                        "(x - y)*(x + y)", "2*x - 2*x", "32002*x + 1", "32003", "-(x - 1)^2", "((x))",
                        "x^0 + y^1", "(x + y + z)^4 - x^4", "7*x*7", "x*(y*(z + 1))", "z^16 - z^2*x^2"}) {
    corpus.emplace_back(r3, s);
  }
  auto rp = make_ring("pi,x1,x2", "pi*x1", 32003, "pi");
  for (const char* s : {"(p - x1)^2", "p^3*x2", "(pi - x1)^8 + x2^2"}) corpus.emplace_back(rp, s);
  for (const auto& info : list_families()) {
    for (unsigned n : {2u, 3u}) {
      auto inst = instantiate_family(info.id, n);
      for (const auto& g : inst.generator_text) corpus.emplace_back(inst.ring, g);
    }
  }
  auto r5 = make_ring("x,y,z,v1,v2");
  std::mt19937_64 rng(99);
  while (corpus.size() < 60) corpus.emplace_back(r5, random_poly(r5, rng, 5, 6).to_string(r5.variables()));
  ASSERT_GE(corpus.size(), 50u);
  for (const auto& [ring, text] : corpus) {
    Polynomial f = parse_poly(text, ring);
    std::string emitted = f.to_string(ring.variables());
    EXPECT_EQ(parse_poly(emitted, ring), f) << text << " -> " << emitted;
  }
  EXPECT_EQ(parse_poly("(p - x1)^2", rp), parse_poly("pi^2 - 2*pi*x1 + x1^2", rp));
}
