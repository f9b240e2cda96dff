#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include "randlp/errors.hpp"
#include "randlp/generator.hpp"
#include "randlp/instance_io.hpp"
#include "randlp/support.hpp"

using namespace randlp;

namespace {

GeneratorParams params(std::int64_t n, std::int64_t d, std::uint64_t seed) {
  GeneratorParams p;
  p.n = n;
  p.d = d;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("support-only n = 1 file") {
  auto p = params(1, 0, 7);
  CHECK(instance_to_string(support_only_instance(p)) == "1 3 0 7\n1 200\n-1 0\n1 100\n100\n");
}

TEST_CASE("header carries m = 2n+1+d") {
  auto text = instance_to_string(generate_sequential(params(2, 5, 42)).instance);
  CHECK(text.rfind("2 10 5 42\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 12);
}

TEST_CASE("17 significant digits") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(200) == "200");
  CHECK(format_real(-0.0) == "-0");
}

TEST_CASE("property: read(write(x)) == x") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> coef(-1e3, 1e3);
  std::uniform_int_distribution<int> exponent(-300, 300);
  int count = 0;
  for (std::int64_t n : {1, 2, 5, 10}) {
    for (std::int64_t d : {0, 1, 5}) {
      for (int rep = 0; rep < 84; ++rep, ++count) {
        // Arbitrary binary64 values exercise the text format harder than
        // generator output does; the structure still mirrors a real instance.
        auto p = params(n, d, gen());
        LPInstance inst = support_only_instance(p);
        for (std::int64_t k = 0; k < d; ++k) {
          Inequality q{std::vector<double>(static_cast<std::size_t>(n)), 0};
          for (auto& a : q.a) a = coef(gen) * std::pow(10.0, exponent(gen) / 10);
          q.b = coef(gen) * std::pow(10.0, exponent(gen));
          inst.random.push_back(std::move(q));
        }
        std::istringstream in(instance_to_string(inst));
        CHECK(read_instance(in, p) == inst);
      }
    }
  }
  CHECK(count >= 1000);
}

TEST_CASE("generated instances round trip") {
  auto p = params(5, 5, 8);
  auto inst = generate_sequential(p).instance;
  std::istringstream in(instance_to_string(inst));
  auto back = read_instance(in, p);
  CHECK(back == inst);
}

TEST_CASE("reader recovers alpha, theta and seed") {
  auto p = params(3, 0, 99);
  p.alpha = 50;
  p.theta = 20;
  p.rho = 10;
  std::istringstream in(instance_to_string(support_only_instance(p)));
  auto back = read_instance(in);
  CHECK(back.params.alpha == 50);
  CHECK(back.params.theta == 20);
  CHECK(back.params.seed == 99);
  CHECK(back.params.rho == GeneratorParams{}.rho);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("row shortfall") {
    auto text = instance_to_string(generate_sequential(params(2, 5, 42)).instance);
    // Drop the last constraint row.
    auto last_nl = text.rfind('\n', text.size() - 2);
    auto prev_nl = text.rfind('\n', last_nl - 1);
    text.erase(prev_nl + 1, last_nl - prev_nl);
    std::istringstream in(text);
    try {
      read_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 12);
      CHECK(std::string(e.what()).find("m = 10 constraint rows but only 9") != std::string::npos);
    }
  }
  SUBCASE("header promises more rows than present") {
    std::istringstream in("1 4 1 0\n1 200\n-1 0\n1 100\n");
    try {
      read_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(std::string(e.what()).find("only 2") != std::string::npos);
    }
  }
  SUBCASE("non-numeric token") {
    std::istringstream in("1 3 0 0\n1 200\n-1 zero\n1 100\n100\n");
    try {
      read_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("'zero'") != std::string::npos);
    }
  }
  SUBCASE("inconsistent header") {
    std::istringstream in("2 10 4 0\n");
    CHECK_THROWS_AS(read_instance(in), ParseError);
  }
  SUBCASE("trailing rows") {
    std::istringstream in("1 3 0 0\n1 200\n-1 0\n1 100\n100\n5 5\n");
    CHECK_THROWS_AS(read_instance(in), ParseError);
  }
}

TEST_CASE("file round trip and unwritable destination") {
  auto dir = std::filesystem::temp_directory_path() / "randlp_io_test";
  std::filesystem::create_directories(dir);
  auto inst = generate_sequential(params(2, 3, 1)).instance;
  write_instance(inst, dir / "a.lpp");
  CHECK(read_instance(dir / "a.lpp", inst.params) == inst);
  CHECK_THROWS_AS(write_instance(inst, dir / "missing" / "a.lpp"), IoError);
  CHECK_THROWS_AS(read_instance(dir / "nope.lpp"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("stats report") {
  std::ostringstream os;
  write_stats(generate_sequential(params(2, 0, 0)).stats, os);
  const auto text = os.str();
  for (const char* key : {"candidates_drawn = 0", "rejected_distance = 0",
                          "rejected_objective = 0", "rejected_similarity = 0", "rounds = 0",
                          "wall_time_ms = "}) {
    CHECK(text.find(key) != std::string::npos);
  }
}

TEST_CASE("stats report is parseable and conserved") {
  auto r = generate_sequential(params(2, 5, 3));
  std::ostringstream os;
  write_stats(r.stats, os);
  std::istringstream in(os.str());
  std::map<std::string, double> kv;
  std::string key, eq;
  double value;
  while (in >> key >> eq >> value) kv[key] = value;
  CHECK(kv.at("candidates_drawn") ==
        5 + kv.at("rejected_distance") + kv.at("rejected_objective") +
            kv.at("rejected_similarity"));
}
