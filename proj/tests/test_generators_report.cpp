#include "overlap/complex_io.hpp"
#include "overlap/expansion.hpp"
#include "overlap/generators.hpp"
#include "overlap/report.hpp"

#include <doctest.h>

#include <regex>

using namespace overlap;

TEST_CASE("complete skeletons") {
  const auto k5 = ComplexSkeleton::from_simplices(complete_skeleton(4, 1));
  CHECK(k5.num_cells(0) == 5);
  CHECK(k5.num_cells(1) == 10);
  const auto s = ComplexSkeleton::from_simplices(complete_skeleton(4, 2));
  CHECK(s.num_cells(2) == 10);
  CHECK(ComplexSkeleton::from_simplices(complete_skeleton(3, 3)).num_cells(3) == 1);
  CHECK_THROWS_AS(complete_skeleton(2, 3), std::invalid_argument);
}

TEST_CASE("cycles") {
  const auto c4 = ComplexSkeleton::from_simplices(cycle(4));
  CHECK(c4.num_cells(0) == 4);
  CHECK(c4.num_cells(1) == 4);
  CHECK(betti_numbers(c4) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("Linial-Meshulam complexes") {
  const auto full = ComplexSkeleton::from_simplices(linial_meshulam(5, 1, 1, 99));
  CHECK(full.num_cells(2) == 10);
  CHECK(full.num_cells(1) == 10);
  const auto none = ComplexSkeleton::from_simplices(linial_meshulam(5, 0, 1, 99));
  CHECK(none.dim() == 1);
  CHECK(linial_meshulam(6, 1, 2, 7) == linial_meshulam(6, 1, 2, 7));
  bool differs = false;
  for (std::uint64_t s = 0; s < 10 && !differs; ++s) differs = linial_meshulam(6, 1, 2, s) != linial_meshulam(6, 1, 2, 7);
  CHECK(differs);
  CHECK_THROWS_AS(linial_meshulam(5, 3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(linial_meshulam(5, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("generated complexes round trip through the file format") {
  const auto s = linial_meshulam(6, 1, 3, 5);
  const auto x = parse_complex(format_simplices(s));
  CHECK(x.num_cells(1) == 15);
}

TEST_CASE("reports use exact strings only") {
  const auto x = read_complex_file(std::string(FIXTURE_DIR) + "/c3.cx");
  const auto n = WeightedNorm::hamming(x);
  Json config;
  config["seed"] = "1";
  Json j = report_header("analyze", config);
  j["result"] = to_json(analyze(x, n), x);
  const auto text = dump(j);
  CHECK(text == dump(j));
  CHECK(text.find("\"schema\": \"topoverlap-report/1\"") != std::string::npos);
  CHECK(text.find("\"cosystole_theta\": \"1/3\"") != std::string::npos);
  CHECK(text.find("\"cofilling_L\": \"1/2\"") != std::string::npos);
  // no floating point literal anywhere
  CHECK_FALSE(std::regex_search(text, std::regex(R"(:\s*-?[0-9]+\.[0-9])")));
}
