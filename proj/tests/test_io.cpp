#include "datum_corpus.hpp"

#include <tamagawa/errors.hpp>
#include <tamagawa/fields.hpp>
#include <tamagawa/io.hpp>

#include <doctest.h>

#include <filesystem>

using namespace tamagawa;

namespace {

std::string data_path(const std::string& name) { return std::string(TAMAGAWA_SOURCE_DIR) + "/data/" + name; }

}  // namespace

TEST_CASE("data round-trip through JSON") {
  for (const auto& [name, d] : testing_support::datum_corpus()) {
    CAPTURE(name);
    Json j = datum_to_json(d);
    NormTorusDatum back = parse_datum(j);
    CHECK(same_datum(d, back));
    CHECK(dump(datum_to_json(back)) == dump(j));
  }
}

TEST_CASE("shipped data files load and agree with their constructors") {
  for (const auto& entry : std::filesystem::directory_iterator(std::string(TAMAGAWA_SOURCE_DIR) + "/data")) {
    CAPTURE(entry.path().string());
    CHECK_NOTHROW(load_datum(entry.path().string()));
  }
  CHECK(same_datum(load_datum(data_path("q8-5-181.json")), q8_landau(5, 181).field.datum));
  CHECK(same_datum(load_datum(data_path("cyclotomic-5.json")), cyclotomic(5).datum));
  NormTorusDatum a4 = load_datum(data_path("iota-times-a4.json"));
  CHECK(a4.group.order() == 24);
  CHECK(a4.is_cm());
}

TEST_CASE("group families parse") {
  CHECK(parse_group(Json::parse(R"({"family": "cyclic", "n": 6})")).order() == 6);
  CHECK(parse_group(Json::parse(R"({"family": "dihedral", "n": 5})")).order() == 10);
  CHECK(parse_group(Json::parse(R"({"family": "quaternion"})")).order() == 8);
  CHECK(parse_group(Json::parse(R"({"family": "units_mod", "n": 15})")).order() == 8);
  CHECK(parse_group(Json::parse(R"({"family": "product", "factors": [{"family": "cyclic", "n": 2},
                                    {"family": "cyclic", "n": 3}]})"))
            .order() == 6);
  FiniteGroup q8 = quaternion_group();
  FiniteGroup back = parse_group(group_to_json(q8));
  REQUIRE(back.order() == 8);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) REQUIRE(back.mul(x, y) == q8.mul(x, y));
}

TEST_CASE("malformed input is rejected as invalid data") {
  const char* bad[] = {
      R"([])",
      R"({"pairs": []})",
      R"({"group": {"family": "cyclic", "n": 2}})",
      R"({"group": {"family": "tetrahedral"}, "pairs": []})",
      R"({"group": {"family": "cyclic", "n": 2}, "pairs": [{"H": [5], "Ntilde": [1]}]})",
      R"({"group": {"family": "cyclic", "n": 2}, "pairs": [{"H": [1], "Ntilde": []}]})",
      R"({"group": {"family": "cyclic", "n": 4}, "pairs": [{"H": [], "Ntilde": [2]}], "iota": 1})",
      R"({"group": {"table": [[0, 1], [1, 1]]}, "pairs": []})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_datum(Json::parse(text)), ConstructionError);
  }
  CHECK_THROWS_AS(load_datum(data_path("does-not-exist.json")), ConstructionError);
}

TEST_CASE("reports serialise deterministically") {
  NormTorusDatum d = q8_landau(5, 181).field.datum;
  const std::string first = dump(to_json(tamagawa_number(d)));
  CHECK(first == dump(to_json(tamagawa_number(d))));
  CHECK(first.back() == '\n');
  Json j = Json::parse(first);
  CHECK(j["tau"]["num"] == 1);
  CHECK(j["tau"]["den"] == 2);
  Json err = to_json(DomainError("outside", {{"n", "6"}}));
  CHECK(err["error"]["code"] == "domain");
  CHECK(err["error"]["context"]["n"] == "6");
}
