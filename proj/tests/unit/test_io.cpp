#include <filesystem>
#include <string>

#include "approachlab/corpus.hpp"
#include "approachlab/error.hpp"
#include "approachlab/io.hpp"
#include "doctest.h"

using namespace approachlab;

namespace {

const std::string kSmall = R"({
  "kind": "regret",
  "name": "tiny",
  "dim": 2,
  "P": {"vertices": [["1", "0"], ["0", "1"]]},
  "L": {"vertices": [["0", "0"], ["1", "1"]]},
  "Phi": [{"label": "swap", "linear": [["0", "1"], ["1", "0"]], "offset": ["0", "0"]}]
})";

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a regret instance") {
  const auto any = parse_instance(kSmall);
  const auto& inst = std::get<RegretInstance>(any);
  CHECK(inst.name == "tiny");
  CHECK(inst.P.num_vertices() == 2);
  CHECK(inst.Phi[0].linear(0, 1) == 1);
}

TEST_CASE("serialize then parse is the identity, and reserialization is byte-stable") {
  for (const auto& entry : corpus::entries()) {
    const auto inst = corpus::build(entry.name);
    const std::string text = instance_to_json(inst);
    CHECK(text.back() == '\n');
    CHECK(instance_to_json(parse_instance(text)) == text);
  }
}

TEST_CASE("checked-in corpus files round-trip byte for byte") {
  const std::filesystem::path dir = std::filesystem::path(APPROACHLAB_SOURCE_DIR) / "corpus";
  std::size_t seen = 0;
  for (const auto& file : std::filesystem::directory_iterator(dir)) {
    const std::string text = read_file(file.path().string());
    CHECK_MESSAGE(instance_to_json(parse_instance(text)) == text, file.path().string());
    ++seen;
  }
  CHECK(seen == corpus::entries().size());
}

TEST_CASE("non-canonical rationals are reduced on output") {
  std::string text = kSmall;
  text.replace(text.find(R"(["1", "1"])"), 10, R"(["2/2", "1"])");
  const auto out = instance_to_json(parse_instance(text));
  CHECK(out.find("2/2") == std::string::npos);
}

TEST_CASE("malformed documents report a position") {
  const std::string truncated = kSmall.substr(0, kSmall.size() / 2);
  const std::string err = error_of(truncated);
  CHECK(err.find("line") != std::string::npos);
  CHECK(err.find("column") != std::string::npos);
  CHECK_FALSE(error_of(R"({"kind": "other"})").empty());
  std::string bad_rat = kSmall;
  bad_rat.replace(bad_rat.find(R"("offset": ["0")"), 15, R"("offset": ["x")");
  CHECK_FALSE(error_of(bad_rat).empty());
  std::string bad_dim = kSmall;
  bad_dim.replace(bad_dim.find(R"("dim": 2)"), 8, R"("dim": 3)");
  CHECK_THROWS(parse_instance(bad_dim));
}

TEST_CASE("read_file reports missing files") {
  CHECK_THROWS_AS(read_file("/nonexistent/approachlab.json"), Error);
}
