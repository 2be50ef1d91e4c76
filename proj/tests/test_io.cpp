#include "helpers.hpp"
#include "novikov/corpus.hpp"
#include "novikov/errors.hpp"
#include "novikov/io.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("explicit ingestion") {
  const Json doc = Json::parse(R"({"coefficients": "Q", "rank": 1, "cells": [["v"], ["e"]],
                                   "boundaries": [[["t - 1"]]]})");
  const EquivariantComplex x = ingest(doc);
  CHECK(x.boundary(1)(0, 0) == gr("t - 1"));
  CHECK(ingest(to_json(x)) == x);
}

TEST_CASE("ingestion rejects broken squares and schemas") {
  const Json broken = Json::parse(R"({"coefficients": "Q", "rank": 1, "cells": [["v"], ["e"], ["f"]],
                                      "boundaries": [[["t - 1"]], [["1"]]]})");
  CHECK_THROWS_AS(ingest(broken), ValidationError);
  CHECK_THROWS_AS(ingest(Json::parse(R"({"rank": 1})")), InputError);
  CHECK_THROWS_AS(ingest(Json::parse(R"({"coefficients": "R", "rank": 1, "cells": [["v"]]})")), InputError);
  CHECK_THROWS_AS(ingest(Json::parse(R"({"rank": 1, "cells": [["v"], ["e"]], "boundaries": [[["t^"]]]})")),
                  InputError);
  CHECK_THROWS_AS(ingest(Json::parse(R"({"rank": 1, "cells": [["v"], ["e"]], "boundaries": [[[1.5]]]})")),
                  InputError);
}

TEST_CASE("presentation ingestion") {
  const Json doc = Json::parse(R"({"generators": ["x", "y"], "relators": ["x*y*x^-1*y^-1"],
                                   "deck_map": [[1, 0], [0, 1]]})");
  const EquivariantComplex x = ingest(doc);
  CHECK(x == corpus::torus());
  const Json klein = Json::parse(R"({"coefficients": "Z2", "generators": ["x", "y"], "relators": ["x*y*x*y^-1"],
                                     "deck_map": [[0], [1]]})");
  CHECK(ingest(klein) == corpus::klein_bottle());
  const Json free = Json::parse(R"({"generators": ["x"], "deck_map": [[1]]})");
  CHECK(ingest(free).boundaries() == corpus::circle().boundaries());
}

TEST_CASE("data files match the built-in corpus") {
  for (const auto& e : corpus::entries())
    CHECK(ingest_file(std::string(NOVIKOV_DATA_DIR) + "/" + e.name + ".json") == e.complex);
  CHECK_THROWS_AS(ingest_file(std::string(NOVIKOV_DATA_DIR) + "/missing.json"), InputError);
}

TEST_CASE("polytope documents") {
  const Polytope p = polytope_from_json(Json::parse(R"({"rank": 2, "vertices": [["1/2", 0], [0, "3"]]})"));
  CHECK(p == Polytope({{Rational(1, 2), 0}, {0, 3}}));
  CHECK(polytope_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"vertices": [[0.5, 0]]})")), InputError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"rank": 3, "vertices": [[1, 0]]})")), InputError);
}

TEST_CASE("report JSON shape") {
  const Json r = to_json(novikov_betti(corpus::torus(), CohomologyClass{1, 1}));
  CHECK(r["betti"] == Json::array({0, 0, 0}));
  CHECK(r["chi"] == 0);
  CHECK(r["method"] == "fraction-field exact");
  CHECK(r["ring"]["kind"] == "class");
  CHECK(r["ring"]["cover_rank"] == 1);
  CHECK(r["checks"]["euler"] == true);
}
