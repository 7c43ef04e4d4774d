#include <doctest.h>

#include <regex>

#include "ribbonry/enumerate.hpp"
#include "ribbonry/errors.hpp"
#include "ribbonry/json_io.hpp"
#include "ribbonry/render.hpp"

using namespace ribbonry;

TEST_CASE("tiling json round trip") {
  for (const auto& t : all_tilings(build_rectangle(3, 6), 3)) {
    Json j = to_json(t);
    CHECK(tiling_from_json(Json::parse(j.dump())) == t);
  }
  Json tile = to_json(Tile{{2, 1}, shape_from_word("EN", 3)});
  CHECK(tile.dump() == R"({"root":[2,1],"moves":"EN"})");
}

TEST_CASE("region json") {
  Region s = build_stair(2, 3);
  Json j = to_json(s);
  CHECK(j["area"] == 6);
  CHECK(region_from_json(j) == s);
  CHECK_THROWS_AS(region_from_json(Json::parse(R"({"cells":[[0]]})")), InvalidArgument);
  CHECK_THROWS_AS(tiling_from_json(Json::parse(R"({"tiles":[{"root":[0,0]}]})")), InvalidArgument);
  CHECK_THROWS_AS(tile_from_json(Json::parse(R"({"root":[0,0],"moves":"EX"})")), InvalidArgument);
}

TEST_CASE("graph json") {
  Json j = to_json(build_graph(build_rectangle(3, 4), 3));
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 6);
  CHECK(j["tau"].size() == 1);
  CHECK(j["free_edges"] == 5);
  CHECK(j["forced_edges"] == 1);
  CHECK(count_json(pow2(70)).is_string());
}

TEST_CASE("tile outline") {
  auto bar = tile_outline(Tile{{0, 0}, shape_from_word("EE", 3)});
  CHECK(bar == std::vector<Point>{{0, 0}, {3, 0}, {3, 1}, {0, 1}});
  auto ell = tile_outline(Tile{{0, 0}, shape_from_word("EN", 3)});
  CHECK(ell.size() == 6);
  auto zig = tile_outline(Tile{{0, 0}, shape_from_word("ENEN", 5)});
  CHECK(zig.size() == 10);
}

TEST_CASE("svg and ascii rendering") {
  Tiling t = sample_tiling(build_rectangle(3, 6), 3, 3);
  std::string svg = render_svg(t);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::regex poly("<polygon ");
  auto polys = std::distance(std::sregex_iterator(svg.begin(), svg.end(), poly), std::sregex_iterator());
  CHECK(polys == 6);

  Tiling two = all_tilings(build_rectangle(2, 2), 2).front();
  CHECK(render_ascii(two) == "bb\naa\n");
  CHECK(render_ascii(Tiling{{Tile{{0, 0}, shape_from_word("EN", 3)}}}) == ".a\naa\n");
  CHECK_THROWS_AS(render_svg(Tiling{}), InvalidArgument);
}
