#include "discarr/fixtures.hpp"

#include <stdexcept>

#include "discarr/io.hpp"

namespace discarr {

namespace {

Fixture example_5_1() {
  return {"example-5-1",
          "Six lines in three perpendicular pairs (1,4), (2,5), (3,6): x1 = 0, 2x1 + 3x2 = -2, "
          "3x1 + 2x2 = 3, x2 = 0, 3x1 - 2x2 = 5, 2x1 - 3x2 = 5.",
          Arrangement(RatMatrix{{1, 0}, {2, 3}, {3, 2}, {0, 1}, {3, -2}, {2, -3}}, {0, -2, 3, 0, 5, 5}),
          {{"generic", "true"},
           {"cones", "884"},
           {"very-generic", "false"},
           {"very-generic-witness", "{{1,2,3},{1,5,6},{2,4,6},{3,4,5}}"}}};
}

Fixture example_5_2() {
  return {"example-5-2",
          "Six lines with slopes 0, -1, -2, vertical, 1, 1/2. Slope s gives the normal (-s, 1) "
          "scaled to integers and a vertical line gives (1, 0). The constants (0, 2, 3, 0, 5, 7) are "
          "a chosen generic translate; the cone count depends only on the normals.",
          Arrangement(RatMatrix{{0, 1}, {1, 1}, {2, 1}, {1, 0}, {-1, 1}, {-1, 2}}, {0, 2, 3, 0, 5, 7}),
          {{"generic", "true"}, {"cones", "888"}, {"very-generic", "false"}}};
}

Fixture prop_6_1() {
  return {"prop-6-1",
          "Six lines y = 0, x - 2y = 7, -2x + y = 4, x = 0, 5x + y = 2, x + y = -3. Lines 1, 2, 5 "
          "bound the triangular cell ABC.",
          Arrangement(RatMatrix{{0, 1}, {1, -2}, {-2, 1}, {1, 0}, {5, 1}, {1, 1}}, {0, 7, 4, 0, 2, -3}),
          {{"generic", "true"},
           {"very-generic", "true"},
           {"cones", "892"},
           {"cell:{1,2,5}", "true"},
           {"facet:{1,2,5}", "false"}}};
}

Fixture triangle_altitudes() {
  return {"triangle-altitudes",
          "Chosen coordinates: acute triangle with vertices (0,0), (4,0), (1,3) on lines 1, 3, 5 and its "
          "altitudes on lines 4, 6, 2 meeting at the orthocenter (1,1). Lines: y = 0, x + 3y = 4, "
          "x + y = 4, x = 1, 3x - y = 0, x - y = 0.",
          Arrangement(RatMatrix{{0, 1}, {1, 3}, {1, 1}, {1, 0}, {3, -1}, {1, -1}}, {0, 4, 4, 1, 0, 0}),
          {{"concurrencies", "{{1,2,3},{1,5,6},{2,4,6},{3,4,5}}"}, {"in-P", "false"}}};
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"example-5-1", "example-5-2", "prop-6-1", "triangle-altitudes"};
}

Fixture load_fixture(const std::string& name) {
  if (name == "example-5-1") return example_5_1();
  if (name == "example-5-2") return example_5_2();
  if (name == "prop-6-1") return prop_6_1();
  if (name == "triangle-altitudes") return triangle_altitudes();
  std::string all;
  for (const auto& n : fixture_names()) all += (all.empty() ? "" : ", ") + n;
  throw std::out_of_range("unknown fixture \"" + name + "\"; available: " + all);
}

std::string fixture_document(const Fixture& f) {
  io::json j;
  j["description"] = f.description;
  const io::json body = io::arrangement_to_json(f.arrangement);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j.dump(2) + "\n";
}

}  // namespace discarr
