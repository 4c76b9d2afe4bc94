#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <set>

#include "tcq/labeling.hpp"

using namespace tcq;

TEST_CASE("partition geometry") {
  const Partition z4 = Partition::z4();
  CHECK(z4.dim == 1);
  CHECK(z4.min_sq_distance(0, 1) == 1.0);
  CHECK(z4.min_sq_distance(0, 2) == 4.0);
  CHECK(z4.min_sq_distance(3, 0) == 1.0);  // wraps through 4
  CHECK(z4.min_sq_distance(1, 3) == 4.0);
  CHECK(z4.min_sq_distance(2, 2) == 0.0);

  const Partition z22 = Partition::z2z2();
  CHECK(z22.dim == 2);
  CHECK(z22.min_sq_distance(0, 1) == 1.0);  // (0,0) vs (1,0)
  CHECK(z22.min_sq_distance(0, 3) == 2.0);  // (0,0) vs (1,1)
  CHECK(z22.min_sq_distance(1, 2) == 2.0);  // (1,0) vs (0,1)

  CHECK(Partition::by_id("z4").id == "z4");
  CHECK_THROWS_AS(Partition::by_id("z8"), std::invalid_argument);
}

TEST_CASE("labelings are bijections with the documented assignments") {
  const Labeling natural = ungerboeck_labeling_z4();
  CHECK(natural.label_of[0] == 0);
  CHECK(natural.label_of[3] == 3);

  const Labeling gray = distance_preserving_labeling_z4();
  CHECK(gray.label_of[0] == 0);
  CHECK(gray.label_of[1] == 1);
  CHECK(gray.label_of[2] == 3);
  CHECK(gray.label_of[3] == 2);

  for (const Labeling& lab : {natural, gray, distance_preserving_labeling_z2z2(),
                              ungerboeck_labeling_z2z2()}) {
    std::set<int> labels(lab.label_of.begin(), lab.label_of.end());
    CHECK(labels.size() == 4);
    for (int l = 0; l < 4; ++l)
      CHECK(lab.label_of[lab.coset_of[static_cast<std::size_t>(l)]] == l);
  }
}

TEST_CASE("gray z4 labeling: adjacency and antipodes") {
  const Labeling gray = distance_preserving_labeling_z4();
  auto hamming = [&](int i, int j) {
    return std::popcount(static_cast<unsigned>(
        gray.label_of[static_cast<std::size_t>(i)] ^
        gray.label_of[static_cast<std::size_t>(j)]));
  };
  for (int k = 0; k < 4; ++k) CHECK(hamming(k, (k + 1) % 4) == 1);
  CHECK(hamming(0, 2) == 2);
  CHECK(hamming(1, 3) == 2);
}

TEST_CASE("z2z2 distance-preserving labeling pairs") {
  const Labeling lab = distance_preserving_labeling_z2z2();
  auto hamming = [&](int i, int j) {
    return std::popcount(static_cast<unsigned>(
        lab.label_of[static_cast<std::size_t>(i)] ^
        lab.label_of[static_cast<std::size_t>(j)]));
  };
  // reps order: 0=(0,0), 1=(1,0), 2=(0,1), 3=(1,1)
  CHECK(hamming(0, 1) == 1);  // squared distance 1
  CHECK(hamming(0, 3) == 2);  // squared distance 2
  CHECK(hamming(1, 2) == 2);  // squared distance 2 by symmetry
}

TEST_CASE("is_distance_preserving classifies the constructions") {
  CHECK(is_distance_preserving(distance_preserving_labeling_z4()));
  CHECK(is_distance_preserving(distance_preserving_labeling_z2z2()));
  CHECK_FALSE(is_distance_preserving(ungerboeck_labeling_z4()));
  CHECK_FALSE(is_distance_preserving(ungerboeck_labeling_z2z2()));
}

TEST_CASE("xor relabeling preserves the distance-preserving property") {
  for (std::uint8_t mask = 0; mask < 4; ++mask) {
    CHECK(is_distance_preserving(xor_relabel(distance_preserving_labeling_z4(), mask)));
    CHECK(is_distance_preserving(xor_relabel(distance_preserving_labeling_z2z2(), mask)));
  }
}

TEST_CASE("labelings resolve by CLI name") {
  CHECK(labeling_by_name("ungerboeck-z4").name == "ungerboeck-z4");
  CHECK(labeling_by_name("gray-z4").name == "gray-z4");
  CHECK(labeling_by_name("dp-z2z2").name == "dp-z2z2");
  CHECK(labeling_by_name("natural-z2z2").name == "dp-z2z2");
  CHECK(labeling_by_name("ungerboeck-z2z2").name == "ungerboeck-z2z2");
  CHECK_THROWS_AS(labeling_by_name("nope"), std::invalid_argument);
}
