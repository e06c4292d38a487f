#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ringprob/ring_io.hpp"

using namespace fx;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = RINGPROB_TEST_DATA;

}  // namespace

TEST(RingFile, RoundTripBuiltins) {
  for (auto spec : {"nc4a", "zn:6", "ut2:2", "m2:2", "nc4a*zn:2"}) {
    const CatalogEntry e{spec, ring(spec), Provenance::Builtin, ""};
    const auto back = parse_ring_file(serialize_ring(e));
    EXPECT_EQ(back.name, spec);
    EXPECT_TRUE(std::ranges::equal(back.ring->add_table(), e.ring->add_table())) << spec;
    EXPECT_TRUE(std::ranges::equal(back.ring->mul_table(), e.ring->mul_table())) << spec;
  }
}

TEST(RingFile, RoundTripTableForm) {
  const auto quotient = quotient_ring(Subring::zero(ring("ut2:2"))).ring;
  ASSERT_FALSE(quotient->basis());
  const CatalogEntry e{"q", quotient, Provenance::File, ""};
  const auto text = serialize_ring(e);
  EXPECT_NE(text.find("order 8"), std::string::npos);
  const auto back = parse_ring_file(text);
  EXPECT_TRUE(std::ranges::equal(back.ring->add_table(), quotient->add_table()));
  EXPECT_TRUE(std::ranges::equal(back.ring->mul_table(), quotient->mul_table()));
}

TEST(RingFile, ModuliFormZ6) {
  const auto e = parse_ring_file("ring z6\nmoduli 6\nmul 1 1 = 1\n");
  EXPECT_EQ(e.name, "z6");
  EXPECT_EQ(e.ring->order(), 6u);
  EXPECT_EQ(e.ring->mul(2, 5), 4u);
  EXPECT_EQ(e.provenance, Provenance::File);
}

TEST(RingFile, CommentsAndOmittedProducts) {
  const auto e = parse_ring_file("# nc4a\nring nc\nmoduli 2 2  # basis e1 e2\nmul 1 1 = 1 0\nmul 1 2 = 0 1\n");
  EXPECT_TRUE(std::ranges::equal(e.ring->mul_table(), ring("nc4a")->mul_table()));
}

TEST(RingFile, Errors) {
  EXPECT_ERROR(ParseError, parse_ring_file("ring x\nmoduli 2 2\nmul 1 3 = 1 0\n"));
  EXPECT_ERROR(ParseError, parse_ring_file("moduli 2\n"));
  EXPECT_ERROR(ParseError, parse_ring_file("ring x\norder 2\nadd:\n0 1\n1 0\nmul:\n0 0\n"));
  EXPECT_ERROR(ParseError, parse_ring_file("ring x\nmoduli 2\nmul 1 1 = 7\n"));
  try {
    parse_ring_file("ring x\nmoduli 2 2\nmul 1 3 = 1 0\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(RingFile, CorruptedTablesFailValidation) {
  EXPECT_ERROR(NotAssociative, load_ring_file(kData + "/corrupt_mul.ring"));
}

TEST(RingFile, LoadsDataFiles) {
  const auto nc = load_ring_file(kData + "/nc4a_tables.ring");
  EXPECT_TRUE(std::ranges::equal(nc.ring->mul_table(), ring("nc4a")->mul_table()));
  const auto z6 = load_ring_file(kData + "/z6.ring");
  EXPECT_EQ(z6.ring->order(), 6u);
}

TEST(RingFile, GoldenBuiltins) {
  for (auto [spec, file] : {std::pair{"nc4a", "nc4a"}, {"zn:6", "zn6"}, {"ut2:2", "ut2_2"}, {"m2:2", "m2_2"},
                            {"row2:3", "row2_3"}, {"nc4a*zn:2", "nc4a_x_zn2"}}) {
    const CatalogEntry e{spec, ring(spec), Provenance::Builtin, ""};
    EXPECT_EQ(serialize_ring(e), read_file(kData + "/golden/" + file + ".ring")) << spec;
  }
}
