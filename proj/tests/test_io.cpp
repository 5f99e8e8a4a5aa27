#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "polyrep/errors.hpp"
#include "polyrep/io.hpp"
#include "polyrep/verify.hpp"
#include "test_support.hpp"

using namespace polyrep;

namespace {

struct Where {
  std::size_t line, column;
  std::string message;
};

Where parse_failure(const std::string& text) {
  try {
    parse_hrep(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.message()};
  }
  return {0, 0, "no error"};
}

}  // namespace

TEST(HrepParse, CommentsBlankLinesAndRationals) {
  const auto h = parse_hrep("# a triangle\n\n2 3\n-1 0 0\n  0 -1 0\n# last row\n1/2 1/2 1/2\n");
  EXPECT_EQ(h.dim, 2u);
  ASSERT_EQ(h.rows.size(), 3u);
  EXPECT_EQ(h.rows[2].normal, (RatVec{Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(h.rows[2].rhs, Rat(1, 2));
  EXPECT_EQ(parse_hrep("1 1\n1 2").rows.size(), 1u);  // no trailing newline
  EXPECT_EQ(parse_hrep("1 1\r\n1 2\r\n").rows[0].rhs, 2);
}

TEST(HrepParse, ErrorsCarryLineAndColumn) {
  auto w = parse_failure("# c\n2 2\n1 0 1\n0 1/0 1\n");
  EXPECT_EQ(w.line, 4u);
  EXPECT_EQ(w.column, 3u);
  EXPECT_EQ(w.message, "zero denominator");

  w = parse_failure("2 2\n1 0 1\n0 1 1 7\n");
  EXPECT_EQ(w.line, 3u);
  EXPECT_EQ(w.column, 7u);
  EXPECT_EQ(w.message, "dimension mismatch: expected 3 entries, got 4");

  w = parse_failure("2 2\n1 0\n");
  EXPECT_EQ(w.line, 2u);
  EXPECT_EQ(w.message, "dimension mismatch: expected 3 entries, got 2");

  w = parse_failure("2 3 4\n");
  EXPECT_EQ(w.line, 1u);
  EXPECT_EQ(w.message, "header must be \"d m\"");

  w = parse_failure("2 1\n1 1 1\n1 1 1\n");
  EXPECT_EQ(w.line, 3u);
  EXPECT_EQ(w.message, "unexpected data after 1 rows");

  w = parse_failure("2 3\n1 1 1\n");
  EXPECT_EQ(w.message, "expected 3 rows, got 1");

  EXPECT_EQ(parse_failure("# nothing\n\n").message, "missing \"d m\" header");
  EXPECT_EQ(parse_failure("0 1\n").message, "dimension must be positive");
  EXPECT_EQ(parse_failure("x 1\n").message, "malformed dimension");
  EXPECT_EQ(parse_failure("1 1\n1 abc\n").column, 3u);
  EXPECT_EQ(parse_failure("1 1\n1 0.5\n").line, 2u);
}

TEST(HrepParse, ErrorTextIncludesPosition) {
  try {
    parse_hrep("1 1\n1 1/0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "line 2, column 3: zero denominator");
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
}

TEST(HrepParse, RoundTripsAndShippedData) {
  for (const auto& h : {fixtures::skew_dodecahedron(), fixtures::cube(4), fixtures::standard_simplex(3)}) {
    const auto back = parse_hrep(emit_hrep(h));
    EXPECT_EQ(back.dim, h.dim);
    ASSERT_EQ(back.rows.size(), h.rows.size());
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
      EXPECT_EQ(back.rows[i].normal, h.rows[i].normal);
      EXPECT_EQ(back.rows[i].rhs, h.rows[i].rhs);
    }
  }
  const auto shipped = fixtures::load_data("skew_dodecahedron.hrep");
  EXPECT_EQ(emit_hrep(shipped), emit_hrep(fixtures::skew_dodecahedron()));
  EXPECT_EQ(emit_hrep(fixtures::load_data("square.hrep")), emit_hrep(fixtures::square()));
  EXPECT_EQ(emit_hrep(fixtures::load_data("cube3.hrep")), emit_hrep(fixtures::cube(3)));
}

TEST(Files, MissingFileIsAUsageError) {
  try {
    read_file("/nonexistent/polyrep/file.hrep");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::usage);
  }
  const auto path = (std::filesystem::temp_directory_path() / "polyrep_io_test.txt").string();
  write_file(path, "2 0\n");
  EXPECT_EQ(read_file(path), "2 0\n");
  std::remove(path.c_str());
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_THROW(parse_format("yaml"), Error);
}

TEST(PrepJson, RoundTrip) {
  for (const auto& h : {fixtures::skew_dodecahedron(), fixtures::square(), fixtures::standard_simplex(3)}) {
    const auto prep = construct_prep(h);
    const auto doc = prep_to_json(prep);
    EXPECT_EQ(doc["format"], "polyrep-prep");
    EXPECT_EQ(doc["convention"], kConvention);
    EXPECT_EQ(prep_from_json(doc), prep);
    EXPECT_EQ(parse_prep_json(doc.dump()), prep);
  }
}

TEST(PrepJson, SchemaViolations) {
  const auto doc = prep_to_json(construct_prep(fixtures::square()));
  auto bad = doc;
  bad["convention"] = "products<=0";
  EXPECT_THROW(prep_from_json(bad), ParseError);
  bad = doc;
  bad.erase("products");
  EXPECT_THROW(prep_from_json(bad), ParseError);
  bad = doc;
  bad["epsilon"]["two_p"] = "ten";
  EXPECT_THROW(prep_from_json(bad), ParseError);
  bad = doc;
  bad["products"][0]["factors"][0]["coeffs"][0] = "1/0";
  EXPECT_THROW(prep_from_json(bad), ParseError);
  try {
    parse_prep_json("{\"format\": ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
}

TEST(PrepText, FactoredListing) {
  const auto text = emit_prep_text(construct_prep(fixtures::square()));
  EXPECT_NE(text.find("# P-representation in dimension 2: 3 polynomials, products>=0;epsilon<=1"), std::string::npos);
  EXPECT_NE(text.find("p_1(x) = (1-x1)(1+x1)(1-x2)(1+x2)\n"), std::string::npos);
  EXPECT_NE(text.find("p_0(x) = (2-x1-x2)(2-x1+x2)(2+x1-x2)(2+x1+x2)\n"), std::string::npos);
  EXPECT_NE(text.find("p_eps(x) = 1/4*[(2x1)/2]^10 + "), std::string::npos);

  const auto big = emit_prep_text(construct_prep(fixtures::skew_dodecahedron()));
  EXPECT_NE(big.find("p_2(x) = (5-3x2-2x3)"), std::string::npos);
  EXPECT_NE(big.find("p_{0,(1,1,2)}(x) = "), std::string::npos);
  EXPECT_NE(big.find("p_eps(x) = 1/12*[(1+6x2+4x3)/11]^676 + "), std::string::npos);
  EXPECT_EQ(std::count(big.begin(), big.end(), '\n'), 8);
}

TEST(PolysJson, RoundTrip) {
  const std::vector<SparsePoly> polys{SparsePoly::constant(2, Rat(1)) - SparsePoly::variable(2, 0).pow(2),
                                      SparsePoly::variable(2, 1) * Rat(3, 7)};
  const std::vector<std::string> ids{"a", "b"};
  std::vector<std::string> back_ids;
  EXPECT_EQ(polys_from_json(polys_to_json(polys, ids), &back_ids), polys);
  EXPECT_EQ(back_ids, ids);
  EXPECT_EQ(emit_polys_text(polys, ids), "a(x) = 1 - x1^2\nb(x) = 3/7*x2\n");
}
