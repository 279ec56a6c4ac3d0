#include <doctest.h>

#include <string>

#include "opran/cardinal.hpp"
#include "opran/errors.hpp"
#include "opran/matrix.hpp"
#include "opran/range_ops.hpp"
#include "opran/range_rep.hpp"
#include "opran/rng.hpp"
#include "opran/seqspace.hpp"
#include "opran/serialize.hpp"

using opran::Cardinal;
using opran::DimSeq;
using opran::Json;
using opran::RangeRep;

TEST_CASE("cardinal round trip") {
  for (auto c : {Cardinal::finite(0), Cardinal::finite(42), Cardinal::aleph(0),
                 Cardinal::aleph(2)}) {
    CHECK(opran::cardinal_from_json(opran::cardinal_to_json(c), "c") == c);
  }
  CHECK(opran::cardinal_to_json(Cardinal::finite(3)) == Json{{"fin", 3}});
  CHECK(opran::cardinal_to_json(Cardinal::aleph(1)) == Json{{"aleph", 1}});
  CHECK_THROWS_AS((void)opran::cardinal_from_json(Json{{"other", 1}}, "c"),
                  opran::ParseError);
  CHECK_THROWS_AS((void)opran::cardinal_from_json(Json{{"fin", -2}}, "c"), opran::ParseError);
}

TEST_CASE("dimension sequence round trip recanonicalizes") {
  DimSeq s({Cardinal::finite(2), Cardinal::aleph(0)}, Cardinal::finite(1));
  DimSeq back = opran::dimseq_from_json(opran::dimseq_to_json(s), "s");
  CHECK(back.prefix_length() == s.prefix_length());
  CHECK(back.at(1) == s.at(1));
  CHECK(back.at(2) == s.at(2));
  CHECK(back.tail() == s.tail());

  Json padded{{"prefix", Json::array({Json{{"fin", 1}}, Json{{"fin", 1}}})},
              {"tail", Json{{"fin", 1}}}};
  CHECK(opran::dimseq_from_json(padded, "s").prefix_length() == 0);
  CHECK_THROWS_AS((void)opran::dimseq_from_json(Json{{"prefix", Json::array()}}, "s"),
                  opran::ParseError);
}

TEST_CASE("range rep round trip") {
  RangeRep rep(Cardinal::aleph(0), DimSeq({Cardinal::finite(3)}, Cardinal::aleph(1)));
  RangeRep back = opran::range_rep_from_json(opran::range_rep_to_json(rep), "rep");
  CHECK(unitarily_equiv_sufficient(rep, back));
  CHECK_THROWS_AS((void)opran::range_rep_from_json(Json{{"perp", Json{{"fin", 0}}}}, "rep"),
                  opran::ParseError);
}

TEST_CASE("sequence vector round trip keeps exact entries") {
  opran::SeqVector x({{opran::Rational(1, 3), opran::Rational(-2, 7)}},
                     opran::Rational(5, 4) / opran::Rational(2), opran::Rational(1, 3));
  opran::SeqVector back = opran::seqvector_from_json(opran::seqvector_to_json(x), "x");
  CHECK(back.head() == x.head());
  CHECK(back.has_tail());
  CHECK(back.tail_amplitude() == x.tail_amplitude());
  CHECK(back.tail_ratio() == x.tail_ratio());

  opran::SeqVector no_tail({{opran::Rational(2), opran::Rational(0)}});
  CHECK_FALSE(
      opran::seqvector_from_json(opran::seqvector_to_json(no_tail), "x").has_tail());

  CHECK_THROWS_AS((void)opran::seqvector_from_json(
                      Json{{"head", Json::array()}, {"tail", Json{{"a", Json::array({1, 1})},
                                                                  {"r", Json::array({3, 2})}}}},
                      "x"),
                  opran::ParseError);  // ratio outside [0,1)
  CHECK_THROWS_AS((void)opran::seqvector_from_json(
                      Json{{"head", Json::array({Json::array({1, 0, 0, 1})})}, {"tail", nullptr}},
                      "x"),
                  opran::ParseError);  // zero denominator
}

TEST_CASE("matrix round trip") {
  opran::Rng rng(33);
  opran::ComplexMatrix m = rng.gaussian_matrix(3, 5);
  opran::ComplexMatrix back = opran::matrix_from_json(opran::matrix_to_json(m), "m");
  CHECK(back == m);

  CHECK_THROWS_AS(
      (void)opran::matrix_from_json(
          Json{{"rows", 2}, {"cols", 2}, {"data", Json::array({Json::array({1, 0})})}}, "m"),
      opran::ParseError);  // wrong entry count
  CHECK_THROWS_AS((void)opran::matrix_from_json(Json{{"rows", 1}, {"cols", 1}}, "m"),
                  opran::ParseError);
}

TEST_CASE("numeric shell report serializes dimensions and frames") {
  opran::ComplexMatrix t(3, 3);
  t(0, 0) = 1.0;
  t(1, 1) = 0.25;
  opran::NumericRangeRep rep = opran::range_shells(t, 1e-12);
  Json j = opran::numeric_range_rep_to_json(rep);
  CHECK(j.at("shell_dims").get<std::vector<std::size_t>>() == rep.shell_dims());
  CHECK(j.at("kernel_dim").get<std::size_t>() == 1);
  CHECK(j.at("scale_shift").get<int>() == rep.scale_shift);
  CHECK(j.at("shells").is_array());
}

TEST_CASE("rational formatting") {
  CHECK(opran::rational_to_string(opran::Rational(1, 3)) == "1/3");
  CHECK(opran::rational_to_string(opran::Rational(4, 2)) == "2");
  CHECK(opran::rational_to_string(opran::Rational(0)) == "0");
  CHECK(opran::rational_to_string(opran::Rational(-5, 10)) == "-1/2");
}

TEST_CASE("file loading failures are input errors") {
  CHECK_THROWS_AS((void)opran::load_json_file("/nonexistent/path.json"), opran::ParseError);
}
