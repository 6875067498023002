#include "doctest.h"
#include "uqv/dumpfmt.hpp"
#include "uqv/report.hpp"

using namespace uqv;

TEST_CASE("json round trip") {
  CheckReport rep = CheckReport::fail("hopf", "coassociativity", "E^1 1_0 F^(2)",
                                      {{"r", "5"}, {"slot", "1"}});
  CheckReport back = from_json_line(to_json_line(rep));
  CHECK(back.suite == rep.suite);
  CHECK(back.check == rep.check);
  CHECK(back.params == rep.params);
  CHECK(back.status == rep.status);
  CHECK(back.witness == rep.witness);

  CheckReport warn = CheckReport::warn("hkl-integrality", "determinant", "h-valuation 2");
  CHECK(from_json_line(to_json_line(warn)).status == CheckReport::Status::Warn);
}

TEST_CASE("report render is sorted and parses back") {
  std::vector<CheckReport> reps = {
      CheckReport::pass("zsuite", "b"),
      CheckReport::pass("asuite", "z", {{"r", "3"}}),
      CheckReport::pass("asuite", "a"),
  };
  std::string text = render_report(reps);
  std::vector<CheckReport> back = parse_report(text);
  REQUIRE(back.size() == 3);
  CHECK(back[0].suite == "asuite");
  CHECK(back[0].check == "a");
  CHECK(back[1].check == "z");
  CHECK(back[2].suite == "zsuite");
}

TEST_CASE("matrix dump round trip") {
  CycMatrix m(3, 2, 3);
  m.at(0, 0) = CycRat(CycInt(3, 2) + CycInt::zeta_pow(3, 1), mpz_class(3));
  m.at(0, 2) = CycRat::zeta_pow(3, 2);
  m.at(1, 1) = CycRat(3, -7);
  std::string text = render_matrix_dump(m, {{"r", "3"}, {"what", "unit-test"}});
  CycMatrix back = parse_matrix_dump(text);
  CHECK(back == m);
  CHECK(back.zr() == 3);
}
