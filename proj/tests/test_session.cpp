#include <doctest.h>

#include <string>

#include "support.hpp"
#include "wound/errors.hpp"
#include "wound/session.hpp"

using namespace wound;
using namespace wound::test;

namespace {

std::string data(const char* name) { return std::string(WOUND_TEST_DATA) + "/" + name; }

void check_error(const std::string& text, const std::string& fragment) {
  CAPTURE(text);
  try {
    parse_session(text);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("polynomial grammar") {
  const auto k = k3(1);
  const auto XY = names({"X", "Y"});
  CHECK(poly(k, "X^(p^2)", XY) == poly(k, "X^9", XY));
  CHECK(poly(k, "(X + Y)^3", XY) == poly(k, "X^3 + Y^3", XY));
  CHECK(el(k, "a^(1/p^1)").pow(3) == el(k, "a"));
  CHECK(el(k, "a^(-1/p^1)") * el(k, "a^(1/p^1)") == el(k, "1"));
  CHECK(el(k, "a^-2") == el(k, "1/a^2"));
  CHECK(el(k, "a^(-2)") == el(k, "1/a^2"));
  CHECK(el(k, "7") == el(k, "1"));
  CHECK(el(k, "-(a - 1)") == el(k, "1 - a"));
  CHECK(el(Field::make({3, 2, "a", 0}), "z^8") == el(Field::make({3, 2, "a", 0}), "1"));
  CHECK_THROWS_AS(el(k3(), "a^(1/p^1)"), InputError);
  CHECK_THROWS_AS(poly(k, "X/Y", XY), InputError);
  CHECK_THROWS_AS(poly(k, "X^-1", XY), InputError);
  CHECK_THROWS_AS(poly(k, "W", XY), InputError);
  CHECK_THROWS_AS(poly(k, "X +", XY), InputError);
  CHECK_THROWS_AS(poly(k, "X $ Y", XY), InputError);
  CHECK_THROWS_AS(poly(k, "(X", XY), InputError);
  CHECK_THROWS_AS(pp(k, "X*Y", XY), InputError);
  CHECK(is_identifier("x''"));
  CHECK_FALSE(is_identifier("1x"));
  CHECK_FALSE(is_identifier("x'y"));
}

TEST_CASE("sessions round-trip") {
  for (const char* f : {"groups_p3.txt", "hom_v_u.txt", "w_a_split.txt", "gabber_p3.txt", "b2_p2.txt", "lines_f3.txt"}) {
    CAPTURE(f);
    const auto s = load_session(data(f));
    const auto text = s.to_string();
    const auto again = parse_session(text);
    CHECK(again.to_string() == text);
    CHECK(again.groups.size() == s.groups.size());
    CHECK(again.maps.size() == s.maps.size());
    CHECK(again.extensions.size() == s.extensions.size());
  }
}

TEST_CASE("session contents") {
  const auto s = load_session(data("hom_v_u.txt"));
  CHECK(s.field->header() == "field p=3 e=1 gen=a depth=0");
  CHECK(s.params.names == names({"d", "e"}));
  CHECK(s.params.relations.size() == 1);
  CHECK(verify_hom(s.map("phi_b"), s.params));
  CHECK_FALSE(verify_hom(s.map("wrong"), s.params));
  CHECK(s.endpoint("Ga").is_line());
  CHECK_THROWS_AS(s.group("nope"), InputError);
  CHECK_THROWS_AS(s.map("nope"), InputError);
  const auto d = parse_session("group L vars=X,Y : Y");
  CHECK(d.field->header() == "field p=3 e=1 gen=a depth=0");
  CHECK(d.group("L").pivot == 1);
}

TEST_CASE("session errors carry line numbers") {
  check_error("group G vars=X : X\ngroup G vars=X : X^3", "line 2: duplicate name G");
  check_error("group Ga vars=X : X", "reserved");
  check_error("group G vars=X : X\nfield p=3", "line 2: field must be the first statement");
  check_error("field p=4", "line 1: field:");
  check_error("frobnicate", "line 1: unknown statement 'frobnicate'");
  check_error("group G vars=X,Y : X*Y", "line 1:");
  check_error("group G vars=X pivot=Y : X", "line 1:");
  check_error("group G vars=X : X\nmap m from=G to=H : X -> X", "line 2:");
  check_error("group G vars=X : X\nmap m from=G to=Ga : T -> X ; T -> X", "given twice");
  check_error("relation pivot=d : d", "declare params first");
  check_error("field p=3 depth=9", "depth above 8");
  CHECK_THROWS_AS(load_session("/nonexistent/file.txt"), InputError);
}
