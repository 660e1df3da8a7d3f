#include "doctest.h"

#include <cmath>
#include <sstream>

#include "hyperbar/filtration.hpp"

using namespace hyperbar;

TEST_CASE("grade ordering and rendering") {
  Grade zero = Grade::at(0.0), one = Grade::at(1.0), top = Grade::inf();
  CHECK(zero < one);
  CHECK(one < top);
  CHECK(!(top < top));
  CHECK(top == Grade::inf());
  CHECK(zero.render() == "0");
  CHECK(top.render() == "inf");
  CHECK(Grade::at(std::log(2.0)).render() == "0.693147181");
  CHECK(Grade::at(std::log(4.0) - std::log(3.0)).render() == "0.287682072");
  CHECK(Grade::parse("inf") == Grade::inf());
  CHECK(Grade::parse("0.5") == Grade::at(0.5));
  CHECK_THROWS(Grade::parse("-1"));
  CHECK_THROWS(Grade::parse("abc"));
}

TEST_CASE("filtration defaults: singletons at zero, absent edges at infinity") {
  Filtration f({"A", "B", "C"});
  CHECK(f.grade(Hyperedge{0}) == Grade::at(0.0));
  CHECK(f.grade(Hyperedge{0, 1}) == Grade::inf());
  f.set_grade({0, 1}, Grade::at(2.0));
  CHECK(f.grade(Hyperedge{0, 1}) == Grade::at(2.0));
  f.set_grade({2}, Grade::at(1.5));
  CHECK(f.grade(Hyperedge{2}) == Grade::at(1.5));
}

TEST_CASE("critical grades are the distinct finite grades") {
  Filtration f({"A", "B", "C"});
  f.set_grade({0, 1}, Grade::at(2.0));
  f.set_grade({0, 2}, Grade::at(2.0));
  f.set_grade({1, 2}, Grade::at(5.0));
  f.set_grade({0, 1, 2}, Grade::inf());
  auto grades = f.critical_grades();
  REQUIRE(grades.size() == 3);
  CHECK(grades[0] == Grade::at(0.0));
  CHECK(grades[1] == Grade::at(2.0));
  CHECK(grades[2] == Grade::at(5.0));
}

TEST_CASE("simplicial flag") {
  Filtration f({"A", "B", "C"});
  f.set_grade({0, 1}, Grade::at(1.0));
  CHECK(f.is_simplicial());
  f.set_grade({0, 1, 2}, Grade::at(2.0));
  CHECK(!f.is_simplicial());  // AC, BC never arrive
  f.set_grade({0, 2}, Grade::at(2.0));
  f.set_grade({1, 2}, Grade::at(1.0));
  CHECK(f.is_simplicial());
  f.set_grade({1, 2}, Grade::at(3.0));
  CHECK(!f.is_simplicial());  // face after coface
}

TEST_CASE("filtration file round-trip") {
  Filtration f({"A", "B", "C"});
  f.set_grade({0, 1}, Grade::at(std::log(2.0)));
  f.set_grade({0, 1, 2}, Grade::at(1.5));
  std::ostringstream out;
  f.write(out);
  CHECK(out.str() ==
        "hyperedge,grade\n"
        "A,0\n"
        "B,0\n"
        "C,0\n"
        "A|B,0.693147181\n"
        "A|B|C,1.5\n");

  std::istringstream in(out.str());
  Filtration back = Filtration::read(in);
  CHECK(back.roster() == f.roster());
  CHECK(back.grade(Hyperedge{0, 1}).render() == "0.693147181");
  CHECK(back.grade(Hyperedge{1, 2}) == Grade::inf());

  // Writing the parsed filtration reproduces the bytes.
  std::ostringstream again;
  back.write(again);
  CHECK(again.str() == out.str());
}

TEST_CASE("filtration file errors carry line numbers") {
  std::istringstream bad_header("edge,grade\n");
  CHECK_THROWS_AS(Filtration::read(bad_header), ParseError);

  std::istringstream bad_grade("hyperedge,grade\nA|B,nope\n");
  try {
    Filtration::read(bad_grade);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream dup("hyperedge,grade\nA|A,1\n");
  CHECK_THROWS_AS(Filtration::read(dup), ParseError);
}
