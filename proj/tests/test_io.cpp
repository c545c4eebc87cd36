#include <catch2/catch_amalgamated.hpp>

#include "lagcob/io.hpp"
#include "lagcob/isotopy.hpp"
#include "lagcob/shapes.hpp"
#include "lagcob/svg.hpp"

using namespace lagcob;

TEST_CASE("diagram round trip") {
  for (const DiagramSpec& s :
       {shapes::circle(Area(1)), shapes::u1(Area(2), Area(1)),
        shapes::u1(Area(Rational(3, 2), Rational(1, 4)), Area(1), true), shapes::u0(),
        shapes::overlap(Area(2), Area(1), Area(2)),
        shapes::curled_circle(Area(5), {Area(1), Area(2)})}) {
    Diagram d = Diagram::build(s);
    std::string text = print_diagram(d);
    Diagram back = parse_diagram(text);
    CHECK(is_isotopic(d, back).has_value());
    // parse . print is the identity on canonical form
    CHECK(print_diagram(back) == text);
    for (int c = 0; c < d.num_components(); ++c)
      CHECK(signed_area(d, c) == signed_area(back, c));
  }
}

TEST_CASE("area token forms") {
  std::string text =
      "lagdiag 1\n"
      "loop a0\n"
      "place right(a0) in outer\n"
      "area left(a0) 3/2+1/4eps\n";
  Diagram d = parse_diagram(text);
  CHECK(d.face_area(d.resolve(FaceRef::L("a0"))) == Area(Rational(3, 2), Rational(1, 4)));
  CHECK(print_diagram(d) == text);

  CHECK_THROWS_MATCHES(parse_diagram("lagdiag 2\n"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == Errc::ParseError; }));
  CHECK_THROWS_AS(parse_diagram("lagdiag 1\nloop\n"), Error);
  CHECK_THROWS_AS(parse_diagram("lagdiag 1\nnonsense x\n"), Error);
  CHECK_THROWS_AS(parse_diagram("lagdiag 1\nloop a\nplace left(b) in outer\narea left(a) 1\n"),
                  Error);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_diagram("lagdiag 1\n# fine\narea left(a) oops\n");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("svg rendering is deterministic and complete") {
  for (const DiagramSpec& s : {shapes::u0(), shapes::overlap(Area(2), Area(1), Area(2))}) {
    Diagram d = Diagram::build(s);
    std::string a = render_svg(d);
    std::string b = render_svg(Diagram::build(s));
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    // one path per arc plus direction ticks, one label per bounded face
    size_t labels = 0;
    for (size_t pos = a.find("<text"); pos != std::string::npos; pos = a.find("<text", pos + 1))
      labels++;
    CHECK((int)labels == d.num_faces() - 1);
  }

  // nested placement renders: child circle inside host face
  DiagramSpec nested = shapes::circle(Area(4), true, "a");
  nested.loops.push_back({"b"});
  nested.places.push_back({FaceRef::R("b"), FaceRef::L("a")});
  nested.areas.push_back({FaceRef::L("b"), Area(1)});
  std::string svg = render_svg(Diagram::build(nested));
  CHECK(svg.find("<svg") == 0);
}
