#include <catch2/catch_amalgamated.hpp>

#include "lagcob/diagram.hpp"
#include "lagcob/shapes.hpp"
#include "oracle.hpp"

using namespace lagcob;

namespace {
int face_by_ref(const Diagram& d, const FaceRef& r) { return d.resolve(r); }
}  // namespace

TEST_CASE("crossingless circle") {
  Diagram d = Diagram::build(shapes::circle(Area(1)));
  CHECK(d.num_crossings() == 0);
  CHECK(d.num_edges() == 1);
  CHECK(d.num_faces() == 2);
  CHECK(d.num_components() == 1);

  int inside = face_by_ref(d, FaceRef::L("l"));
  CHECK(d.face_bounded(inside));
  CHECK(d.winding(inside, 0) == 1);
  CHECK(d.winding(d.outer_face(), 0) == 0);
  CHECK(signed_area(d, 0) == Area(1));
  CHECK(lagrangian_tb(d, 0) == 0);
  CHECK(lagrangian_rot(d, 0) == 1);

  // Oracle: a ccw unit circle has shoelace area pi and turning number +1.
  auto c = oracle::sample([](double t) { return oracle::P{std::cos(t), std::sin(t)}; }, 512);
  CHECK(oracle::shoelace(c) == Catch::Approx(M_PI).epsilon(1e-3));
  CHECK(oracle::turning_number(c) == Catch::Approx(1.0));
  CHECK(oracle::winding(c, {0, 0}) == Catch::Approx(1.0));

  Diagram cw = Diagram::build(shapes::circle(Area(1), /*ccw=*/false));
  CHECK(cw.winding(face_by_ref(cw, FaceRef::R("l")), 0) == -1);
  CHECK(signed_area(cw, 0) == Area(-1));
  CHECK(lagrangian_rot(cw, 0) == -1);
}

TEST_CASE("figure-eight U1 pattern") {
  Diagram d = Diagram::build(shapes::u1(Area(2), Area(1)));
  CHECK(d.num_crossings() == 1);
  CHECK(d.num_edges() == 2);
  CHECK(d.num_faces() == 3);  // two lobes + outer
  CHECK(d.num_components() == 1);

  int right = face_by_ref(d, FaceRef::L("R"));
  int left = face_by_ref(d, FaceRef::R("L"));
  CHECK(right != left);
  CHECK(d.winding(right, 0) == 1);
  CHECK(d.winding(left, 0) == -1);
  CHECK(signed_area(d, 0) == Area(1));  // 2 - 1
  CHECK(lagrangian_rot(d, 0) == 0);
  CHECK(lagrangian_tb(d, 0) == 1);  // cap chirality is the positive crossing

  Diagram m = Diagram::build(shapes::u1(Area(2), Area(1), /*mirror=*/true));
  CHECK(lagrangian_tb(m, 0) == -1);  // projection of the standard Legendrian unknot

  // Oracle: the Lissajous realization (cos t, sin 2t) of the cap pattern.
  auto c = oracle::sample([](double t) { return oracle::P{std::cos(t), std::sin(2 * t)}; }, 1024);
  CHECK(oracle::turning_number(c) == Catch::Approx(0.0).margin(1e-9));
  CHECK(oracle::winding(c, {0.6, 0.0}) == Catch::Approx(1.0));    // right lobe
  CHECK(oracle::winding(c, {-0.6, 0.0}) == Catch::Approx(-1.0));  // left lobe
  CHECK(oracle::shoelace(c) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("curled circle windings and whitney index") {
  // One ccw curl inside a ccw circle: lobe winding 2, turning number 2.
  Diagram d = Diagram::build(shapes::curled_circle(Area(5), {Area(1)}));
  int big = face_by_ref(d, FaceRef::L("s0"));
  int lobe = face_by_ref(d, FaceRef::L("k0"));
  CHECK(d.num_faces() == 3);
  CHECK(d.winding(big, 0) == 1);
  CHECK(d.winding(lobe, 0) == 2);
  CHECK(lagrangian_rot(d, 0) == 2);
  CHECK(signed_area(d, 0) == Area(7));  // 5 + 2*1

  // Oracle: the limacon r = 1 + 2 cos t has one inner loop, winding 2 inside
  // the loop, 1 in the outer lobe, turning number 2.
  auto lim = oracle::sample(
      [](double t) {
        double r = 1 + 2 * std::cos(t);
        return oracle::P{r * std::cos(t), r * std::sin(t)};
      },
      2048);
  CHECK(oracle::turning_number(lim) == Catch::Approx(2.0));
  CHECK(oracle::winding(lim, {0.5, 0.0}) == Catch::Approx(2.0));
  CHECK(oracle::winding(lim, {2.5, 0.0}) == Catch::Approx(1.0));

  // Two curls: writhe adds locally.
  Diagram d2 = Diagram::build(shapes::curled_circle(Area(5), {Area(1), Area(1)}));
  CHECK(d2.num_faces() == 4);
  CHECK(lagrangian_rot(d2, 0) == 3);
  int w = lagrangian_tb(d2, 0);
  CHECK((w == 2 || w == -2));
  CHECK(lagrangian_tb(Diagram::build(shapes::curled_circle(Area(5), {Area(1)})), 0) * 2 == w);

  auto lim2 = oracle::sample(
      [](double t) {
        double r = 1 + 2 * std::cos(2 * t);
        return oracle::P{r * std::cos(t), r * std::sin(t)};
      },
      4096);
  CHECK(oracle::turning_number(lim2) == Catch::Approx(3.0));
}

TEST_CASE("nested and side-by-side circles") {
  DiagramSpec nested = shapes::circle(Area(4), true, "a");
  nested.loops.push_back({"b"});
  nested.places.push_back({FaceRef::R("b"), FaceRef::L("a")});
  nested.areas.push_back({FaceRef::L("b"), Area(1)});
  Diagram dn = Diagram::build(nested);
  CHECK(dn.num_faces() == 3);
  int annulus = face_by_ref(dn, FaceRef::L("a"));
  int inner = face_by_ref(dn, FaceRef::L("b"));
  int ca = dn.component_of_edge(*dn.edge_by_name("a"));
  int cb = dn.component_of_edge(*dn.edge_by_name("b"));
  CHECK(dn.winding(inner, ca) == 1);
  CHECK(dn.winding(inner, cb) == 1);
  CHECK(dn.winding(annulus, ca) == 1);
  CHECK(dn.winding(annulus, cb) == 0);
  CHECK(dn.face_euler(annulus) == 0);  // an annular region
  CHECK(dn.face_euler(inner) == 1);
  CHECK_FALSE(vertically_split(dn, ca, cb));
  CHECK(lagrangian_rot(dn, ca) == 1);
  CHECK(lagrangian_rot(dn, cb) == 1);

  DiagramSpec side = shapes::circle(Area(4), true, "a");
  side.loops.push_back({"b"});
  side.places.push_back({FaceRef::R("b"), FaceRef::Outer()});
  side.areas.push_back({FaceRef::L("b"), Area(1)});
  Diagram ds = Diagram::build(side);
  CHECK(vertically_split(ds, 0, 1));
  CHECK(ds.face_euler(ds.outer_face()) == -1);  // plane minus two disks
  CHECK(signed_area(ds, 0) + signed_area(ds, 1) == Area(5));
}

TEST_CASE("two components sharing crossings") {
  Diagram d = Diagram::build(shapes::overlap(Area(2), Area(1), Area(2)));
  REQUIRE(d.num_components() == 2);
  CHECK(d.num_faces() == 4);
  CHECK_FALSE(vertically_split(d, 0, 1));
  int ca = d.component_of_edge(*d.edge_by_name("aL"));
  int cb = d.component_of_edge(*d.edge_by_name("bL"));
  int lens = face_by_ref(d, FaceRef::L("bL"));
  int lmoon = face_by_ref(d, FaceRef::L("aL"));
  int rmoon = face_by_ref(d, FaceRef::R("aR"));
  CHECK(d.winding(lens, ca) == 1);
  CHECK(d.winding(lens, cb) == 1);
  CHECK(d.winding(lmoon, ca) == 1);
  CHECK(d.winding(lmoon, cb) == 0);
  CHECK(d.winding(rmoon, ca) == 0);
  CHECK(d.winding(rmoon, cb) == 1);
  CHECK(lagrangian_rot(d, ca) == 1);
  CHECK(lagrangian_rot(d, cb) == 1);
  CHECK(lagrangian_tb(d, ca) == 0);  // no self-crossings
  CHECK(signed_area(d, ca) == Area(3));
  CHECK(signed_area(d, cb) == Area(3));
}

TEST_CASE("reversing orientation negates signed area") {
  // The mirror-free way to reverse a loop: swap which side faces out.
  Diagram ccw = Diagram::build(shapes::circle(Area(3)));
  Diagram cw = Diagram::build(shapes::circle(Area(3), false));
  CHECK(signed_area(ccw, 0) == -signed_area(cw, 0));
}

TEST_CASE("delta set") {
  auto areas_of = [](std::vector<Area> v) {
    DiagramSpec s = shapes::curled_circle(v[0], {v.begin() + 1, v.end()});
    return delta_set(Diagram::build(s));
  };
  CHECK(areas_of({Area(1), Area(3)}) == std::set<Area>{Area(1), Area(2), Area(3)});
  CHECK(areas_of({Area(2), Area(2)}) == std::set<Area>{Area(2)});
  CHECK(areas_of({Area(1), Area(2), Area(4)}) ==
        std::set<Area>{Area(1), Area(2), Area(3), Area(4)});
  // Delta contains only strictly positive values.
  for (const Area& a : areas_of({Area(5), Area(5), Area(2)})) CHECK(a.is_positive());
}

TEST_CASE("build errors") {
  SECTION("non-planar rotation system") {
    DiagramSpec s;
    CrossingSpec c;
    c.id = "c";
    c.over_parity = 0;
    c.slots = {ArcEnd{"a", true}, ArcEnd{"b", true}, ArcEnd{"a", false}, ArcEnd{"b", false}};
    s.crossings.push_back(c);
    s.places.push_back({FaceRef::L("a"), FaceRef::Outer()});
    s.areas.push_back({FaceRef::R("a"), Area(1)});
    CHECK_THROWS_MATCHES(Diagram::build(s), Error, Catch::Matchers::Predicate<Error>([](
        const Error& e) { return e.code() == Errc::NonPlanar; }));
  }
  SECTION("strand direction mismatch") {
    DiagramSpec s;
    CrossingSpec c;
    c.id = "c";
    c.slots = {ArcEnd{"a", true}, ArcEnd{"b", true}, ArcEnd{"b", false}, ArcEnd{"a", false}};
    // pair {0,2} = a+,b-: fine; but make both of one pair tails:
    c.slots = {ArcEnd{"a", true}, ArcEnd{"b", true}, ArcEnd{"b", false}, ArcEnd{"a", false}};
    std::swap(c.slots[1], c.slots[2]);  // now {1,3} = {b-, a-}: two heads
    s.crossings.push_back(c);
    CHECK_THROWS_AS(Diagram::build(s), Error);
  }
  SECTION("area count mismatch") {
    DiagramSpec s = shapes::curled_circle(Area(5), {Area(1), Area(1)});  // 3 bounded faces
    s.areas.push_back({FaceRef::L("k0"), Area(2)});
    s.areas.push_back({FaceRef::L("k1"), Area(2)});  // 5 areas claimed
    CHECK_THROWS_MATCHES(Diagram::build(s), Error, Catch::Matchers::Predicate<Error>([](
        const Error& e) { return e.code() == Errc::AreaCountMismatch; }));
    DiagramSpec s2 = shapes::curled_circle(Area(5), {Area(1), Area(1)});
    s2.areas.pop_back();
    CHECK_THROWS_MATCHES(Diagram::build(s2), Error, Catch::Matchers::Predicate<Error>([](
        const Error& e) { return e.code() == Errc::AreaCountMismatch; }));
  }
  SECTION("non-positive area") {
    DiagramSpec s = shapes::circle(Area(0));
    CHECK_THROWS_MATCHES(Diagram::build(s), Error, Catch::Matchers::Predicate<Error>([](
        const Error& e) { return e.code() == Errc::NonPositiveArea; }));
    CHECK_THROWS_AS(Diagram::build(shapes::circle(Area(-2))), Error);
    CHECK_NOTHROW(Diagram::build(shapes::circle(Area::infinitesimal(Rational(1)))));
  }
  SECTION("unknown component") {
    Diagram d = Diagram::build(shapes::circle(Area(1)));
    CHECK_THROWS_MATCHES(signed_area(d, 3), Error, Catch::Matchers::Predicate<Error>([](
        const Error& e) { return e.code() == Errc::UnknownComponent; }));
  }
}

TEST_CASE("winding is path independent") {
  // Recompute windings by brute force over every face: winding of a face f
  // w.r.t. component c must equal, for every arc on f's boundary, the value
  // across the arc shifted by the crossing rule.
  for (const DiagramSpec& s :
       {shapes::u1(Area(2), Area(1)), shapes::curled_circle(Area(5), {Area(1), Area(2)}),
        shapes::overlap(Area(2), Area(1), Area(2))}) {
    Diagram d = Diagram::build(s);
    for (int e = 0; e < d.num_edges(); ++e) {
      int c = d.component_of_edge(e);
      for (int k = 0; k < d.num_components(); ++k) {
        int lhs = d.winding(d.left_face(e), k);
        int rhs = d.winding(d.right_face(e), k);
        CHECK(lhs - rhs == (k == c ? 1 : 0));
      }
    }
  }
}
