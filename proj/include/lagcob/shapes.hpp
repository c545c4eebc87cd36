#pragma once

#include <string>

#include "lagcob/diagram.hpp"

namespace lagcob::shapes {

// Crossingless circle. ccw: winding of the inside is +1.
inline DiagramSpec circle(const Area& inside, bool ccw = true, const std::string& name = "l") {
  DiagramSpec s;
  s.loops.push_back({name});
  FaceRef in = ccw ? FaceRef::L(name) : FaceRef::R(name);
  FaceRef out = ccw ? FaceRef::R(name) : FaceRef::L(name);
  s.places.push_back({out, FaceRef::Outer()});
  s.areas.push_back({in, inside});
  return s;
}

// The one-crossing figure-eight pattern of U1: right lobe R traversed ccw
// (winding +1), left lobe L clockwise (winding -1). With mirror=false the
// crossing has the cap chirality (sign +1); mirror=true gives the Lagrangian
// projection of the standard Legendrian unknot (sign -1), the fillable one.
inline DiagramSpec u1(const Area& right_lobe, const Area& left_lobe, bool mirror = false,
                      const std::string& prefix = "") {
  std::string R = prefix + "R", L = prefix + "L";
  DiagramSpec s;
  CrossingSpec c;
  c.id = prefix + "x";
  c.over_parity = mirror ? 1 : 0;
  c.slots = {ArcEnd{R, false}, ArcEnd{L, false}, ArcEnd{L, true}, ArcEnd{R, true}};
  s.crossings.push_back(c);
  s.places.push_back({FaceRef::R(R), FaceRef::Outer()});
  s.areas.push_back({FaceRef::L(R), right_lobe});
  s.areas.push_back({FaceRef::R(L), left_lobe});
  return s;
}

// Circle with n small curls hanging inside (each a ccw loop, winding +2).
// Arc names: s0..s(n-1) circle arcs, k0..k(n-1) curl loops; crossing ci joins
// arrival si with curl ki and departure s(i+1 mod n).
inline DiagramSpec curled_circle(const Area& big, const std::vector<Area>& lobes,
                                 int over_parity = 0) {
  int n = (int)lobes.size();
  DiagramSpec s;
  for (int i = 0; i < n; ++i) {
    std::string si = "s" + std::to_string(i), ki = "k" + std::to_string(i);
    std::string snext = "s" + std::to_string((i + 1) % n);
    CrossingSpec c;
    c.id = "c" + std::to_string(i);
    c.over_parity = over_parity;
    c.slots = {ArcEnd{snext, true}, ArcEnd{ki, true}, ArcEnd{ki, false}, ArcEnd{si, false}};
    s.crossings.push_back(c);
    s.areas.push_back({FaceRef::L(ki), lobes[i]});
  }
  s.places.push_back({FaceRef::R("s0"), FaceRef::Outer()});
  s.areas.push_back({FaceRef::L("s0"), big});
  return s;
}

// The Lagrangian projection of U0 (the twice-stabilized unknot, tb = -3,
// rot = 0): a figure-eight with standard-unknot chirality plus one outward
// kink on each lobe arc. All three crossings have sign -1; per-face windings
// are R-lobe +1, L-lobe -1, right kink -1, left kink +1, so the component's
// signed area is a - b - c + d. The defaults make it zero, as a Legendrian
// projection requires.
inline DiagramSpec u0(const Area& a = Area(2), const Area& b = Area(2), const Area& c = Area(1),
                      const Area& d = Area(1)) {
  DiagramSpec s;
  CrossingSpec x;  // figure-eight crossing, standard-unknot chirality
  x.id = "x";
  x.over_parity = 1;
  x.slots = {ArcEnd{"R2", false}, ArcEnd{"L2", false}, ArcEnd{"L1", true}, ArcEnd{"R1", true}};
  CrossingSpec cR;  // clockwise kink hanging outward off the right lobe
  cR.id = "cR";
  cR.over_parity = 0;
  cR.slots = {ArcEnd{"R2", true}, ArcEnd{"R1", false}, ArcEnd{"kr", false}, ArcEnd{"kr", true}};
  CrossingSpec cL;  // counterclockwise kink hanging outward off the left lobe
  cL.id = "cL";
  cL.over_parity = 0;
  cL.slots = {ArcEnd{"kl", true}, ArcEnd{"kl", false}, ArcEnd{"L1", false}, ArcEnd{"L2", true}};
  s.crossings = {x, cR, cL};
  s.places.push_back({FaceRef::R("R1"), FaceRef::Outer()});
  s.areas.push_back({AreaSpec{FaceRef::L("R1"), a}});
  s.areas.push_back({AreaSpec{FaceRef::R("L1"), b}});
  s.areas.push_back({AreaSpec{FaceRef::R("kr"), c}});
  s.areas.push_back({AreaSpec{FaceRef::L("kl"), d}});
  return s;
}

// Two circles crossing twice (the overlapping-disks projection); both ccw.
// Component arcs: aL/aR belong to circle A (left), bL/bR to circle B.
// over_at_top: 0 = strand B over at the top crossing; parity 1 = A over.
inline DiagramSpec overlap(const Area& left_moon, const Area& lens, const Area& right_moon,
                           int top_parity = 1, int bottom_parity = 1) {
  DiagramSpec s;
  CrossingSpec t;
  t.id = "t";
  t.over_parity = top_parity;
  t.slots = {ArcEnd{"bR", false}, ArcEnd{"aL", true}, ArcEnd{"bL", true}, ArcEnd{"aR", false}};
  CrossingSpec b;
  b.id = "b";
  b.over_parity = bottom_parity;
  b.slots = {ArcEnd{"aR", true}, ArcEnd{"bL", false}, ArcEnd{"aL", false}, ArcEnd{"bR", true}};
  s.crossings.push_back(t);
  s.crossings.push_back(b);
  s.places.push_back({FaceRef::R("bR"), FaceRef::Outer()});
  s.areas.push_back({FaceRef::L("aL"), left_moon});
  s.areas.push_back({FaceRef::L("bL"), lens});
  s.areas.push_back({FaceRef::R("aR"), right_moon});
  return s;
}

}  // namespace lagcob::shapes
