#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagcob/diagram.hpp"

namespace lagcob {

// Attributes a planar-map isomorphism must preserve, per dart.
inline int dart_attrs(const Diagram& d, Dart dt) {
  const Vertex& v = d.vertex(d.vertex_of(dt));
  int a = is_forward(dt) ? 1 : 0;
  if (v.kind == VertexKind::Crossing) {
    a |= 2;
    if (d.slot_of(dt) % 2 == v.over_parity) a |= 4;  // dart lies on the over strand
  }
  return a;
}

// Deterministic traversal encoding of the projection component containing
// `root`. Two rooted components are isomorphic as oriented maps with matching
// over/under and orientation data iff their encodings are equal; the label
// order gives the dart correspondence.
inline std::vector<int> component_encoding(const Diagram& d, Dart root,
                                           std::vector<Dart>* order = nullptr) {
  std::map<Dart, int> label;
  std::vector<Dart> queue{root};
  label[root] = 0;
  std::vector<int> enc;
  auto visit = [&](Dart x) {
    auto it = label.find(x);
    if (it != label.end()) return it->second;
    int l = (int)queue.size();
    label[x] = l;
    queue.push_back(x);
    return l;
  };
  for (size_t i = 0; i < queue.size(); ++i) {
    Dart dt = queue[i];
    enc.push_back(visit(alpha(dt)));
    enc.push_back(visit(d.sigma(dt)));
    enc.push_back(dart_attrs(d, dt));
  }
  if (order) *order = queue;
  return enc;
}

// Minimal encoding over all roots in the projection component of `seed`.
inline std::vector<int> canonical_component_encoding(const Diagram& d, Dart seed,
                                                     std::vector<Dart>* roots_achieving = nullptr) {
  int p = d.proj_component_of_vertex(d.vertex_of(seed));
  std::vector<int> best;
  if (roots_achieving) roots_achieving->clear();
  for (Dart r = 0; r < d.num_darts(); ++r) {
    if (d.proj_component_of_vertex(d.vertex_of(r)) != p) continue;
    std::vector<int> enc = component_encoding(d, r);
    if (best.empty() || enc < best) {
      best = enc;
      if (roots_achieving) *roots_achieving = {r};
    } else if (enc == best && roots_achieving) {
      roots_achieving->push_back(r);
    }
  }
  return best;
}

// A full diagram isomorphism: darts of a -> darts of b, with the induced
// face and knot-component correspondences.
struct Isomorphism {
  std::vector<Dart> dart_map;
  std::vector<int> face_map;  // full faces of a -> full faces of b
  std::vector<int> comp_map;  // knot components of a -> of b
};

namespace detail {

inline bool extend_isomorphism(const Diagram& a, const Diagram& b,
                               const std::vector<std::pair<Dart, Dart>>& seeds,
                               Isomorphism& out) {
  out.dart_map.assign(a.num_darts(), -1);
  std::vector<Dart> stack;
  auto assign = [&](Dart x, Dart y) {
    if (out.dart_map[x] != -1) return out.dart_map[x] == y;
    if (dart_attrs(a, x) != dart_attrs(b, y)) return false;
    out.dart_map[x] = y;
    stack.push_back(x);
    return true;
  };
  for (auto [x, y] : seeds)
    if (!assign(x, y)) return false;
  while (!stack.empty()) {
    Dart x = stack.back();
    stack.pop_back();
    Dart y = out.dart_map[x];
    if (!assign(alpha(x), alpha(y))) return false;
    if (!assign(a.sigma(x), b.sigma(y))) return false;
  }
  for (Dart x = 0; x < a.num_darts(); ++x)
    if (out.dart_map[x] == -1) return false;
  // Placement: outward sides and hosts must correspond. It suffices that the
  // induced map on local faces sends each component's outward face to the
  // image component's outward face and parents to parents; we check via full
  // faces: outer -> outer and every full face maps consistently.
  out.face_map.assign(a.num_faces(), -1);
  for (Dart x = 0; x < a.num_darts(); ++x) {
    int fa = a.face_of_dart(x), fb = b.face_of_dart(out.dart_map[x]);
    if (out.face_map[fa] == -1)
      out.face_map[fa] = fb;
    else if (out.face_map[fa] != fb)
      return false;
  }
  // Surjectivity onto b's faces and outer preservation.
  std::vector<char> hit(b.num_faces(), 0);
  for (int f = 0; f < a.num_faces(); ++f) {
    if (out.face_map[f] == -1) return false;
    if (hit[out.face_map[f]]++) return false;
  }
  if (out.face_map[a.outer_face()] != b.outer_face()) return false;
  out.comp_map.assign(a.num_components(), -1);
  for (int e = 0; e < a.num_edges(); ++e) {
    int ca = a.component_of_edge(e), cb = b.component_of_edge(edge_of(out.dart_map[tail_dart(e)]));
    if (out.comp_map[ca] == -1)
      out.comp_map[ca] = cb;
    else if (out.comp_map[ca] != cb)
      return false;
  }
  return true;
}

inline void enumerate_rec(const Diagram& a, const Diagram& b,
                          const std::vector<Dart>& a_seed_darts,
                          const std::vector<std::vector<Dart>>& b_candidates, size_t i,
                          std::vector<std::pair<Dart, Dart>>& seeds, std::vector<char>& used_pcomp,
                          std::vector<Isomorphism>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  if (i == a_seed_darts.size()) {
    Isomorphism iso;
    if (extend_isomorphism(a, b, seeds, iso)) out.push_back(std::move(iso));
    return;
  }
  for (Dart cand : b_candidates[i]) {
    int p = b.proj_component_of_vertex(b.vertex_of(cand));
    if (used_pcomp[p]) continue;
    used_pcomp[p] = 1;
    seeds.emplace_back(a_seed_darts[i], cand);
    enumerate_rec(a, b, a_seed_darts, b_candidates, i + 1, seeds, used_pcomp, out, first_only);
    seeds.pop_back();
    used_pcomp[p] = 0;
  }
}

}  // namespace detail

// All isomorphisms of oriented planar maps a -> b preserving over/under,
// orientations, placement, and the outer face.
inline std::vector<Isomorphism> enumerate_isomorphisms(const Diagram& a, const Diagram& b,
                                                       bool first_only = false) {
  std::vector<Isomorphism> out;
  if (a.num_darts() != b.num_darts() || a.num_faces() != b.num_faces() ||
      a.num_proj_components() != b.num_proj_components() ||
      a.num_components() != b.num_components())
    return out;
  if (a.num_darts() == 0) {
    out.push_back(Isomorphism{{}, {b.outer_face()}, {}});
    return out;
  }
  // One seed dart per projection component of a (its canonical root);
  // candidate images: darts of b achieving the same canonical encoding.
  std::vector<Dart> a_seeds;
  std::vector<std::vector<Dart>> b_cands;
  std::vector<char> seen(a.num_proj_components(), 0);
  for (Dart dt = 0; dt < a.num_darts(); ++dt) {
    int p = a.proj_component_of_vertex(a.vertex_of(dt));
    if (seen[p]) continue;
    seen[p] = 1;
    std::vector<Dart> roots;
    std::vector<int> enc = canonical_component_encoding(a, dt, &roots);
    a_seeds.push_back(roots[0]);
    std::vector<Dart> cands;
    std::vector<char> bseen(b.num_proj_components(), 0);
    for (Dart bd = 0; bd < b.num_darts(); ++bd) {
      int bp = b.proj_component_of_vertex(b.vertex_of(bd));
      if (bseen[bp]) continue;
      bseen[bp] = 1;
      std::vector<Dart> broots;
      if (canonical_component_encoding(b, bd, &broots) == enc)
        for (Dart r : broots) cands.push_back(r);
    }
    b_cands.push_back(std::move(cands));
  }
  std::vector<std::pair<Dart, Dart>> seeds;
  std::vector<char> used(b.num_proj_components(), 0);
  detail::enumerate_rec(a, b, a_seeds, b_cands, 0, seeds, used, out, first_only);
  return out;
}

// Isotopy of diagrams as knot projections (areas ignored): a correspondence
// of faces/crossings realizing an isomorphism, if one exists.
inline std::optional<Isomorphism> is_isotopic(const Diagram& a, const Diagram& b) {
  auto isos = enumerate_isomorphisms(a, b, /*first_only=*/true);
  if (isos.empty()) return std::nullopt;
  return isos[0];
}

// Commensurability: isotopic, and some matching of domains under which every
// per-domain area difference is strictly smaller than each element of
// Delta(a) u Delta(b).
inline bool commensurate(const Diagram& a, const Diagram& b) {
  std::set<Area> delta = delta_set(a);
  for (const Area& x : delta_set(b)) delta.insert(x);
  std::optional<Area> bound;
  if (!delta.empty()) bound = *delta.begin();
  for (const Isomorphism& iso : enumerate_isomorphisms(a, b)) {
    bool ok = true;
    for (int f = 0; f < a.num_faces() && ok; ++f) {
      if (!a.face_bounded(f)) continue;
      Area diff = abs(a.face_area(f) - b.face_area(iso.face_map[f]));
      if (bound && !(diff < *bound)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Deterministic structural key (not isomorphism-invariant across relabelings;
// used for replay caching and printing order).
inline std::string diagram_key(const Diagram& d) {
  std::string s;
  DiagramSpec spec = d.export_spec();
  for (const auto& c : spec.crossings) {
    s += "X" + std::to_string(c.over_parity);
    for (const auto& e : c.slots) s += (e.tail ? "+" : "-") + e.arc;
  }
  for (const auto& l : spec.loops) s += "O" + l.id;
  for (const auto& p : spec.places) s += "P" + p.own.str() + ">" + p.host.str();
  for (const auto& a : spec.areas) s += "A" + a.face.str() + "=" + a.area.str();
  return s;
}

}  // namespace lagcob
