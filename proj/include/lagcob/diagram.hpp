#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lagcob/area.hpp"
#include "lagcob/error.hpp"

namespace lagcob {

// Darts: half-edges. Edge e owns darts 2e (its tail dart, pointing along the
// arc's travel direction) and 2e+1 (its head dart). alpha(d) = d^1.
using Dart = int;

inline Dart alpha(Dart d) { return d ^ 1; }
inline int edge_of(Dart d) { return d >> 1; }
inline Dart tail_dart(int edge) { return 2 * edge; }
inline Dart head_dart(int edge) { return 2 * edge + 1; }
inline bool is_forward(Dart d) { return (d & 1) == 0; }

enum class VertexKind { Crossing, Marker };

// Rotation lists darts leaving the vertex in counterclockwise order.
// Crossings are 4-valent; the strand through slots {0,2} is "over" when
// over_parity == 0, the one through {1,3} when over_parity == 1.
// Markers are invisible 2-valent vertices carried by crossingless loops so
// the dart algebra stays total.
struct Vertex {
  VertexKind kind = VertexKind::Crossing;
  int over_parity = 0;
  std::vector<Dart> rot;
};

// ---------------------------------------------------------------------------
// Build specification (mirrors the textual diagram format).

enum class Side { Left, Right };

// A face reference: the outer region, or the face on one side of a named arc
// (Left = the side a traveller along the arc sees on their left).
struct FaceRef {
  bool outer = false;
  std::string arc;
  Side side = Side::Left;

  static FaceRef Outer() { return FaceRef{true, "", Side::Left}; }
  static FaceRef L(std::string a) { return FaceRef{false, std::move(a), Side::Left}; }
  static FaceRef R(std::string a) { return FaceRef{false, std::move(a), Side::Right}; }

  std::string str() const {
    if (outer) return "outer";
    return (side == Side::Left ? "left(" : "right(") + arc + ")";
  }
  friend bool operator==(const FaceRef& a, const FaceRef& b) {
    return a.outer == b.outer && (a.outer || (a.arc == b.arc && a.side == b.side));
  }
};

struct ArcEnd {
  std::string arc;
  bool tail = true;  // true: the arc leaves this slot; false: it arrives
};

struct CrossingSpec {
  std::string id;
  int over_parity = 0;
  std::array<ArcEnd, 4> slots;  // counterclockwise
};

struct LoopSpec {
  std::string id;  // the loop's single closed arc; sides named left(id)/right(id)
};

struct PlaceSpec {
  FaceRef own;   // a local face of the component being placed (its outward side)
  FaceRef host;  // where that side faces: outer or a face of another component
};

struct AreaSpec {
  FaceRef face;
  Area area;
};

struct DiagramSpec {
  std::vector<CrossingSpec> crossings;
  std::vector<LoopSpec> loops;
  std::vector<PlaceSpec> places;
  std::vector<AreaSpec> areas;
};

// ---------------------------------------------------------------------------

class WindingTable {
 public:
  WindingTable() = default;
  WindingTable(int faces, int comps) : comps_(comps), w_(faces * comps, 0) {}
  int& at(int face, int comp) { return w_[face * comps_ + comp]; }
  int at(int face, int comp) const { return w_[face * comps_ + comp]; }

 private:
  int comps_ = 0;
  std::vector<int> w_;
};

class Diagram {
 public:
  static Diagram build(const DiagramSpec& spec);

  // --- map structure ---
  int num_vertices() const { return (int)verts_.size(); }
  int num_edges() const { return (int)edge_names_.size(); }
  int num_darts() const { return 2 * num_edges(); }
  int num_crossings() const { return num_crossings_; }
  const Vertex& vertex(int v) const { return verts_[v]; }
  int vertex_of(Dart d) const { return dart_vertex_[d]; }
  int slot_of(Dart d) const { return dart_slot_[d]; }
  Dart sigma(Dart d) const {  // ccw-next dart at the same vertex
    const Vertex& v = verts_[dart_vertex_[d]];
    return v.rot[(dart_slot_[d] + 1) % v.rot.size()];
  }
  Dart sigma_inv(Dart d) const {
    const Vertex& v = verts_[dart_vertex_[d]];
    return v.rot[(dart_slot_[d] + v.rot.size() - 1) % v.rot.size()];
  }
  // Faces lie on the left of every dart in their walk. Arriving at a vertex
  // through alpha(d), the boundary continues along the dart one step
  // clockwise from the arrival end.
  Dart face_next(Dart d) const { return sigma_inv(alpha(d)); }

  const std::string& arc_name(int edge) const { return edge_names_[edge]; }
  std::optional<int> edge_by_name(const std::string& name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  // Travel continuation: enter a vertex along forward dart d; returns the
  // forward dart leaving it on the same strand.
  Dart strand_next(Dart d) const {
    Dart in = alpha(d);
    const Vertex& v = verts_[dart_vertex_[in]];
    int k = dart_slot_[in];
    return v.rot[(k + v.rot.size() / 2) % v.rot.size()];
  }

  // --- knot components ---
  int num_components() const { return (int)component_edges_.size(); }
  int component_of_edge(int e) const { return edge_component_[e]; }
  // Edges of a component in travel order.
  const std::vector<int>& component_edges(int c) const { return component_edges_[c]; }
  bool component_is_loop(int c) const {
    return component_edges_[c].size() == 1 &&
           verts_[dart_vertex_[tail_dart(component_edges_[c][0])]].kind == VertexKind::Marker;
  }

  // --- projection components (connected pieces of the 4-valent graph) ---
  int num_proj_components() const { return num_pcomps_; }
  int proj_component_of_vertex(int v) const { return vert_pcomp_[v]; }
  int proj_component_of_edge(int e) const { return vert_pcomp_[dart_vertex_[tail_dart(e)]]; }
  int proj_component_of_component(int c) const {
    return proj_component_of_edge(component_edges_[c][0]);
  }
  // Chain of full faces from a projection component's position up to outer.
  const std::vector<int>& pcomp_face_chain(int p) const { return pcomp_chain_[p]; }

  // --- faces (of the full arrangement, placement included) ---
  int num_faces() const { return (int)face_walks_.size(); }
  int outer_face() const { return outer_face_; }
  bool face_bounded(int f) const { return f != outer_face_; }
  int face_of_dart(Dart d) const { return lface_full_[dart_lface_[d]]; }
  int left_face(int edge) const { return face_of_dart(tail_dart(edge)); }
  int right_face(int edge) const { return face_of_dart(head_dart(edge)); }
  // Boundary walks; each walk starts at its minimal dart.
  const std::vector<std::vector<Dart>>& face_walks(int f) const { return face_walks_[f]; }
  int face_euler(int f) const {
    int b = (int)face_walks_[f].size();
    return f == outer_face_ ? 1 - b : 2 - b;
  }
  const Area& face_area(int f) const { return face_areas_[f]; }
  int resolve(const FaceRef& ref) const;  // -> full face id

  // --- windings and areas ---
  const WindingTable& windings() const { return windings_; }
  int winding(int face, int comp) const { return windings_.at(face, comp); }

  // Smallest eps coefficient magnitude present in any face area (0 if none);
  // fresh infinitesimals introduced by moves divide this by 2.
  Rational min_eps_scale() const;
  Area fresh_eps() const {
    Rational m = min_eps_scale();
    return Area::infinitesimal(m == 0 ? Rational(1) : m / 2);
  }

  // Crossing sign of crossing vertex v (+1 right-handed). Requires Crossing.
  int crossing_sign(int v) const;

  DiagramSpec export_spec() const;  // canonical names

 private:
  friend class DiagramAnalysis;
  std::vector<Vertex> verts_;
  int num_crossings_ = 0;
  std::vector<int> dart_vertex_, dart_slot_;
  std::vector<std::string> edge_names_;
  std::map<std::string, int> edge_index_;

  std::vector<int> edge_component_;
  std::vector<std::vector<int>> component_edges_;

  std::vector<int> vert_pcomp_;
  int num_pcomps_ = 0;

  std::vector<int> dart_lface_;                 // dart -> local face
  std::vector<std::vector<Dart>> lface_walk_;   // local face walks
  std::vector<int> lface_pcomp_;
  std::vector<int> pcomp_outer_lface_;          // outward local face per pcomp
  std::vector<int> pcomp_parent_lface_;         // host local face; -1 = outer
  std::vector<int> lface_full_;                 // local face -> full face
  std::vector<std::vector<int>> pcomp_chain_;   // pcomp -> face chain to outer
  int outer_face_ = 0;
  std::vector<std::vector<std::vector<Dart>>> face_walks_;
  std::vector<Area> face_areas_;
  WindingTable windings_;

  void trace_components();
  void trace_pcomps();
  void trace_local_faces();
  void resolve_placement(const DiagramSpec& spec);
  void assign_areas(const DiagramSpec& spec);
  void compute_windings();
};

// ---------------------------------------------------------------------------
// impl

inline int Diagram::resolve(const FaceRef& ref) const {
  if (ref.outer) return outer_face_;
  auto e = edge_by_name(ref.arc);
  if (!e) fail(Errc::MalformedPlacement, "unknown arc in face reference: " + ref.arc);
  return ref.side == Side::Left ? left_face(*e) : right_face(*e);
}

inline Rational Diagram::min_eps_scale() const {
  Rational m = 0;
  for (int f = 0; f < num_faces(); ++f) {
    if (f == outer_face_) continue;
    const Rational& e = face_areas_[f].eps;
    if (e != 0) {
      Rational a = e < 0 ? Rational(-e) : e;
      if (m == 0 || a < m) m = a;
    }
  }
  return m;
}

inline int Diagram::crossing_sign(int v) const {
  const Vertex& vx = verts_[v];
  if (vx.kind != VertexKind::Crossing) fail(Errc::MalformedCrossing, "not a crossing");
  // Over strand enters at the slot holding its head dart and leaves two slots
  // later; sign is +1 when the under strand's exit is one ccw step from the
  // over strand's exit.
  int over_exit = -1, under_exit = -1;
  for (int k = 0; k < 4; ++k) {
    if (!is_forward(vx.rot[k])) continue;  // exits are forward darts
    bool over = (k % 2) == vx.over_parity;
    (over ? over_exit : under_exit) = k;
  }
  if (over_exit < 0 || under_exit < 0) fail(Errc::MalformedCrossing, "bad strand directions");
  return (under_exit - over_exit + 4) % 4 == 1 ? 1 : -1;
}

inline Diagram Diagram::build(const DiagramSpec& spec) {
  Diagram d;
  // Edges: every arc named in crossing slots must appear exactly once as a
  // tail and once as a head; loops declare their own closed arc. Edge indices
  // follow first mention so canonical printing is stable.
  std::map<std::string, std::pair<int, int>> ends;  // name -> (tail count, head count)
  auto mention = [&](const std::string& name) {
    if (d.edge_index_.insert({name, (int)d.edge_names_.size()}).second)
      d.edge_names_.push_back(name);
  };
  for (const auto& c : spec.crossings)
    for (const auto& s : c.slots) {
      mention(s.arc);
      (s.tail ? ends[s.arc].first : ends[s.arc].second)++;
    }
  for (const auto& l : spec.loops) {
    if (ends.count(l.id)) fail(Errc::MalformedCrossing, "loop id also used at a crossing: " + l.id);
    mention(l.id);
  }
  for (const auto& name : d.edge_names_) {
    auto cnt = ends.count(name) ? ends[name] : std::pair<int, int>{0, 0};
    bool is_loop = cnt.first == 0 && cnt.second == 0;
    if (!is_loop && (cnt.first != 1 || cnt.second != 1))
      fail(Errc::MalformedCrossing, "arc " + name + " must have exactly one tail and one head");
  }
  d.dart_vertex_.assign(2 * d.edge_names_.size(), -1);
  d.dart_slot_.assign(2 * d.edge_names_.size(), -1);

  for (const auto& c : spec.crossings) {
    Vertex v;
    v.kind = VertexKind::Crossing;
    v.over_parity = c.over_parity;
    if (v.over_parity != 0 && v.over_parity != 1)
      fail(Errc::MalformedCrossing, "over parity must be 0 or 1 at " + c.id);
    for (int k = 0; k < 4; ++k) {
      const ArcEnd& s = c.slots[k];
      int e = d.edge_index_.at(s.arc);
      Dart dt = s.tail ? tail_dart(e) : head_dart(e);
      if (d.dart_vertex_[dt] != -1)
        fail(Errc::MalformedCrossing, "arc end used twice: " + s.arc);
      d.dart_vertex_[dt] = (int)d.verts_.size();
      d.dart_slot_[dt] = k;
      v.rot.push_back(dt);
    }
    // Two transverse strands: each opposite slot pair carries one incoming
    // and one outgoing arc end.
    for (int s = 0; s < 2; ++s)
      if (is_forward(v.rot[s]) == is_forward(v.rot[s + 2]))
        fail(Errc::MalformedCrossing, "strand through " + c.id + " has inconsistent direction");
    d.verts_.push_back(std::move(v));
    d.num_crossings_++;
  }
  for (const auto& l : spec.loops) {
    int e = d.edge_index_.at(l.id);
    Vertex v;
    v.kind = VertexKind::Marker;
    v.rot = {tail_dart(e), head_dart(e)};
    d.dart_vertex_[tail_dart(e)] = (int)d.verts_.size();
    d.dart_slot_[tail_dart(e)] = 0;
    d.dart_vertex_[head_dart(e)] = (int)d.verts_.size();
    d.dart_slot_[head_dart(e)] = 1;
    d.verts_.push_back(std::move(v));
  }
  for (Dart dt = 0; dt < d.num_darts(); ++dt)
    if (d.dart_vertex_[dt] == -1)
      fail(Errc::MalformedCrossing, "dangling arc end: " + d.edge_names_[edge_of(dt)]);

  d.trace_components();
  d.trace_pcomps();
  d.trace_local_faces();
  d.resolve_placement(spec);
  d.assign_areas(spec);
  d.compute_windings();
  return d;
}

inline void Diagram::trace_components() {
  edge_component_.assign(num_edges(), -1);
  for (int e = 0; e < num_edges(); ++e) {
    if (edge_component_[e] != -1) continue;
    int c = (int)component_edges_.size();
    component_edges_.emplace_back();
    Dart dcur = tail_dart(e);
    while (true) {
      int ecur = edge_of(dcur);
      if (edge_component_[ecur] != -1) break;
      edge_component_[ecur] = c;
      component_edges_[c].push_back(ecur);
      dcur = strand_next(dcur);
      if (!is_forward(dcur))
        fail(Errc::MalformedCrossing, "orientation inconsistent along a strand");
    }
  }
}

inline void Diagram::trace_pcomps() {
  std::vector<int> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < num_edges(); ++e) {
    int a = find(dart_vertex_[tail_dart(e)]), b = find(dart_vertex_[head_dart(e)]);
    if (a != b) parent[a] = b;
  }
  std::map<int, int> relabel;
  vert_pcomp_.assign(num_vertices(), -1);
  for (int v = 0; v < num_vertices(); ++v) {
    int r = find(v);
    auto [it, fresh] = relabel.try_emplace(r, (int)relabel.size());
    vert_pcomp_[v] = it->second;
  }
  num_pcomps_ = (int)relabel.size();
}

inline void Diagram::trace_local_faces() {
  dart_lface_.assign(num_darts(), -1);
  for (Dart d0 = 0; d0 < num_darts(); ++d0) {
    if (dart_lface_[d0] != -1) continue;
    int f = (int)lface_walk_.size();
    lface_walk_.emplace_back();
    Dart d = d0;
    do {
      dart_lface_[d] = f;
      lface_walk_[f].push_back(d);
      d = face_next(d);
    } while (d != d0);
    lface_pcomp_.push_back(vert_pcomp_[dart_vertex_[d0]]);
  }
  // Euler check per projection component: V - E + F == 2.
  std::vector<int> V(num_pcomps_, 0), E(num_pcomps_, 0), F(num_pcomps_, 0);
  for (int v = 0; v < num_vertices(); ++v) V[vert_pcomp_[v]]++;
  for (int e = 0; e < num_edges(); ++e) E[vert_pcomp_[dart_vertex_[tail_dart(e)]]]++;
  for (int lf = 0; lf < (int)lface_walk_.size(); ++lf) F[lface_pcomp_[lf]]++;
  for (int p = 0; p < num_pcomps_; ++p)
    if (V[p] - E[p] + F[p] != 2)
      fail(Errc::NonPlanar, "rotation system is not planar (V-E+F=" +
                                std::to_string(V[p] - E[p] + F[p]) + ")");
}

inline void Diagram::resolve_placement(const DiagramSpec& spec) {
  pcomp_outer_lface_.assign(num_pcomps_, -1);
  pcomp_parent_lface_.assign(num_pcomps_, -2);
  auto lface_of_ref = [&](const FaceRef& ref) -> int {
    auto e = edge_by_name(ref.arc);
    if (!e) fail(Errc::MalformedPlacement, "unknown arc in placement: " + ref.arc);
    return dart_lface_[ref.side == Side::Left ? tail_dart(*e) : head_dart(*e)];
  };
  for (const auto& pl : spec.places) {
    if (pl.own.outer) fail(Errc::MalformedPlacement, "cannot place the outer region");
    int lf = lface_of_ref(pl.own);
    int p = lface_pcomp_[lf];
    if (pcomp_outer_lface_[p] != -1)
      fail(Errc::MalformedPlacement, "component placed twice: " + pl.own.str());
    pcomp_outer_lface_[p] = lf;
    if (pl.host.outer) {
      pcomp_parent_lface_[p] = -1;
    } else {
      int hlf = lface_of_ref(pl.host);
      if (lface_pcomp_[hlf] == p)
        fail(Errc::MalformedPlacement, "component placed inside itself: " + pl.own.str());
      pcomp_parent_lface_[p] = hlf;
    }
  }
  for (int p = 0; p < num_pcomps_; ++p)
    if (pcomp_outer_lface_[p] == -1)
      fail(Errc::MalformedPlacement, "missing placement for a projection component");

  // Full faces: every local face that is not a component's outward side names
  // one; outward sides resolve through the placement forest.
  int num_lfaces = (int)lface_walk_.size();
  lface_full_.assign(num_lfaces, -1);
  outer_face_ = 0;
  int next = 1;
  std::vector<int> own_full(num_lfaces, -1);
  for (int lf = 0; lf < num_lfaces; ++lf)
    if (pcomp_outer_lface_[lface_pcomp_[lf]] != lf) own_full[lf] = next++;
  // Resolve with cycle detection.
  for (int lf = 0; lf < num_lfaces; ++lf) {
    int steps = 0;
    int cur = lf;
    while (own_full[cur] == -1) {
      int parent = pcomp_parent_lface_[lface_pcomp_[cur]];
      if (parent == -1) break;
      cur = parent;
      if (++steps > num_pcomps_ + 1)
        fail(Errc::MalformedPlacement, "placement references form a cycle");
    }
    lface_full_[lf] = own_full[cur] == -1 ? outer_face_ : own_full[cur];
  }
  face_walks_.assign(next, {});
  for (int lf = 0; lf < num_lfaces; ++lf) face_walks_[lface_full_[lf]].push_back(lface_walk_[lf]);
  // Face chains (nesting ancestry) per projection component.
  pcomp_chain_.assign(num_pcomps_, {});
  for (int p = 0; p < num_pcomps_; ++p) {
    int cur = p;
    int steps = 0;
    while (true) {
      int parent = pcomp_parent_lface_[cur];
      if (parent == -1) {
        pcomp_chain_[p].push_back(outer_face_);
        break;
      }
      pcomp_chain_[p].push_back(lface_full_[parent]);
      cur = lface_pcomp_[parent];
      if (++steps > num_pcomps_ + 1)
        fail(Errc::MalformedPlacement, "placement references form a cycle");
    }
  }
}

inline void Diagram::assign_areas(const DiagramSpec& spec) {
  face_areas_.assign(num_faces(), Area());
  std::vector<bool> seen(num_faces(), false);
  for (const auto& a : spec.areas) {
    int f = resolve(a.face);
    if (f == outer_face_) fail(Errc::AreaCountMismatch, "outer region cannot carry an area");
    if (seen[f]) fail(Errc::AreaCountMismatch, "face given two areas: " + a.face.str());
    seen[f] = true;
    if (!a.area.is_positive())
      fail(Errc::NonPositiveArea, "area of " + a.face.str() + " is " + a.area.str());
    face_areas_[f] = a.area;
  }
  int missing = 0;
  for (int f = 0; f < num_faces(); ++f)
    if (f != outer_face_ && !seen[f]) missing++;
  if (missing)
    fail(Errc::AreaCountMismatch,
         std::to_string((int)spec.areas.size()) + " areas supplied for " +
             std::to_string(num_faces() - 1) + " bounded faces");
}

inline void Diagram::compute_windings() {
  windings_ = WindingTable(num_faces(), num_components());
  std::vector<int> state(num_faces(), 0);  // 0 unseen, 1 queued, 2 done
  std::vector<int> queue{outer_face_};
  state[outer_face_] = 1;
  size_t qi = 0;
  while (qi < queue.size()) {
    int f = queue[qi++];
    state[f] = 2;
    for (int e = 0; e < num_edges(); ++e) {
      if (left_face(e) != f && right_face(e) != f) continue;
      int c = edge_component_[e];
      int lf = left_face(e), rf = right_face(e);
      // w(left, c) = w(right, c) + 1 along the arc's travel direction.
      for (auto [g, other, delta] : {std::tuple{lf, rf, +1}, std::tuple{rf, lf, -1}}) {
        if (g != f) continue;
        if (state[other] == 0) {
          for (int k = 0; k < num_components(); ++k)
            windings_.at(other, k) = windings_.at(f, k);
          windings_.at(other, c) = windings_.at(f, c) - delta;
          state[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  for (int f = 0; f < num_faces(); ++f)
    if (state[f] == 0) fail(Errc::MalformedPlacement, "face structure is not connected");
}

inline DiagramSpec Diagram::export_spec() const {
  DiagramSpec s;
  for (int v = 0; v < num_vertices(); ++v) {
    const Vertex& vx = verts_[v];
    if (vx.kind == VertexKind::Crossing) {
      CrossingSpec c;
      c.id = "c" + std::to_string(s.crossings.size());
      c.over_parity = vx.over_parity;
      for (int k = 0; k < 4; ++k)
        c.slots[k] = ArcEnd{edge_names_[edge_of(vx.rot[k])], is_forward(vx.rot[k])};
      s.crossings.push_back(std::move(c));
    } else {
      s.loops.push_back(LoopSpec{edge_names_[edge_of(vx.rot[0])]});
    }
  }
  auto ref_of_lface = [&](int lf) {
    Dart d = lface_walk_[lf][0];
    return is_forward(d) ? FaceRef::L(edge_names_[edge_of(d)])
                         : FaceRef::R(edge_names_[edge_of(d)]);
  };
  for (int p = 0; p < num_pcomps_; ++p) {
    PlaceSpec pl;
    pl.own = ref_of_lface(pcomp_outer_lface_[p]);
    int parent = pcomp_parent_lface_[p];
    pl.host = parent == -1 ? FaceRef::Outer() : ref_of_lface(parent);
    s.places.push_back(std::move(pl));
  }
  for (int f = 0; f < num_faces(); ++f) {
    if (f == outer_face_) continue;
    // Witness: the smallest dart on the face's boundary.
    Dart best = -1;
    for (const auto& walk : face_walks_[f])
      for (Dart d : walk)
        if (best == -1 || d < best) best = d;
    FaceRef ref = is_forward(best) ? FaceRef::L(edge_names_[edge_of(best)])
                                   : FaceRef::R(edge_names_[edge_of(best)]);
    s.areas.push_back(AreaSpec{ref, face_areas_[f]});
  }
  return s;
}

// ---------------------------------------------------------------------------
// Spec-level operations.

inline WindingTable winding_table(const Diagram& d) { return d.windings(); }

inline Area signed_area(const Diagram& d, int comp) {
  if (comp < 0 || comp >= d.num_components()) fail(Errc::UnknownComponent, "no such component");
  Area total;
  for (int f = 0; f < d.num_faces(); ++f)
    if (d.face_bounded(f)) total += d.winding(f, comp) * d.face_area(f);
  return total;
}

// All face areas plus all absolute differences of distinct areas (Delta(D)).
inline std::set<Area> delta_set(const Diagram& d) {
  std::set<Area> values;
  for (int f = 0; f < d.num_faces(); ++f)
    if (d.face_bounded(f)) values.insert(d.face_area(f));
  std::set<Area> out = values;
  for (auto i = values.begin(); i != values.end(); ++i)
    for (auto j = std::next(i); j != values.end(); ++j) out.insert(abs(*j - *i));
  out.erase(Area());
  return out;
}

// Two components are vertically split when their projections live in
// different connected pieces and neither piece is nested inside a bounded
// face of the other.
inline bool vertically_split(const Diagram& d, int c1, int c2) {
  if (c1 < 0 || c1 >= d.num_components() || c2 < 0 || c2 >= d.num_components())
    fail(Errc::UnknownComponent, "no such component");
  if (c1 == c2) fail(Errc::UnknownComponent, "components must differ");
  int p1 = d.proj_component_of_component(c1), p2 = d.proj_component_of_component(c2);
  if (p1 == p2) return false;
  auto nested_in = [&](int pa, int pb) {  // pa sits inside a bounded face of pb alone
    for (int f : d.pcomp_face_chain(pa)) {
      if (f == d.outer_face()) break;
      for (const auto& walk : d.face_walks(f))
        if (d.proj_component_of_vertex(d.vertex_of(walk[0])) == pb) return true;
    }
    return false;
  };
  return !nested_in(p1, p2) && !nested_in(p2, p1);
}

// Writhe of a component: sum of signs over its self-crossings.
inline int lagrangian_tb(const Diagram& d, int comp) {
  if (comp < 0 || comp >= d.num_components()) fail(Errc::UnknownComponent, "no such component");
  int w = 0;
  for (int v = 0; v < d.num_vertices(); ++v) {
    const Vertex& vx = d.vertex(v);
    if (vx.kind != VertexKind::Crossing) continue;
    if (d.component_of_edge(edge_of(vx.rot[0])) == comp &&
        d.component_of_edge(edge_of(vx.rot[1])) == comp)
      w += d.crossing_sign(v);
  }
  return w;
}

// Whitney index of the projected curve, computed from windings:
//   4*rot = 4 * sum_f w(f,c) chi(f)  -  sum_v (sum of the 4 corner windings).
inline int lagrangian_rot(const Diagram& d, int comp) {
  if (comp < 0 || comp >= d.num_components()) fail(Errc::UnknownComponent, "no such component");
  long acc = 0;
  for (int f = 0; f < d.num_faces(); ++f)
    if (d.face_bounded(f)) acc += 4L * d.winding(f, comp) * d.face_euler(f);
  for (int v = 0; v < d.num_vertices(); ++v) {
    const Vertex& vx = d.vertex(v);
    if (vx.kind != VertexKind::Crossing) continue;
    for (Dart dt : vx.rot) acc -= d.winding(d.face_of_dart(dt), comp);
  }
  if (acc % 4 != 0) fail(Errc::MalformedCrossing, "whitney index accumulator not divisible by 4");
  return (int)(acc / 4);
}

}  // namespace lagcob
