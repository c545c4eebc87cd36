#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lagcob/diagram.hpp"

namespace lagcob {

// Deterministic schematic rendering: per projection component a Tutte-style
// barycentric layout of the subdivided rotation system with the outward face
// pinned on a circle, composed by nesting children into their host faces.
// Areas are annotations, not geometry.

namespace svgdetail {

struct Pt {
  double x = 0, y = 0;
};

struct CompLayout {
  std::map<int, Pt> node;        // layout-node id -> position
  std::map<int, Pt> face_label;  // local face -> position
};

// Dense solve of the barycentric system by Gauss elimination.
inline std::vector<double> solve(std::vector<std::vector<double>> A, std::vector<double> b) {
  int n = (int)b.size();
  for (int i = 0; i < n; ++i) {
    int piv = i;
    for (int r = i + 1; r < n; ++r)
      if (std::fabs(A[r][i]) > std::fabs(A[piv][i])) piv = r;
    std::swap(A[i], A[piv]);
    std::swap(b[i], b[piv]);
    if (std::fabs(A[i][i]) < 1e-12) continue;
    for (int r = i + 1; r < n; ++r) {
      double f = A[r][i] / A[i][i];
      if (f == 0) continue;
      for (int c = i; c < n; ++c) A[r][c] -= f * A[i][c];
      b[r] -= f * b[i];
    }
  }
  std::vector<double> x(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    if (std::fabs(A[i][i]) < 1e-12) continue;
    double s = b[i];
    for (int c = i + 1; c < n; ++c) s -= A[i][c] * x[c];
    x[i] = s / A[i][i];
  }
  return x;
}

constexpr int kSub = 4;  // subdivision nodes per edge

}  // namespace svgdetail

class SvgRenderer {
 public:
  explicit SvgRenderer(const Diagram& d) : d_(d) { layout(); }

  std::string svg() const {
    std::string out;
    double sc = 110, margin = 30;
    auto X = [&](svgdetail::Pt p) { return margin + sc * (p.x - minx_); };
    auto Y = [&](svgdetail::Pt p) { return margin + sc * (maxy_ - p.y); };
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                  2 * margin + sc * (maxx_ - minx_), 2 * margin + sc * (maxy_ - miny_));
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    for (int e = 0; e < d_.num_edges(); ++e) {
      std::vector<svgdetail::Pt> pts = edge_points(e);
      // Under-strand ends get a visual gap at their crossing.
      if (under_at_end(e, false)) trim(pts, false);
      if (under_at_end(e, true)) trim(pts, true);
      const char* color = palette[d_.component_of_edge(e) % 8];
      out += "<path d=\"";
      for (size_t i = 0; i < pts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%c%.2f %.2f", i ? 'L' : 'M', X(pts[i]), Y(pts[i]));
        out += buf;
      }
      std::snprintf(buf, sizeof buf, "\" fill=\"none\" stroke=\"%s\" stroke-width=\"2\"/>\n",
                    color);
      out += buf;
      // Direction tick at the midpoint.
      svgdetail::Pt a = pts[pts.size() / 2 - 1], b = pts[pts.size() / 2];
      double dx = b.x - a.x, dy = b.y - a.y, n = std::hypot(dx, dy);
      if (n > 1e-9) {
        dx /= n;
        dy /= n;
        svgdetail::Pt m{(a.x + b.x) / 2, (a.y + b.y) / 2};
        std::snprintf(buf, sizeof buf,
                      "<path d=\"M%.2f %.2fL%.2f %.2fM%.2f %.2fL%.2f %.2f\" stroke=\"%s\" "
                      "stroke-width=\"1.2\" fill=\"none\"/>\n",
                      X(m), Y(m), X({m.x - 0.06 * dx - 0.05 * dy, m.y - 0.06 * dy + 0.05 * dx}),
                      Y({m.x - 0.06 * dx - 0.05 * dy, m.y - 0.06 * dy + 0.05 * dx}), X(m), Y(m),
                      X({m.x - 0.06 * dx + 0.05 * dy, m.y - 0.06 * dy - 0.05 * dx}),
                      Y({m.x - 0.06 * dx + 0.05 * dy, m.y - 0.06 * dy - 0.05 * dx}), color);
        out += buf;
      }
    }
    for (auto& [f, p] : face_pos_) {
      std::snprintf(buf, sizeof buf,
                    "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" text-anchor=\"middle\" "
                    "fill=\"#333\">%s</text>\n",
                    X(p), Y(p), d_.face_area(f).str().c_str());
      out += buf;
    }
    out += "</svg>\n";
    return out;
  }

 private:
  const Diagram& d_;
  std::map<int, svgdetail::Pt> vpos_;                  // vertex positions
  std::map<std::pair<int, int>, svgdetail::Pt> spos_;  // (edge, k) subdivision positions
  std::map<int, svgdetail::Pt> face_pos_;              // full face label positions
  double minx_ = 0, maxx_ = 1, miny_ = 0, maxy_ = 1;

  // Layout node ids within one component: vertices are v, subdivision node k
  // of edge e is coded after vertices, then local-face phantoms.
  void layout() {
    using namespace svgdetail;
    int P = d_.num_proj_components();
    std::vector<CompLayout> comp(P);
    for (int p = 0; p < P; ++p) layout_component(p, comp[p]);

    // Compose: depth-first from top-level components.
    std::vector<std::vector<int>> children_of_face(d_.num_faces());
    std::vector<int> pcomp_parent_face(P);
    for (int p = 0; p < P; ++p) {
      int f = d_.pcomp_face_chain(p)[0];
      pcomp_parent_face[p] = f;
      children_of_face[f].push_back(p);
    }
    // Transforms per component: scale + offset.
    std::vector<double> scale(P, 1.0);
    std::vector<Pt> offset(P);
    std::vector<int> order;  // topological: outer children first
    {
      double xcur = 0;
      for (int p = 0; p < P; ++p)
        if (pcomp_parent_face[p] == d_.outer_face()) {
          offset[p] = {xcur, 0};
          xcur += 2.6;
          order.push_back(p);
        }
      for (size_t i = 0; i < order.size(); ++i) {
        int q = order[i];
        // place children of q's bounded local faces
        for (int lfq = 0; lfq < (int)num_lfaces(); ++lfq) {
          if (lface_pcomp(lfq) != q) continue;
          int f = lface_full(lfq);
          if (f == d_.outer_face()) continue;
          auto it = comp[q].face_label.find(lfq);
          if (it == comp[q].face_label.end()) continue;
          const auto& kids = children_of_face[f];
          // distance from label point to face walk, in q's layout
          double dist = 0.35;
          int slot = 0;
          for (int p : kids) {
            double ang = 2 * M_PI * slot / std::max<size_t>(1, kids.size());
            double r = kids.size() > 1 ? 0.45 * dist : 0.0;
            double sc = scale[q] * dist * (kids.size() > 1 ? 0.38 : 0.8);
            offset[p] = {offset[q].x + scale[q] * it->second.x + r * std::cos(ang) * scale[q],
                         offset[q].y + scale[q] * it->second.y + r * std::sin(ang) * scale[q]};
            scale[p] = sc;
            order.push_back(p);
            ++slot;
          }
        }
      }
    }
    auto xform = [&](int p, Pt pt) {
      return Pt{offset[p].x + scale[p] * pt.x, offset[p].y + scale[p] * pt.y};
    };
    for (int v = 0; v < d_.num_vertices(); ++v) {
      int p = d_.proj_component_of_vertex(v);
      vpos_[v] = xform(p, comp[p].node[v]);
    }
    for (int e = 0; e < d_.num_edges(); ++e) {
      int p = d_.proj_component_of_edge(e);
      for (int k = 0; k < kSub; ++k)
        spos_[{e, k}] = xform(p, comp[p].node[sub_node(e, k)]);
    }
    for (int lf = 0; lf < (int)num_lfaces(); ++lf) {
      int f = lface_full(lf);
      if (f == d_.outer_face()) continue;
      int p = lface_pcomp(lf);
      if (is_own_face(lf) && comp[p].face_label.count(lf))
        face_pos_[f] = xform(p, comp[p].face_label[lf]);
    }
    minx_ = 1e18, maxx_ = -1e18, miny_ = 1e18, maxy_ = -1e18;
    auto upd = [&](Pt q) {
      minx_ = std::min(minx_, q.x);
      maxx_ = std::max(maxx_, q.x);
      miny_ = std::min(miny_, q.y);
      maxy_ = std::max(maxy_, q.y);
    };
    for (auto& [v, q] : vpos_) upd(q);
    for (auto& [k, q] : spos_) upd(q);
  }

  size_t num_lfaces() const { return lface_count_cache(); }
  size_t lface_count_cache() const {
    int mx = 0;
    for (Dart dt = 0; dt < d_.num_darts(); ++dt) mx = std::max(mx, lface_of(dt) + 1);
    return mx;
  }
  // The diagram keeps local faces private; recover them from the walk
  // structure via face_next (deterministic, same orbits).
  int lface_of(Dart dt) const {
    if (lface_map_.empty()) {
      const_cast<SvgRenderer*>(this)->lface_map_.assign(d_.num_darts(), -1);
      int n = 0;
      for (Dart s = 0; s < d_.num_darts(); ++s) {
        if (lface_map_[s] != -1) continue;
        Dart c = s;
        do {
          const_cast<SvgRenderer*>(this)->lface_map_[c] = n;
          c = d_.face_next(c);
        } while (c != s);
        ++n;
      }
    }
    return lface_map_[dt];
  }
  int lface_full(int lf) const {
    for (Dart dt = 0; dt < d_.num_darts(); ++dt)
      if (lface_of(dt) == lf) return d_.face_of_dart(dt);
    return -1;
  }
  int lface_pcomp(int lf) const {
    for (Dart dt = 0; dt < d_.num_darts(); ++dt)
      if (lface_of(dt) == lf) return d_.proj_component_of_vertex(d_.vertex_of(dt));
    return -1;
  }
  bool is_own_face(int lf) const {
    // lf is the defining local face of its full face unless it is some
    // component's outward face: outward faces resolve to an ancestor.
    int p = lface_pcomp(lf);
    int f = lface_full(lf);
    for (Dart dt = 0; dt < d_.num_darts(); ++dt)
      if (lface_of(dt) == lf && d_.pcomp_face_chain(p)[0] == f) return false;
    return true;
  }

  int sub_node(int e, int k) const { return d_.num_vertices() + e * svgdetail::kSub + k; }

  std::vector<svgdetail::Pt> edge_points(int e) const {
    std::vector<svgdetail::Pt> pts;
    pts.push_back(vpos_.at(d_.vertex_of(tail_dart(e))));
    for (int k = 0; k < svgdetail::kSub; ++k) pts.push_back(spos_.at({e, k}));
    pts.push_back(vpos_.at(d_.vertex_of(head_dart(e))));
    return pts;
  }

  bool under_at_end(int e, bool head) const {
    Dart dt = head ? head_dart(e) : tail_dart(e);
    const Vertex& v = d_.vertex(d_.vertex_of(dt));
    if (v.kind != VertexKind::Crossing) return false;
    return d_.slot_of(dt) % 2 != v.over_parity;
  }

  static void trim(std::vector<svgdetail::Pt>& pts, bool head) {
    if (pts.size() < 2) return;
    if (head) {
      auto& last = pts[pts.size() - 1];
      auto& prev = pts[pts.size() - 2];
      last = {prev.x + 0.45 * (last.x - prev.x), prev.y + 0.45 * (last.y - prev.y)};
    } else {
      auto& first = pts[0];
      auto& next = pts[1];
      first = {next.x + 0.45 * (first.x - next.x), next.y + 0.45 * (first.y - next.y)};
    }
  }

  void layout_component(int p, svgdetail::CompLayout& out) {
    using namespace svgdetail;
    // Collect nodes: vertices and subdivision nodes of this component, plus a
    // phantom per local face except the outward one.
    std::vector<int> nodes;
    std::map<int, int> idx;
    auto add = [&](int n) {
      if (idx.try_emplace(n, (int)nodes.size()).second) nodes.push_back(n);
    };
    for (int v = 0; v < d_.num_vertices(); ++v)
      if (d_.proj_component_of_vertex(v) == p) add(v);
    for (int e = 0; e < d_.num_edges(); ++e)
      if (d_.proj_component_of_edge(e) == p)
        for (int k = 0; k < kSub; ++k) add(sub_node(e, k));
    // adjacency
    std::map<int, std::vector<int>> adj;
    auto connect = [&](int a, int b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    };
    for (int e = 0; e < d_.num_edges(); ++e) {
      if (d_.proj_component_of_edge(e) != p) continue;
      int prev = d_.vertex_of(tail_dart(e));
      for (int k = 0; k < kSub; ++k) {
        connect(prev, sub_node(e, k));
        prev = sub_node(e, k);
      }
      connect(prev, d_.vertex_of(head_dart(e)));
    }
    // Outward walk: pin around the unit circle.
    int outward_lf = -1;
    for (Dart dt = 0; dt < d_.num_darts(); ++dt) {
      if (d_.proj_component_of_vertex(d_.vertex_of(dt)) != p) continue;
      if (d_.face_of_dart(dt) == d_.pcomp_face_chain(p)[0] && !is_own_face(lface_of(dt))) {
        outward_lf = lface_of(dt);
        break;
      }
    }
    std::map<int, std::vector<double>> pin_angles;
    {
      std::vector<int> cycle;
      Dart start = -1;
      for (Dart dt = 0; dt < d_.num_darts() && start == -1; ++dt)
        if (lface_of(dt) == outward_lf) start = dt;
      Dart c = start;
      do {
        int e = edge_of(c);
        // walking along dart c: tail->head order if forward
        if (is_forward(c)) {
          cycle.push_back(d_.vertex_of(tail_dart(e)));
          for (int k = 0; k < kSub; ++k) cycle.push_back(sub_node(e, k));
        } else {
          cycle.push_back(d_.vertex_of(head_dart(e)));
          for (int k = kSub - 1; k >= 0; --k) cycle.push_back(sub_node(e, k));
        }
        c = d_.face_next(c);
      } while (c != start);
      for (size_t i = 0; i < cycle.size(); ++i)
        pin_angles[cycle[i]].push_back(2 * M_PI * i / cycle.size());
    }
    // Phantoms for bounded-side local faces of this component.
    std::map<int, int> phantom;  // local face -> node id
    int next_phantom = d_.num_vertices() + d_.num_edges() * kSub;
    for (Dart dt = 0; dt < d_.num_darts(); ++dt) {
      if (d_.proj_component_of_vertex(d_.vertex_of(dt)) != p) continue;
      int lf = lface_of(dt);
      if (lf == outward_lf || phantom.count(lf)) continue;
      phantom[lf] = next_phantom++;
      add(phantom[lf]);
    }
    for (Dart dt = 0; dt < d_.num_darts(); ++dt) {
      if (d_.proj_component_of_vertex(d_.vertex_of(dt)) != p) continue;
      int lf = lface_of(dt);
      if (!phantom.count(lf)) continue;
      int e = edge_of(dt);
      connect(phantom[lf], d_.vertex_of(tail_dart(e)));
      for (int k = 0; k < kSub; ++k) connect(phantom[lf], sub_node(e, k));
      connect(phantom[lf], d_.vertex_of(head_dart(e)));
    }
    // Solve: pinned nodes fixed, others the average of neighbors.
    int n = (int)nodes.size();
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0));
    std::vector<double> bx(n, 0), by(n, 0);
    for (int i = 0; i < n; ++i) {
      int id = nodes[i];
      auto pin = pin_angles.find(id);
      if (pin != pin_angles.end()) {
        A[i][i] = 1;
        double sx = 0, sy = 0;
        for (double a : pin->second) {
          sx += std::cos(a);
          sy += std::sin(a);
        }
        bx[i] = sx / pin->second.size();
        by[i] = sy / pin->second.size();
      } else {
        const auto& nb = adj[id];
        A[i][i] = (double)nb.size();
        for (int m : nb) A[i][idx[m]] -= 1;
      }
    }
    std::vector<double> xs = solve(A, bx), ys = solve(A, by);
    for (int i = 0; i < n; ++i) out.node[nodes[i]] = {xs[i], ys[i]};
    for (auto& [lf, ph] : phantom) out.face_label[lf] = out.node[ph];
    // Components with no interior structure (single loop) still need labels.
  }

  std::vector<int> lface_map_;
};

inline std::string render_svg(const Diagram& d) { return SvgRenderer(d).svg(); }

}  // namespace lagcob
