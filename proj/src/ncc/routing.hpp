#pragma once

#include <optional>
#include <vector>

#include "ncc/instance.hpp"
#include "ncc/triangulation.hpp"

namespace ncc {

struct NotATree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Triangulated view of one region with routed connectors as hard walls,
// foreign boundaries as soft refinement and point obstacles as vertices.
// Supplies the component structure of R \ (routed connectors) and exact
// routing of simple polylines between triangulation vertices.
class Domain {
  public:
    // obstacles: polylines that act as walls (earlier connectors), tagged by
    // their index. soft: segments only refining the triangulation. points:
    // all points that legs must avoid (inserted as vertices).
    Domain(const Region& region, const std::vector<Polyline>& obstacles,
           const std::vector<Segment>& soft, const std::vector<Point>& points);

    const Triangulation& tri() const { return tri_; }
    const Region& region() const { return region_; }

    bool tri_inside(int t) const { return inside_[t] == 1; }
    int component_of_tri(int t) const { return comp_[t]; }
    int component_count() const { return comp_count_; }

    // Component of the domain containing (or whose closure contains) point p,
    // where p must be an inserted vertex or interior point.
    int component_of_point(const Point& p) const;

    // Connector pieces inside the region: maximal chains of edges carrying one
    // obstacle tag between two boundary incidences (or dangling ends).
    struct Piece {
        int conn = -1;
        int piece = -1;
        std::vector<int> chain;       // vertex ids along the piece
        bool separating = false;      // chord between two components
        int comp_a = -1, comp_b = -1; // components on the two sides if separating
    };
    const std::vector<Piece>& pieces() const { return pieces_; }

    struct TreeEdge {
        int parent, child;
        std::size_t piece_index;  // into pieces()
    };
    // Component tree rooted at the component containing `root_point`.
    // Throws NotATree if the adjacency has a cycle or is disconnected.
    struct Tree {
        int root;
        std::vector<int> parent;               // per component, -1 at root
        std::vector<std::size_t> parent_piece; // piece forming the border to the parent
        std::vector<int> depth;
    };
    Tree component_tree(const Point& root_point) const;

    // Shortest dual path polyline from vertex `from` to vertex `to` staying in
    // component `comp`, crossing only non-hard edges. Triangles incident to
    // any vertex in `blocked_fans` are off limits (used to wrap detours around
    // targets sitting on the region boundary). Returns the polyline vertices
    // (from, ..., to); empty optional if unreachable.
    std::optional<std::vector<Point>> route_leg(int from, int to, int comp,
                                                const std::vector<int>* blocked_fans = nullptr);

    // Inserts a routed polyline as hard walls (tag: connector in progress) so
    // later legs avoid it; recomputes components.
    void commit_walls(const std::vector<Point>& polyline, int conn_id, int piece_id);

    int vertex_of(const Point& p) const { return tri_.find_vertex(p); }

    // Inserts p as a vertex (splitting any constraint edge it lies on) and
    // refreshes the component structure.
    int add_vertex(const Point& p) {
        int v = tri_.insert_point(p);
        recompute();
        return v;
    }

    void recompute();  // inside flags, components, pieces

  private:
    Region region_;
    Triangulation tri_;
    std::vector<int> inside_;  // per triangle: 1 inside region, 0 outside
    std::vector<int> comp_;    // per triangle: component id or -1
    int comp_count_ = 0;
    std::vector<Piece> pieces_;

    static Triangulation make_tri(const Region& region, const std::vector<Polyline>& obstacles,
                                  const std::vector<Segment>& soft, const std::vector<Point>& points);
};

// Exact area (doubled) of region minus the union of earlier regions, via the
// triangulation of `region` constrained by all earlier boundaries.
Rat difference_area2(const Region& region, const std::vector<Region>& earlier);

// Deterministic interior point of region strictly outside all earlier regions:
// the lexicographically least centroid over candidate triangles.
std::optional<Point> interior_point_outside(const Region& region, const std::vector<Region>& earlier,
                                            const std::vector<Point>& extra_vertices);

}  // namespace ncc
