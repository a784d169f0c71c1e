#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ncc/geometry.hpp"

namespace ncc {

// Constraint metadata carried by triangulation edges. Hard edges are walls for
// routing (region boundary, routed connectors); soft edges only refine the
// triangulation (foreign region boundaries) so that routed legs cross them
// transversally at edge midpoints instead of degenerately.
struct EdgeTag {
    bool hard = false;
    int kind = 0;  // 0 none, 1 region boundary, 2 connector piece, 3 soft
    int conn = -1;
    int piece = -1;
};

// Incremental exact constrained triangulation over rational points.
// Not Delaunay: any valid constrained triangulation serves the routing and
// component computations, so no incircle flipping is done.
class Triangulation {
  public:
    // Corners of an enclosing box strictly containing all future points.
    Triangulation(const Point& lo, const Point& hi);

    int insert_point(const Point& p);
    // Both endpoints must already be vertices; no other constraint may cross
    // this segment except at shared endpoints (pre-split inputs first).
    void insert_constraint(int u, int v, const EdgeTag& tag);

    int find_vertex(const Point& p) const;  // -1 if absent
    const Point& vertex(int v) const { return points_[v]; }
    int vertex_count() const { return static_cast<int>(points_.size()); }

    struct Tri {
        int v[3];
        int n[3];  // neighbor across edge opposite v[i]
        bool alive = false;
    };
    const std::vector<Tri>& tris() const { return tris_; }
    bool alive(int t) const { return tris_[t].alive; }

    const EdgeTag* edge_tag(int u, int v) const;
    bool edge_hard(int u, int v) const {
        const EdgeTag* t = edge_tag(u, v);
        return t && t->hard;
    }

    Point centroid(int t) const;
    Point edge_midpoint(int u, int v) const {
        return Point{(points_[u].x + points_[v].x) / 2, (points_[u].y + points_[v].y) / 2};
    }

    // Triangle whose closure contains p (any one of them if p on an edge or
    // vertex); -1 only if p is outside the bounding box.
    int locate(const Point& p) const;

    // All alive triangles incident to vertex v.
    std::vector<int> incident(int v) const;

    void check_integrity() const;  // debug invariant checks, throws on breach

    bool edge_exists(int u, int v, int* tri_out = nullptr, int* edge_out = nullptr) const;
    int tri_edge_index(int t, int a, int b) const;
    int vertex_index_in(int t, int v) const;

  private:
    std::vector<Point> points_;
    std::vector<Tri> tris_;
    std::vector<int> v2t_;  // one alive incident triangle per vertex
    std::map<Point, int> index_;
    std::map<std::pair<int, int>, EdgeTag> tags_;

    static std::pair<int, int> ekey(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

    int new_tri(int a, int b, int c);
    void set_neighbor(int t, int other, int a, int b);  // link t's edge (a,b) to other
    void split_triangle(int t, int vp);
    void split_edge(int t, int edge_in_t, int vp);
    bool flip(int t, int e);  // flips edge opposite corner e of t, false if blocked
    int locate_walk(const Point& p) const;
};

// A segment plus its tag, before splitting at mutual intersections.
struct TaggedSegment {
    Segment seg;
    EdgeTag tag;
};

// Splits all segments at pairwise proper crossings and at vertices of other
// segments or of `extra_points` lying in their interiors. Collinear overlap
// between distinct segments is a hard error.
std::vector<TaggedSegment> split_segments(const std::vector<TaggedSegment>& input,
                                          const std::vector<Point>& extra_points);

}  // namespace ncc
