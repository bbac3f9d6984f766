#ifndef SUBFREE_DISKS_HPP
#define SUBFREE_DISKS_HPP

#include <optional>
#include <string>

#include "layering.hpp"

namespace subfree {

/// Decimal rational, parsed exactly from strings like "-12.625".
struct Rat {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rat& o) const {
        return static_cast<long double>(num) * o.den == static_cast<long double>(o.num) * den;
    }
};
Rat parse_decimal(const std::string& text);

struct Disk {
    Rat x, y, r;
    double cx = 0, cy = 0, cr = 0;  // cached doubles
};

struct DiskSet {
    std::vector<Disk> disks;
    double eps = 1e-9;
};
DiskSet make_disk_set(std::vector<Disk> disks, double eps = 1e-9);

struct Degeneracy {
    std::string kind;  // "identical", "tangency", "triple-point"
    std::string detail;
};

/// Reports identical disks, (near-)tangencies, and intersection points lying
/// within eps of a third boundary. Empty result means safe to proceed.
std::vector<Degeneracy> validate_disks(const DiskSet& ds);

/// Faces of the boundary drawing. Adjacent faces share a boundary arc that is
/// not a single point; their containing-disk sets differ in exactly one disk.
struct Arrangement {
    struct Face {
        std::vector<int> depth;  // sorted indices of disks containing the face
        double sample_x = 0, sample_y = 0;
        std::vector<int> arcs;   // boundary arc ids
    };
    struct Arc {
        int circle;       // owning disk index
        int face_inside;  // face on the disk-interior side
        int face_outside;
        bool full_circle;  // intersection-free circle (not counted as a drawing arc)
    };
    std::vector<Face> faces;
    std::vector<Arc> arcs;
    std::vector<std::pair<int, int>> adjacency;  // sorted unique face pairs
    int outer_face = 0;
    std::vector<std::vector<int>> faces_of_disk;

    // drawing statistics, for the Euler relation
    int crossing_points = 0;
    int real_arcs = 0;
    int drawing_components = 0;

    std::vector<std::vector<int>> face_adjacency_lists() const;
};

/// Builds faces, adjacency and depth sets. Depth sets come from toggle
/// propagation from the outer face and are cross-checked against point-in-disk
/// tests at every face's sample point. Throws DegenerateInput when a
/// predicate lands within eps of a tie.
Arrangement build_arrangement(const DiskSet& ds);

struct ArrangementStats {
    int ply = 0;
    std::optional<int> local_radius;  // empty means infinite
};
ArrangementStats arrangement_stats(const Arrangement& arr);

/// Vertex per disk, edge iff the disks intersect.
Graph intersection_graph(const DiskSet& ds);

/// Face blow-up: each face becomes a clique of its depth (one vertex for
/// depth-0 faces); cliques of adjacent faces are completely joined.
struct BlowUp {
    Graph graph;
    std::vector<std::vector<int>> clique_of;  // per face
};
BlowUp blow_up(const Arrangement& arr);

/// Branch sets in the blow-up graph: per disk, one fresh clique vertex for
/// every face inside the disk. Validated against all four depth-bounded
/// minor-model conditions before returning; throws ModelInvalid otherwise.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;  // per intersection-graph vertex
    int depth = 0;
};
MinorModel minor_model(const DiskSet& ds, const Arrangement& arr, const BlowUp& bu);

/// Layering of the intersection graph: raw level = 1 + BFS distance of the
/// shallowest face inside the disk, coarsened by blocks of 4*rho+1. The raw
/// gap across any intersection edge is at most 4*rho.
struct DiskLayering {
    Layering layering;
    std::vector<int> raw_level;  // per disk
    int rho = 0;
    int block = 1;  // 4*rho + 1
};
DiskLayering disk_layering(const DiskSet& ds, const Arrangement& arr);

}  // namespace subfree

#endif
