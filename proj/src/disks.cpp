#include "disks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace subfree {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

double norm_angle(double a) {
    while (a < 0) a += kTau;
    while (a >= kTau) a -= kTau;
    return a;
}
}  // namespace

Rat parse_decimal(const std::string& text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    long long num = 0, den = 1;
    bool digits = false, dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (dot) throw Error(Err::parse, "bad decimal: " + text);
            dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error(Err::parse, "bad decimal: " + text);
        if (num > (1LL << 56)) throw Error(Err::too_large, "decimal too long: " + text);
        num = num * 10 + (c - '0');
        if (dot) den *= 10;
        digits = true;
    }
    if (!digits) throw Error(Err::parse, "bad decimal: " + text);
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat{neg ? -num : num, den};
}

DiskSet make_disk_set(std::vector<Disk> disks, double eps) {
    if (eps <= 0) throw Error(Err::invalid_input, "epsilon must be positive");
    DiskSet ds;
    ds.eps = eps;
    for (auto& d : disks) {
        d.cx = d.x.value();
        d.cy = d.y.value();
        d.cr = d.r.value();
        if (d.cr <= 0) throw Error(Err::invalid_input, "disk radius must be positive");
    }
    ds.disks = std::move(disks);
    return ds;
}

namespace {

struct Pt {
    double x, y;
};

// both intersection points of two properly crossing circles
bool circle_intersections(const Disk& a, const Disk& b, Pt* p1, Pt* p2) {
    double dx = b.cx - a.cx, dy = b.cy - a.cy;
    double d = std::hypot(dx, dy);
    if (d >= a.cr + b.cr || d <= std::fabs(a.cr - b.cr)) return false;
    double l = (d * d + a.cr * a.cr - b.cr * b.cr) / (2 * d);
    double h2 = a.cr * a.cr - l * l;
    double h = h2 > 0 ? std::sqrt(h2) : 0;
    double ux = dx / d, uy = dy / d;
    p1->x = a.cx + l * ux - h * uy;
    p1->y = a.cy + l * uy + h * ux;
    p2->x = a.cx + l * ux + h * uy;
    p2->y = a.cy + l * uy - h * ux;
    return true;
}

}  // namespace

std::vector<Degeneracy> validate_disks(const DiskSet& ds) {
    std::vector<Degeneracy> out;
    int n = static_cast<int>(ds.disks.size());
    double eps = ds.eps;
    auto name = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Disk &a = ds.disks[i], &b = ds.disks[j];
            if ((a.x == b.x && a.y == b.y && a.r == b.r) ||
                (std::fabs(a.cx - b.cx) <= eps && std::fabs(a.cy - b.cy) <= eps &&
                 std::fabs(a.cr - b.cr) <= eps)) {
                out.push_back({"identical", "disks " + name(i, j)});
                continue;
            }
            double d = std::hypot(b.cx - a.cx, b.cy - a.cy);
            if (std::fabs(d - (a.cr + b.cr)) <= eps)
                out.push_back({"tangency", "external tangency of disks " + name(i, j)});
            if (std::fabs(d - std::fabs(a.cr - b.cr)) <= eps)
                out.push_back({"tangency", "internal tangency of disks " + name(i, j)});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Pt p1, p2;
            if (!circle_intersections(ds.disks[i], ds.disks[j], &p1, &p2)) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                for (const Pt& p : {p1, p2}) {
                    double dk = std::hypot(p.x - ds.disks[k].cx, p.y - ds.disks[k].cy);
                    if (std::fabs(dk - ds.disks[k].cr) <= eps)
                        out.push_back({"triple-point",
                                       "intersection of " + name(i, j) + " lies on boundary of disk " +
                                           std::to_string(k)});
                }
            }
        }
    return out;
}

namespace {

struct HalfEdge {
    int arc;
    bool ccw;
    int from, to;      // vertex ids
    double out_angle;  // tangent direction at `from`
    int cycle = -1;
};

struct ArcInfo {
    int circle;
    int v_from = -1, v_to = -1;  // endpoints in ccw order
    double a_from = 0, a_to = 0;
    bool full = false;
    int he_ccw = -1, he_cw = -1;
};

// Planar subdivision of the circle boundaries: crossing points, arcs,
// half-edges, and the boundary cycles traced with the face on the left.
struct Tracer {
    const DiskSet& ds;
    double eps;
    std::vector<Pt> verts;
    std::vector<ArcInfo> arcs;
    std::vector<HalfEdge> hes;
    std::vector<std::vector<int>> out_at;
    std::vector<int> circle_comp;
    std::vector<int> inside_loop_cycle, outside_loop_cycle;  // per free circle
    std::vector<double> cycle_area;
    std::vector<std::vector<int>> cycle_hes;
    std::vector<std::vector<int>> cycle_arc_ids;

    explicit Tracer(const DiskSet& ds_) : ds(ds_), eps(ds_.eps) {}

    double angle_on(int circle, const Pt& p) const {
        const Disk& d = ds.disks[circle];
        return norm_angle(std::atan2(p.y - d.cy, p.x - d.cx));
    }

    Pt point_at(int circle, double ang) const {
        const Disk& d = ds.disks[circle];
        return {d.cx + d.cr * std::cos(ang), d.cy + d.cr * std::sin(ang)};
    }

    int new_cycle(std::vector<int> hes_list, double area) {
        cycle_hes.push_back(std::move(hes_list));
        cycle_area.push_back(area);
        cycle_arc_ids.emplace_back();
        return static_cast<int>(cycle_hes.size()) - 1;
    }

    int twin(int h) const {
        const auto& a = arcs[hes[h].arc];
        return hes[h].ccw ? a.he_cw : a.he_ccw;
    }

    // at the head of h, take the clockwise neighbor of the reversed edge
    int next(int h) const {
        int v = hes[h].to;
        int tw = twin(h);
        const auto& outs = out_at[v];
        size_t idx = std::find(outs.begin(), outs.end(), tw) - outs.begin();
        return outs[(idx + outs.size() - 1) % outs.size()];
    }

    double area_of(int h) const {
        const auto& a = arcs[hes[h].arc];
        const Disk& d = ds.disks[a.circle];
        Pt pf = verts[hes[h].from], pt = verts[hes[h].to];
        double span = norm_angle(a.a_to - a.a_from);
        double dth = hes[h].ccw ? span : -span;
        double chord = 0.5 * (d.cx * (pt.y - pf.y) - d.cy * (pt.x - pf.x));
        return chord + 0.5 * d.cr * d.cr * dth;
    }

    void build() {
        int n = static_cast<int>(ds.disks.size());
        std::vector<std::vector<std::pair<double, int>>> on_circle(n);
        UnionFind comps(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Pt p1, p2;
                if (!circle_intersections(ds.disks[i], ds.disks[j], &p1, &p2)) continue;
                comps.unite(i, j);
                for (const Pt& p : {p1, p2}) {
                    int v = static_cast<int>(verts.size());
                    verts.push_back(p);
                    on_circle[i].push_back({angle_on(i, p), v});
                    on_circle[j].push_back({angle_on(j, p), v});
                }
            }
        circle_comp.assign(n, -1);
        for (int i = 0; i < n; ++i) circle_comp[i] = comps.find(i);

        out_at.assign(verts.size(), {});
        for (int c = 0; c < n; ++c) {
            auto& pts = on_circle[c];
            if (pts.empty()) continue;
            std::sort(pts.begin(), pts.end());
            double ang_eps = eps / ds.disks[c].cr;
            for (size_t s = 0; s < pts.size(); ++s) {
                double gap = (s + 1 < pts.size()) ? pts[s + 1].first - pts[s].first
                                                  : pts[0].first + kTau - pts[s].first;
                if (gap <= ang_eps)
                    throw Error(Err::degenerate_input, "coincident crossings on a circle boundary");
            }
            for (size_t s = 0; s < pts.size(); ++s) {
                size_t t = (s + 1) % pts.size();
                ArcInfo a;
                a.circle = c;
                a.v_from = pts[s].second;
                a.v_to = pts[t].second;
                a.a_from = pts[s].first;
                a.a_to = pts[t].first;
                int id = static_cast<int>(arcs.size());
                a.he_ccw = static_cast<int>(hes.size());
                hes.push_back({id, true, a.v_from, a.v_to, norm_angle(a.a_from + kTau / 4), -1});
                a.he_cw = static_cast<int>(hes.size());
                hes.push_back({id, false, a.v_to, a.v_from, norm_angle(a.a_to - kTau / 4), -1});
                arcs.push_back(a);
                out_at[a.v_from].push_back(a.he_ccw);
                out_at[a.v_to].push_back(a.he_cw);
            }
        }
        for (auto& outs : out_at) {
            std::sort(outs.begin(), outs.end(),
                      [&](int a, int b) { return hes[a].out_angle < hes[b].out_angle; });
            for (size_t s = 0; s + 1 < outs.size(); ++s)
                if (hes[outs[s + 1]].out_angle - hes[outs[s]].out_angle <= eps)
                    throw Error(Err::degenerate_input, "ambiguous tangent order at a crossing");
        }

        for (int h0 = 0; h0 < static_cast<int>(hes.size()); ++h0) {
            if (hes[h0].cycle != -1) continue;
            std::vector<int> walk;
            double area = 0;
            int h = h0;
            do {
                walk.push_back(h);
                area += area_of(h);
                h = next(h);
            } while (h != h0);
            int c = new_cycle(walk, area);
            for (int x : cycle_hes[c]) {
                hes[x].cycle = c;
                cycle_arc_ids[c].push_back(hes[x].arc);
            }
        }

        inside_loop_cycle.assign(n, -1);
        outside_loop_cycle.assign(n, -1);
        for (int c = 0; c < n; ++c) {
            if (!on_circle[c].empty()) continue;
            ArcInfo a;
            a.circle = c;
            a.full = true;
            int id = static_cast<int>(arcs.size());
            arcs.push_back(a);
            double area = ds.disks[c].cr * ds.disks[c].cr * (kTau / 2);
            inside_loop_cycle[c] = new_cycle({}, area);
            cycle_arc_ids.back() = {id};
            outside_loop_cycle[c] = new_cycle({}, -area);
            cycle_arc_ids.back() = {id};
        }
    }
};

struct RayHit {
    int circle;
    Pt point;
    double dist;
    bool from_inside;  // ray origin lies strictly inside the hit disk
};

// One ray attempt. Returns false when any predicate lands within eps of a
// tie; *hit stays empty when the ray escapes every allowed circle.
bool cast_ray_once(const DiskSet& ds, Pt origin, double ang, const std::vector<char>& allowed,
                   int skip_circle, std::optional<RayHit>* hit) {
    double eps = ds.eps;
    double dx = std::cos(ang), dy = std::sin(ang);
    hit->reset();
    for (size_t k = 0; k < ds.disks.size(); ++k) {
        if (!allowed[k]) continue;
        const Disk& d = ds.disks[k];
        double ox = d.cx - origin.x, oy = d.cy - origin.y;
        double beta = ox * dx + oy * dy;
        double gamma = ox * ox + oy * oy - d.cr * d.cr;
        double disc = beta * beta - gamma;
        if (disc <= 0) {
            if (disc > -eps * d.cr) return false;  // grazing
            continue;
        }
        double root = std::sqrt(disc);
        if (root <= eps) return false;  // near-tangent crossing
        for (double s : {beta - root, beta + root}) {
            if (s <= eps) {
                // the origin itself when it sits on its own circle; anything
                // else this close to a boundary is a tie
                if (s > -eps && static_cast<int>(k) != skip_circle) return false;
                continue;
            }
            if (!*hit || s < (*hit)->dist) {
                if (static_cast<int>(k) != skip_circle && std::fabs(gamma) < eps * d.cr) return false;
                Pt p{origin.x + s * dx, origin.y + s * dy};
                *hit = RayHit{static_cast<int>(k), p, s, gamma < 0};
            }
        }
    }
    return true;
}

double attempt_angle(double base, int attempt) {
    // 0, +d, -d, +2d, -2d, ... staying within about fifty degrees of base
    int step = (attempt + 1) / 2;
    double offset = 0.0437 * step * (attempt % 2 == 1 ? 1 : -1);
    return base + offset;
}

}  // namespace

std::vector<std::vector<int>> Arrangement::face_adjacency_lists() const {
    std::vector<std::vector<int>> adj(faces.size());
    for (auto [a, b] : adjacency) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

Arrangement build_arrangement(const DiskSet& ds) {
    auto degs = validate_disks(ds);
    if (!degs.empty()) throw Error(Err::degenerate_input, degs[0].kind + ": " + degs[0].detail);

    Arrangement arr;
    int n = static_cast<int>(ds.disks.size());
    if (n == 0) {
        arr.faces.push_back({});
        arr.outer_face = 0;
        return arr;
    }

    Tracer tr(ds);
    tr.build();
    int num_cycles = static_cast<int>(tr.cycle_hes.size());

    // Locate the boundary cycle whose face contains the open segment just
    // beyond `origin` in direction `base`: nearest allowed crossing, known
    // side. Empty when the ray escapes.
    auto locate_cycle = [&](Pt origin, double base, const std::vector<char>& allowed,
                            int skip_circle) -> std::optional<int> {
        for (int attempt = 0; attempt < 40; ++attempt) {
            double ang = attempt_angle(base, attempt);
            std::optional<RayHit> hit;
            if (!cast_ray_once(ds, origin, ang, allowed, skip_circle, &hit)) continue;
            if (!hit) return std::nullopt;
            int circle = hit->circle;
            if (tr.inside_loop_cycle[circle] != -1)
                return hit->from_inside ? tr.inside_loop_cycle[circle]
                                        : tr.outside_loop_cycle[circle];
            double hang = tr.angle_on(circle, hit->point);
            double ang_eps = ds.eps / ds.disks[circle].cr;
            int found = -1;
            for (int a = 0; a < static_cast<int>(tr.arcs.size()); ++a) {
                const auto& arc = tr.arcs[a];
                if (arc.circle != circle || arc.full) continue;
                double span = norm_angle(arc.a_to - arc.a_from);
                double off = norm_angle(hang - arc.a_from);
                if (off > ang_eps && off < span - ang_eps) {
                    found = a;
                    break;
                }
            }
            if (found == -1) continue;  // endpoint ambiguity: rotate and retry
            int he = hit->from_inside ? tr.arcs[found].he_ccw : tr.arcs[found].he_cw;
            return tr.hes[he].cycle;
        }
        throw Error(Err::degenerate_input, "could not cast a clean location ray");
    };

    // group cycles into faces; slot num_cycles is the unbounded face
    UnionFind groups(num_cycles + 1);
    std::set<int> comp_roots(tr.circle_comp.begin(), tr.circle_comp.end());
    for (int root : comp_roots) {
        double best_top = -1e300;
        Pt top{0, 0};
        for (int c = 0; c < n; ++c) {
            if (tr.circle_comp[c] != root) continue;
            double t = ds.disks[c].cy + ds.disks[c].cr;
            if (t > best_top) {
                best_top = t;
                top = {ds.disks[c].cx, t};
            }
        }
        std::vector<char> allowed(n, 1);
        for (int c = 0; c < n; ++c)
            if (tr.circle_comp[c] == root) allowed[c] = 0;
        auto owner = locate_cycle(top, kTau / 4, allowed, -1);

        int neg = -1;
        for (int cyc = 0; cyc < num_cycles; ++cyc) {
            bool mine = false;
            for (int a : tr.cycle_arc_ids[cyc])
                if (tr.circle_comp[tr.arcs[a].circle] == root) mine = true;
            if (mine && tr.cycle_area[cyc] < 0) {
                if (neg != -1) throw Error(Err::internal, "component with two outward cycles");
                neg = cyc;
            }
        }
        if (neg == -1) throw Error(Err::internal, "component without an outward cycle");
        groups.unite(neg, owner ? *owner : num_cycles);
    }

    std::vector<int> face_of_group(num_cycles + 1, -1);
    auto face_for = [&](int group) {
        group = groups.find(group);
        if (face_of_group[group] == -1) {
            face_of_group[group] = static_cast<int>(arr.faces.size());
            arr.faces.push_back({});
        }
        return face_of_group[group];
    };
    arr.outer_face = face_for(num_cycles);
    std::vector<int> cycle_face(num_cycles);
    for (int cyc = 0; cyc < num_cycles; ++cyc) cycle_face[cyc] = face_for(cyc);

    for (const auto& a : tr.arcs) {
        Arrangement::Arc out;
        out.circle = a.circle;
        out.full_circle = a.full;
        if (a.full) {
            out.face_inside = cycle_face[tr.inside_loop_cycle[a.circle]];
            out.face_outside = cycle_face[tr.outside_loop_cycle[a.circle]];
        } else {
            out.face_inside = cycle_face[tr.hes[a.he_ccw].cycle];
            out.face_outside = cycle_face[tr.hes[a.he_cw].cycle];
        }
        if (out.face_inside == out.face_outside)
            throw Error(Err::internal, "arc with one face on both sides");
        int id = static_cast<int>(arr.arcs.size());
        arr.arcs.push_back(out);
        arr.faces[out.face_inside].arcs.push_back(id);
        arr.faces[out.face_outside].arcs.push_back(id);
    }
    std::set<std::pair<int, int>> adj;
    for (const auto& a : arr.arcs)
        adj.insert({std::min(a.face_inside, a.face_outside), std::max(a.face_inside, a.face_outside)});
    arr.adjacency.assign(adj.begin(), adj.end());

    // sample point: march inward from an arc midpoint, half-way to the next
    // boundary in that direction
    std::vector<char> all_allowed(n, 1);
    for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f) {
        if (f == arr.outer_face) continue;
        auto& face = arr.faces[f];
        bool placed = false;
        for (int aid : face.arcs) {
            const auto& ta = tr.arcs[aid];
            double mid = ta.full ? 0.0 : norm_angle(ta.a_from + norm_angle(ta.a_to - ta.a_from) / 2);
            Pt m = tr.point_at(ta.circle, mid);
            bool inward = (arr.arcs[aid].face_inside == f);
            double base = inward ? mid + kTau / 2 : mid;
            for (int attempt = 0; attempt < 24 && !placed; ++attempt) {
                double ang = attempt_angle(base, attempt);
                std::optional<RayHit> hit;
                if (!cast_ray_once(ds, m, ang, all_allowed, ta.circle, &hit)) continue;
                double step = hit ? hit->dist / 2 : ds.disks[ta.circle].cr / 2;
                face.sample_x = m.x + step * std::cos(ang);
                face.sample_y = m.y + step * std::sin(ang);
                placed = true;
            }
            if (placed) break;
        }
        if (!placed) throw Error(Err::degenerate_input, "could not place a face sample point");
    }
    {
        double mx = -1e300, my = -1e300;
        for (const auto& d : ds.disks) {
            mx = std::max(mx, d.cx + d.cr);
            my = std::max(my, d.cy + d.cr);
        }
        arr.faces[arr.outer_face].sample_x = mx + 1;
        arr.faces[arr.outer_face].sample_y = my + 1;
    }

    // depth sets: crossing an arc toggles its circle, seeded empty outside
    std::vector<std::set<int>> depth(arr.faces.size());
    std::vector<char> seen(arr.faces.size(), 0);
    std::vector<std::vector<std::pair<int, int>>> cross(arr.faces.size());
    for (const auto& a : arr.arcs) {
        cross[a.face_inside].push_back({a.face_outside, a.circle});
        cross[a.face_outside].push_back({a.face_inside, a.circle});
    }
    seen[arr.outer_face] = 1;
    std::deque<int> queue{arr.outer_face};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (auto [g, circle] : cross[f]) {
            std::set<int> want = depth[f];
            if (!want.erase(circle)) want.insert(circle);
            if (!seen[g]) {
                seen[g] = 1;
                depth[g] = std::move(want);
                queue.push_back(g);
            } else if (depth[g] != want) {
                throw Error(Err::internal, "inconsistent depth toggles");
            }
        }
    }
    for (char s : seen)
        if (!s) throw Error(Err::internal, "face unreachable from the outer face");

    for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f) {
        arr.faces[f].depth.assign(depth[f].begin(), depth[f].end());
        std::vector<int> by_sample;
        for (int k = 0; k < n; ++k) {
            double dd = std::hypot(arr.faces[f].sample_x - ds.disks[k].cx,
                                   arr.faces[f].sample_y - ds.disks[k].cy);
            if (std::fabs(dd - ds.disks[k].cr) <= ds.eps)
                throw Error(Err::degenerate_input, "sample point too close to a boundary");
            if (dd < ds.disks[k].cr) by_sample.push_back(k);
        }
        if (by_sample != arr.faces[f].depth)
            throw Error(Err::internal, "depth toggles disagree with sample containment");
    }
    if (!arr.faces[arr.outer_face].depth.empty())
        throw Error(Err::internal, "outer face has nonempty depth");

    arr.faces_of_disk.assign(n, {});
    for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f)
        for (int k : arr.faces[f].depth) arr.faces_of_disk[k].push_back(f);
    for (const auto& fl : arr.faces_of_disk)
        if (fl.empty()) throw Error(Err::internal, "disk without an interior face");

    arr.crossing_points = static_cast<int>(tr.verts.size());
    for (const auto& a : arr.arcs)
        if (!a.full_circle) ++arr.real_arcs;
    arr.drawing_components = static_cast<int>(comp_roots.size());

    if (arr.crossing_points - arr.real_arcs + static_cast<int>(arr.faces.size()) !=
        1 + arr.drawing_components)
        throw Error(Err::internal, "Euler relation violated");
    return arr;
}

ArrangementStats arrangement_stats(const Arrangement& arr) {
    ArrangementStats st;
    for (const auto& f : arr.faces) st.ply = std::max(st.ply, static_cast<int>(f.depth.size()));
    auto adj = arr.face_adjacency_lists();
    int worst = 0;
    st.local_radius = 0;
    for (const auto& faces : arr.faces_of_disk) {
        std::set<int> inside(faces.begin(), faces.end());
        int best_ecc = -1;
        for (int src : faces) {
            std::vector<int> dist(arr.faces.size(), -1);
            std::deque<int> q{src};
            dist[src] = 0;
            int ecc = 0, reached = 1;
            while (!q.empty()) {
                int f = q.front();
                q.pop_front();
                for (int g : adj[f]) {
                    if (!inside.count(g) || dist[g] != -1) continue;
                    dist[g] = dist[f] + 1;
                    ecc = std::max(ecc, dist[g]);
                    ++reached;
                    q.push_back(g);
                }
            }
            if (reached != static_cast<int>(faces.size())) {
                st.local_radius.reset();
                return st;
            }
            if (best_ecc == -1 || ecc < best_ecc) best_ecc = ecc;
        }
        worst = std::max(worst, best_ecc);
    }
    st.local_radius = worst;
    return st;
}

Graph intersection_graph(const DiskSet& ds) {
    int n = static_cast<int>(ds.disks.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = std::hypot(ds.disks[j].cx - ds.disks[i].cx,
                                  ds.disks[j].cy - ds.disks[i].cy);
            if (d < ds.disks[i].cr + ds.disks[j].cr) edges.push_back({i, j});
        }
    return build_graph(n, edges);
}

BlowUp blow_up(const Arrangement& arr) {
    BlowUp bu;
    int total = 0;
    for (const auto& f : arr.faces) {
        int size = std::max<int>(1, static_cast<int>(f.depth.size()));
        std::vector<int> clique(size);
        std::iota(clique.begin(), clique.end(), total);
        total += size;
        bu.clique_of.push_back(std::move(clique));
    }
    std::vector<Edge> edges;
    for (const auto& c : bu.clique_of)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) edges.push_back({c[i], c[j]});
    for (auto [f, g] : arr.adjacency)
        for (int a : bu.clique_of[f])
            for (int b : bu.clique_of[g]) edges.push_back(make_edge(a, b));
    bu.graph = build_graph(total, edges);
    return bu;
}

MinorModel minor_model(const DiskSet& ds, const Arrangement& arr, const BlowUp& bu) {
    auto st = arrangement_stats(arr);
    if (!st.local_radius)
        throw Error(Err::model_invalid, "local radius is infinite; no bounded-depth model");
    MinorModel mm;
    mm.depth = *st.local_radius;
    int n = static_cast<int>(ds.disks.size());
    std::vector<size_t> used(arr.faces.size(), 0);
    mm.branch_sets.assign(n, {});
    for (int v = 0; v < n; ++v) {
        for (int f : arr.faces_of_disk[v]) {
            if (used[f] >= bu.clique_of[f].size())
                throw Error(Err::model_invalid, "clique of face exhausted");
            mm.branch_sets[v].push_back(bu.clique_of[f][used[f]++]);
        }
        std::sort(mm.branch_sets[v].begin(), mm.branch_sets[v].end());
    }

    // (i) pairwise disjoint
    std::set<int> all;
    for (const auto& bs : mm.branch_sets)
        for (int x : bs)
            if (!all.insert(x).second) throw Error(Err::model_invalid, "branch sets overlap");
    // (ii) connected and (iv) radius <= depth
    for (const auto& bs : mm.branch_sets) {
        if (bs.empty()) throw Error(Err::model_invalid, "empty branch set");
        std::set<int> inside(bs.begin(), bs.end());
        int best_ecc = -1;
        for (int src : bs) {
            std::vector<int> dist(bu.graph.n, -1);
            std::deque<int> q{src};
            dist[src] = 0;
            int ecc = 0, reached = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y : bu.graph.adj[x]) {
                    if (!inside.count(y) || dist[y] != -1) continue;
                    dist[y] = dist[x] + 1;
                    ecc = std::max(ecc, dist[y]);
                    ++reached;
                    q.push_back(y);
                }
            }
            if (reached != static_cast<int>(bs.size()))
                throw Error(Err::model_invalid, "branch set disconnected");
            if (best_ecc == -1 || ecc < best_ecc) best_ecc = ecc;
        }
        if (best_ecc > mm.depth) throw Error(Err::model_invalid, "branch set radius too large");
    }
    // (iii) every intersection edge has a realizing blow-up edge
    Graph ig = intersection_graph(ds);
    for (auto [u, v] : ig.edges) {
        bool found = false;
        for (int a : mm.branch_sets[u]) {
            for (int b : mm.branch_sets[v])
                if (bu.graph.has_edge(a, b)) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) throw Error(Err::model_invalid, "intersection edge not realized");
    }
    return mm;
}

DiskLayering disk_layering(const DiskSet& ds, const Arrangement& arr) {
    auto st = arrangement_stats(arr);
    if (!st.local_radius)
        throw Error(Err::invalid_input, "local radius is infinite; layering refused");
    DiskLayering dl;
    dl.rho = *st.local_radius;
    dl.block = 4 * dl.rho + 1;

    auto adj = arr.face_adjacency_lists();
    std::vector<int> dist(arr.faces.size(), -1);
    std::deque<int> q{arr.outer_face};
    dist[arr.outer_face] = 0;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int g : adj[f])
            if (dist[g] == -1) {
                dist[g] = dist[f] + 1;
                q.push_back(g);
            }
    }
    int n = static_cast<int>(ds.disks.size());
    dl.raw_level.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (int f : arr.faces_of_disk[v]) {
            if (dist[f] == -1) throw Error(Err::internal, "face unreachable from the outer face");
            if (best == -1 || dist[f] + 1 < best) best = dist[f] + 1;
        }
        dl.raw_level[v] = best;
    }
    dl.layering.layer_of.assign(n, 0);
    dl.layering.num_layers = 0;
    for (int v = 0; v < n; ++v) {
        dl.layering.layer_of[v] = (dl.raw_level[v] - 1) / dl.block + 1;
        dl.layering.num_layers = std::max(dl.layering.num_layers, dl.layering.layer_of[v]);
    }
    validate_layering(intersection_graph(ds), dl.layering);
    return dl;
}

}  // namespace subfree
