#pragma once

#include <memory>
#include <vector>

#include "gctqft/cellular.hpp"
#include "gctqft/groupcat.hpp"

namespace gctqft {
namespace corpus {

/// One point.
inline CWComplex point()
{
    CWComplex x("point", {{"v"}}, {IntegerMatrix(0, 1)});
    x.add_subcomplex("pt", {"v"});
    return x;
}

/// The interval: v0 --e--> v1, with its endpoint subcomplexes.
inline CWComplex interval()
{
    IntegerMatrix d1(2, 1);
    d1.at(0, 0) = -1; // v0
    d1.at(1, 0) = 1;  // v1
    CWComplex x("interval", {{"v0", "v1"}, {"e"}}, {IntegerMatrix(0, 2), d1});
    x.add_subcomplex("dI", {"v0", "v1"});
    x.add_subcomplex("left", {"v0"});
    x.add_subcomplex("right", {"v1"});
    x.add_subcomplex("I", {"v0", "v1", "e"});
    return x;
}

/// Circle with one vertex and one loop.
inline CWComplex circle()
{
    CWComplex x("circle", {{"v"}, {"e"}}, {IntegerMatrix(0, 1), IntegerMatrix(1, 1)});
    x.add_subcomplex("pt", {"v"});
    return x;
}

/// Circle as two arcs p -> q (upper and lower).
inline CWComplex circle_two_arcs()
{
    IntegerMatrix d1(2, 2);
    d1.at(0, 0) = -1;
    d1.at(1, 0) = 1; // up: p -> q
    d1.at(0, 1) = -1;
    d1.at(1, 1) = 1; // dn: p -> q
    CWComplex x("circle2", {{"p", "q"}, {"up", "dn"}}, {IntegerMatrix(0, 2), d1});
    x.add_subcomplex("upper", {"p", "q", "up"});
    x.add_subcomplex("lower", {"p", "q", "dn"});
    x.add_subcomplex("pts", {"p", "q"});
    x.add_subcomplex("pt", {"p"});
    return x;
}

/// Disk: one vertex, one loop, one face attached along the loop.
inline CWComplex disk()
{
    IntegerMatrix d2(1, 1);
    d2.at(0, 0) = 1; // dF = e
    CWComplex x("disk", {{"v"}, {"e"}, {"F"}}, {IntegerMatrix(0, 1), IntegerMatrix(1, 1), d2});
    x.add_subcomplex("circle", {"v", "e"});
    x.add_subcomplex("pt", {"v"});
    return x;
}

/// Disk whose boundary circle is split into two arcs p -> q; the face is
/// attached along up - dn. Used for boundary-decomposition checks where the
/// relative fundamental class must hit an arc's class.
inline CWComplex disk_two_arcs()
{
    IntegerMatrix d1(2, 2);
    d1.at(0, 0) = -1;
    d1.at(1, 0) = 1; // up: p -> q
    d1.at(0, 1) = -1;
    d1.at(1, 1) = 1; // dn: p -> q
    IntegerMatrix d2(2, 1);
    d2.at(0, 0) = 1;  // up
    d2.at(1, 0) = -1; // dn
    CWComplex x("disk2", {{"p", "q"}, {"up", "dn"}, {"F"}}, {IntegerMatrix(0, 2), d1, d2});
    x.add_subcomplex("upper", {"p", "q", "up"});
    x.add_subcomplex("lower", {"p", "q", "dn"});
    x.add_subcomplex("pts", {"p", "q"});
    x.add_subcomplex("boundary", {"p", "q", "up", "dn"});
    return x;
}

/// Two annuli stacked into one: the n = 0 surface composition.
inline CWComplex stacked_annuli()
{
    // vertices v0 v1 v2; loops e0 e1 e2; verticals c1: v0->v1, c2: v1->v2
    IntegerMatrix d1(3, 5);
    d1.at(0, 3) = -1;
    d1.at(1, 3) = 1; // c1
    d1.at(1, 4) = -1;
    d1.at(2, 4) = 1; // c2
    IntegerMatrix d2(5, 2);
    d2.at(0, 0) = 1;
    d2.at(1, 0) = -1; // F1 = e0 - e1
    d2.at(1, 1) = 1;
    d2.at(2, 1) = -1; // F2 = e1 - e2
    CWComplex x("stacked_annuli", {{"v0", "v1", "v2"}, {"e0", "e1", "e2", "c1", "c2"}, {"F1", "F2"}},
                {IntegerMatrix(0, 3), d1, d2});
    x.add_subcomplex("s0", {"v0", "e0"});
    x.add_subcomplex("s1", {"v1", "e1"});
    x.add_subcomplex("s2", {"v2", "e2"});
    x.add_subcomplex("x1", {"v0", "v1", "e0", "e1", "c1", "F1"});
    x.add_subcomplex("x2", {"v1", "v2", "e1", "e2", "c2", "F2"});
    return x;
}

/// Minimal sphere: a vertex and a 2-cell.
inline CWComplex sphere()
{
    CWComplex x("sphere", {{"v"}, {}, {"F"}}, {IntegerMatrix(0, 1), IntegerMatrix(1, 0), IntegerMatrix(0, 1)});
    x.add_subcomplex("pt", {"v"});
    return x;
}

/// Sphere as two hemispheres glued along an equatorial circle.
inline CWComplex sphere_two_disks()
{
    IntegerMatrix d2(1, 2);
    d2.at(0, 0) = 1;  // upper: dFu = e
    d2.at(0, 1) = -1; // lower: dFd = -e
    CWComplex x("sphere2", {{"v"}, {"e"}, {"Fu", "Fd"}}, {IntegerMatrix(0, 1), IntegerMatrix(1, 1), d2});
    x.add_subcomplex("equator", {"v", "e"});
    x.add_subcomplex("upper_disk", {"v", "e", "Fu"});
    x.add_subcomplex("lower_disk", {"v", "e", "Fd"});
    return x;
}

/// Standard torus: one vertex, loops a and b, one face with trivial boundary.
inline CWComplex torus()
{
    CWComplex x("torus", {{"v"}, {"a", "b"}, {"F"}},
                {IntegerMatrix(0, 1), IntegerMatrix(1, 2), IntegerMatrix(2, 1)});
    x.add_subcomplex("wedge", {"v", "a", "b"});
    x.add_subcomplex("circle_a", {"v", "a"});
    x.add_subcomplex("pt", {"v"});
    return x;
}

/// Cone on three points: edges e_i from the cone point c to the feet p_i.
inline CWComplex cone3()
{
    IntegerMatrix d1(4, 3);
    for (Int i = 0; i < 3; ++i) {
        d1.at(0, i) = -1;     // c
        d1.at(i + 1, i) = 1;  // p_i
    }
    CWComplex x("c3", {{"c", "p1", "p2", "p3"}, {"e1", "e2", "e3"}}, {IntegerMatrix(0, 4), d1});
    x.add_subcomplex("feet", {"p1", "p2", "p3"});
    x.add_subcomplex("foot1", {"p1"});
    x.add_subcomplex("foot2", {"p2"});
    x.add_subcomplex("foot3", {"p3"});
    x.add_subcomplex("feet12", {"p1", "p2"});
    x.add_subcomplex("cone_pt", {"c"});
    return x;
}

/// The square I x I as the identity bordism (I, dI) -> (I, dI) rel its side
/// walls: y0 = bottom + sides, y1 = top + sides, w = sides.
inline CWComplex square()
{
    // edges: b: v00->v10, t: v01->v11, l: v00->v01, r: v10->v11
    IntegerMatrix d1(4, 4);
    auto set_edge = [&](Int col, Int from, Int to) {
        d1.at(from, col) = -1;
        d1.at(to, col) = 1;
    };
    set_edge(0, 0, 1); // b
    set_edge(1, 2, 3); // t
    set_edge(2, 0, 2); // l
    set_edge(3, 1, 3); // r
    IntegerMatrix d2(4, 1);
    d2.at(0, 0) = 1;  // b
    d2.at(1, 0) = -1; // t
    d2.at(2, 0) = -1; // l
    d2.at(3, 0) = 1;  // r
    CWComplex x("square", {{"v00", "v10", "v01", "v11"}, {"b", "t", "l", "r"}, {"F"}},
                {IntegerMatrix(0, 4), d1, d2});
    x.add_subcomplex("y0", {"b", "l", "r", "v00", "v10", "v01", "v11"});
    x.add_subcomplex("y1", {"t", "l", "r", "v00", "v10", "v01", "v11"});
    x.add_subcomplex("w", {"l", "r", "v00", "v10", "v01", "v11"});
    x.add_subcomplex("bottom", {"v00", "v10", "b"});
    x.add_subcomplex("top", {"v01", "v11", "t"});
    return x;
}

/// The corner-algebra multiplication bordism for a point corner: two marked
/// intervals on the bottom flowing into one on top. The mid edge m is
/// interior; the mid-bottom vertex v10 is a corner point shared by the two
/// incoming intervals.
inline CWComplex mult_square()
{
    // vertices: v00 v10 v20 (bottom), v01 v11 v21 (top)
    // edges: b1: v00->v10, b2: v10->v20, t1: v01->v11, t2: v11->v21,
    //        l: v00->v01, m: v10->v11, r: v20->v21
    IntegerMatrix d1(6, 7);
    auto set_edge = [&](Int col, Int from, Int to) {
        d1.at(from, col) = -1;
        d1.at(to, col) = 1;
    };
    set_edge(0, 0, 1); // b1
    set_edge(1, 1, 2); // b2
    set_edge(2, 3, 4); // t1
    set_edge(3, 4, 5); // t2
    set_edge(4, 0, 3); // l
    set_edge(5, 1, 4); // m
    set_edge(6, 2, 5); // r
    IntegerMatrix d2(7, 2);
    // F1 = b1 + m - t1 - l ; F2 = b2 + r - t2 - m
    d2.at(0, 0) = 1;
    d2.at(5, 0) = 1;
    d2.at(2, 0) = -1;
    d2.at(4, 0) = -1;
    d2.at(1, 1) = 1;
    d2.at(6, 1) = 1;
    d2.at(3, 1) = -1;
    d2.at(5, 1) = -1;
    CWComplex x("mult_square",
                {{"v00", "v10", "v20", "v01", "v11", "v21"}, {"b1", "b2", "t1", "t2", "l", "m", "r"}, {"F1", "F2"}},
                {IntegerMatrix(0, 6), d1, d2});
    x.add_subcomplex("w", {"l", "r", "v00", "v01", "v20", "v21", "v10"});
    x.add_subcomplex("y0", {"b1", "b2", "l", "r", "v00", "v10", "v20", "v01", "v21"});
    x.add_subcomplex("y1", {"t1", "t2", "l", "r", "v01", "v11", "v21", "v00", "v20", "v10"});
    return x;
}

/// Two identity squares stacked vertically; the middle slice is the
/// composition interface.
inline CWComplex stacked_squares()
{
    // vertices v00 v10 | v01 v11 | v02 v12
    // edges: b: v00->v10, mid: v01->v11, t: v02->v12,
    //        l1: v00->v01, l2: v01->v02, r1: v10->v11, r2: v11->v12
    IntegerMatrix d1(6, 7);
    auto set_edge = [&](Int col, Int from, Int to) {
        d1.at(from, col) = -1;
        d1.at(to, col) = 1;
    };
    set_edge(0, 0, 1); // b
    set_edge(1, 2, 3); // mid
    set_edge(2, 4, 5); // t
    set_edge(3, 0, 2); // l1
    set_edge(4, 2, 4); // l2
    set_edge(5, 1, 3); // r1
    set_edge(6, 3, 5); // r2
    IntegerMatrix d2(7, 2);
    // F1 = b + r1 - mid - l1 ; F2 = mid + r2 - t - l2
    d2.at(0, 0) = 1;
    d2.at(5, 0) = 1;
    d2.at(1, 0) = -1;
    d2.at(3, 0) = -1;
    d2.at(1, 1) = 1;
    d2.at(6, 1) = 1;
    d2.at(2, 1) = -1;
    d2.at(4, 1) = -1;
    CWComplex x("stacked",
                {{"v00", "v10", "v01", "v11", "v02", "v12"}, {"b", "mid", "t", "l1", "l2", "r1", "r2"}, {"F1", "F2"}},
                {IntegerMatrix(0, 6), d1, d2});
    x.add_subcomplex("y0", {"b", "l1", "l2", "r1", "r2", "v00", "v10", "v01", "v11", "v02", "v12"});
    x.add_subcomplex("y1", {"t", "l1", "l2", "r1", "r2", "v00", "v10", "v01", "v11", "v02", "v12"});
    x.add_subcomplex("w", {"l1", "l2", "r1", "r2", "v00", "v10", "v01", "v11", "v02", "v12"});
    // pieces for the composition test
    x.add_subcomplex("x1", {"v00", "v10", "v01", "v11", "b", "mid", "l1", "r1", "F1"});
    x.add_subcomplex("x2", {"v01", "v11", "v02", "v12", "mid", "t", "l2", "r2", "F2"});
    x.add_subcomplex("y0_low", {"b", "l1", "r1", "v00", "v10", "v01", "v11"});
    x.add_subcomplex("mid_low", {"mid", "l1", "r1", "v00", "v10", "v01", "v11"});
    x.add_subcomplex("w_low", {"l1", "r1", "v00", "v10", "v01", "v11"});
    x.add_subcomplex("mid_up", {"mid", "l2", "r2", "v01", "v11", "v02", "v12"});
    x.add_subcomplex("y1_up", {"t", "l2", "r2", "v01", "v11", "v02", "v12"});
    x.add_subcomplex("w_up", {"l2", "r2", "v01", "v11", "v02", "v12"});
    return x;
}

/// Two-edge path a -E1-> b -E2-> c, the n = 0 composition of two intervals.
inline CWComplex path2()
{
    IntegerMatrix d1(3, 2);
    d1.at(0, 0) = -1;
    d1.at(1, 0) = 1; // E1: a -> b
    d1.at(1, 1) = -1;
    d1.at(2, 1) = 1; // E2: b -> c
    CWComplex x("path2", {{"a", "b", "c"}, {"E1", "E2"}}, {IntegerMatrix(0, 3), d1});
    x.add_subcomplex("start", {"a"});
    x.add_subcomplex("mid", {"b"});
    x.add_subcomplex("end", {"c"});
    x.add_subcomplex("ends", {"a", "c"});
    x.add_subcomplex("x1", {"a", "b", "E1"});
    x.add_subcomplex("x2", {"b", "c", "E2"});
    return x;
}

/// Annulus S^1 x I: two boundary circles joined by a vertical edge, one face.
inline CWComplex annulus()
{
    // vertices v0, v1; edges e0 (loop at v0), e1 (loop at v1), c: v0->v1
    IntegerMatrix d1(2, 3);
    d1.at(0, 2) = -1;
    d1.at(1, 2) = 1;
    IntegerMatrix d2(3, 1);
    d2.at(0, 0) = 1;  // e0
    d2.at(1, 0) = -1; // e1
    CWComplex x("annulus", {{"v0", "v1"}, {"e0", "e1", "c"}, {"F"}}, {IntegerMatrix(0, 2), d1, d2});
    x.add_subcomplex("s0", {"v0", "e0"});
    x.add_subcomplex("s1", {"v1", "e1"});
    return x;
}

/// Prism c(3) x I: the module-structure bordisms of the trimodule. Face
/// orientations put the bottom tripod and the glued vertical edge on the
/// incoming side.
inline CWComplex prism()
{
    // vertices: c0 p10 p20 p30 | c1 p11 p21 p31
    // edges: e10 e20 e30 (bottom tripod), e11 e21 e31 (top), vc: c0->c1,
    //        w1 w2 w3: pi0->pi1
    // faces: Fi = ei0 + wi - ei1 - vc
    std::vector<std::string> verts{"c0", "p10", "p20", "p30", "c1", "p11", "p21", "p31"};
    std::vector<std::string> edges{"e10", "e20", "e30", "e11", "e21", "e31", "vc", "w1", "w2", "w3"};
    IntegerMatrix d1(8, 10);
    auto set_edge = [&](Int col, Int from, Int to) {
        d1.at(from, col) = -1;
        d1.at(to, col) = 1;
    };
    for (Int i = 0; i < 3; ++i) set_edge(i, 0, i + 1);     // ei0: c0 -> pi0
    for (Int i = 0; i < 3; ++i) set_edge(3 + i, 4, 5 + i); // ei1: c1 -> pi1
    set_edge(6, 0, 4);                                     // vc
    for (Int i = 0; i < 3; ++i) set_edge(7 + i, 1 + i, 5 + i); // wi: pi0 -> pi1
    IntegerMatrix d2(10, 3);
    for (Int i = 0; i < 3; ++i) {
        d2.at(i, i) = 1;     // ei0
        d2.at(7 + i, i) = 1; // wi
        d2.at(3 + i, i) = -1; // ei1
        d2.at(6, i) = -1;     // vc
    }
    CWComplex x("prism", {verts, edges, {"F1", "F2", "F3"}}, {IntegerMatrix(0, 8), d1, d2});
    // bordism marking for the module action on leg k: the glued interval is wk
    for (int k = 1; k <= 3; ++k) {
        std::string sk = std::to_string(k);
        std::vector<std::string> w = {"p10", "p20", "p30", "p11", "p21", "p31"};
        for (int j = 1; j <= 3; ++j)
            if (j != k) w.push_back("w" + std::to_string(j));
        std::vector<std::string> y0 = w;
        y0.insert(y0.end(), {"e10", "e20", "e30", "w" + sk, "c0"});
        std::vector<std::string> y1 = w;
        y1.insert(y1.end(), {"e11", "e21", "e31", "c1"});
        x.add_subcomplex("act" + sk + "_w", w);
        x.add_subcomplex("act" + sk + "_y0", y0);
        x.add_subcomplex("act" + sk + "_y1", y1);
    }
    return x;
}

/// All bundled complexes, in a fixed order.
inline std::vector<CWComplex> all_complexes()
{
    std::vector<CWComplex> out;
    out.push_back(point());
    out.push_back(interval());
    out.push_back(circle());
    out.push_back(circle_two_arcs());
    out.push_back(disk());
    out.push_back(sphere());
    out.push_back(sphere_two_disks());
    out.push_back(torus());
    out.push_back(cone3());
    out.push_back(square());
    out.push_back(mult_square());
    out.push_back(stacked_squares());
    out.push_back(path2());
    out.push_back(annulus());
    out.push_back(stacked_annuli());
    out.push_back(disk_two_arcs());
    out.push_back(prism());
    return out;
}

/// Unglued complex, marked pieces, glued complex and quotient map for the
/// bundled gluings.
struct GluingCorpusEntry {
    std::string name;
    CWComplex unglued;
    std::string w1, w2, v;
    CWComplex glued;
    std::map<std::string, std::string> quotient;
    Int dim; // the theory dimension n this gluing is meant for
};

/// Interval with its two endpoints identified into a circle (the n = 0
/// non-modular example).
inline GluingCorpusEntry interval_to_circle()
{
    GluingCorpusEntry e{"interval_to_circle", interval(), "left", "right", "none", circle(), {}, 0};
    e.quotient = {{"v0", "v"}, {"v1", "v"}, {"e", "e"}};
    return e;
}

/// Two disjoint intervals glued end to end into one interval (n = 1 modular
/// example at the chain level: both sides give R[G]).
inline GluingCorpusEntry two_intervals_to_interval()
{
    CWComplex two = CWComplex::disjoint_union(interval(), interval(), "two_intervals");
    two.add_subcomplex("w1", {"l:v1"});
    two.add_subcomplex("w2", {"r:v0"});
    two.add_subcomplex("v", {"l:v0", "r:v1"});
    GluingCorpusEntry e{"two_intervals_to_interval", two, "w1", "w2", "v", path2(), {}, 1};
    e.quotient = {{"l:v0", "a"}, {"l:v1", "b"}, {"r:v0", "b"}, {"r:v1", "c"}, {"l:e", "E1"}, {"r:e", "E2"}};
    return e;
}

/// A cone on three points glued to itself along two feet (n = 1).
inline CWComplex glued_tripod()
{
    IntegerMatrix d1(3, 3);
    d1.at(0, 0) = -1;
    d1.at(1, 0) = 1; // E1: c -> p
    d1.at(0, 1) = -1;
    d1.at(1, 1) = 1; // E2: c -> p
    d1.at(0, 2) = -1;
    d1.at(2, 2) = 1; // e3: c -> p3
    CWComplex x("tripod_glued", {{"c", "p", "p3"}, {"E1", "E2", "e3"}}, {IntegerMatrix(0, 3), d1});
    x.add_subcomplex("v", {"p3"});
    x.add_subcomplex("w", {"p"});
    return x;
}

inline GluingCorpusEntry tripod_self_gluing()
{
    GluingCorpusEntry e{"tripod_self_gluing", cone3(), "foot1", "foot2", "foot3", glued_tripod(), {}, 1};
    e.quotient = {{"c", "c"}, {"p1", "p"}, {"p2", "p"}, {"p3", "p3"}, {"e1", "E1"}, {"e2", "E2"}, {"e3", "e3"}};
    return e;
}

/// Two cones on three points joined foot to foot (an H-shaped tree).
inline CWComplex h_tree()
{
    // vertices: lc j rc lp2 lp3 rp2 rp3; edges from the two cone points
    IntegerMatrix d1(7, 6);
    auto set_edge = [&](Int col, Int from, Int to) {
        d1.at(from, col) = -1;
        d1.at(to, col) = 1;
    };
    set_edge(0, 0, 1); // lE1: lc -> j
    set_edge(1, 0, 3); // lE2: lc -> lp2
    set_edge(2, 0, 4); // lE3: lc -> lp3
    set_edge(3, 2, 1); // rE1: rc -> j
    set_edge(4, 2, 5); // rE2: rc -> rp2
    set_edge(5, 2, 6); // rE3: rc -> rp3
    CWComplex x("h_tree", {{"lc", "j", "rc", "lp2", "lp3", "rp2", "rp3"}, {"lE1", "lE2", "lE3", "rE1", "rE2", "rE3"}},
                {IntegerMatrix(0, 7), d1});
    x.add_subcomplex("v", {"lp2", "lp3", "rp2", "rp3"});
    x.add_subcomplex("w", {"j"});
    return x;
}

inline GluingCorpusEntry two_tripods_gluing()
{
    CWComplex two = CWComplex::disjoint_union(cone3(), cone3(), "two_tripods");
    two.add_subcomplex("w1", {"l:p1"});
    two.add_subcomplex("w2", {"r:p1"});
    two.add_subcomplex("v", {"l:p2", "l:p3", "r:p2", "r:p3"});
    GluingCorpusEntry e{"two_tripods", two, "w1", "w2", "v", h_tree(), {}, 1};
    e.quotient = {{"l:c", "lc"},    {"l:p1", "j"},   {"l:p2", "lp2"}, {"l:p3", "lp3"}, {"r:c", "rc"},
                  {"r:p1", "j"},    {"r:p2", "rp2"}, {"r:p3", "rp3"}, {"l:e1", "lE1"}, {"l:e2", "lE2"},
                  {"l:e3", "lE3"},  {"r:e1", "rE1"}, {"r:e2", "rE2"}, {"r:e3", "rE3"}};
    return e;
}

inline std::vector<GluingCorpusEntry> all_gluings()
{
    return {interval_to_circle(), two_intervals_to_interval(), tripod_self_gluing(), two_tripods_gluing()};
}

/// The bundled bordisms: complex + boundary markings + theory dimension.
/// Complexes are shared so the marking structs can point into them.
struct NamedBordism {
    std::string name;
    std::shared_ptr<const CWComplex> complex;
    std::string total, y0, y1, w; // subcomplex names, "all"/"none" allowed
    Int n;
};

inline std::vector<NamedBordism> standard_bordisms()
{
    auto keep = [](CWComplex c) { return std::make_shared<const CWComplex>(std::move(c)); };
    auto sq = keep(square());
    auto ms = keep(mult_square());
    auto pr = keep(prism());
    auto an = keep(annulus());
    auto dk = keep(disk());
    auto sp = keep(sphere());
    auto s2 = keep(sphere_two_disks());
    auto to = keep(torus());
    auto st = keep(stacked_squares());
    auto iv = keep(interval());
    auto p2 = keep(path2());
    auto ci = keep(circle());
    auto c2 = keep(circle_two_arcs());
    auto c3 = keep(cone3());

    std::vector<NamedBordism> out;
    out.push_back({"square_identity", sq, "all", "y0", "y1", "w", 1});
    out.push_back({"mult_square", ms, "all", "y0", "y1", "w", 1});
    out.push_back({"prism_act1", pr, "all", "act1_y0", "act1_y1", "act1_w", 1});
    out.push_back({"prism_act2", pr, "all", "act2_y0", "act2_y1", "act2_w", 1});
    out.push_back({"prism_act3", pr, "all", "act3_y0", "act3_y1", "act3_w", 1});
    out.push_back({"annulus", an, "all", "s0", "s1", "none", 1});
    out.push_back({"disk_kill_circle", dk, "all", "circle", "none", "none", 1});
    out.push_back({"disk_birth_circle", dk, "all", "none", "circle", "none", 1});
    out.push_back({"sphere_closed", sp, "all", "none", "none", "none", 1});
    out.push_back({"sphere2_closed", s2, "all", "none", "none", "none", 1});
    out.push_back({"sphere2_lower", s2, "lower_disk", "none", "equator", "none", 1});
    out.push_back({"sphere2_upper", s2, "upper_disk", "equator", "none", "none", 1});
    out.push_back({"torus_closed", to, "all", "none", "none", "none", 1});
    out.push_back({"stacked_glued", st, "all", "y0", "y1", "w", 1});
    out.push_back({"stacked_lower", st, "x1", "y0_low", "mid_low", "w_low", 1});
    out.push_back({"stacked_upper", st, "x2", "mid_up", "y1_up", "w_up", 1});
    out.push_back({"arcs_rel_points", c2, "all", "upper", "lower", "pts", 1});
    out.push_back({"interval_n0", iv, "all", "left", "right", "none", 0});
    out.push_back({"path2_glued_n0", p2, "all", "start", "end", "none", 0});
    out.push_back({"path2_lower_n0", p2, "x1", "start", "mid", "none", 0});
    out.push_back({"path2_upper_n0", p2, "x2", "mid", "end", "none", 0});
    out.push_back({"circle_closed_n0", ci, "all", "none", "none", "none", 0});
    out.push_back({"c3_merge_n0", c3, "all", "feet12", "foot3", "none", 0});

    auto sa = keep(stacked_annuli());
    auto d2 = keep(disk_two_arcs());
    out.push_back({"annulus_n0", sa, "x1", "s0", "s1", "none", 0});
    out.push_back({"stacked_annuli_n0", sa, "all", "s0", "s2", "none", 0});
    out.push_back({"disk2_kill_n0", d2, "all", "boundary", "none", "none", 0});
    out.push_back({"disk2_arcs_n1", d2, "all", "upper", "lower", "pts", 1});
    return out;
}

/// The four Z/2 presentations (sigma in mu_4) plus Z/3 and Z/4 families.
inline std::vector<std::pair<std::string, CategoryPresentation>> all_presentations()
{
    std::vector<std::pair<std::string, CategoryPresentation>> out;
    FiniteAbelianGroup z2({2});
    const char* names[] = {"z2_sigma_1", "z2_sigma_i", "z2_sigma_minus1", "z2_sigma_minus_i"};
    for (Int k = 0; k < 4; ++k)
        out.emplace_back(names[k], CategoryPresentation(z2, 4, {root_of_unity(4, k)}));
    FiniteAbelianGroup z3({3});
    for (Int k = 0; k < 3; ++k)
        out.emplace_back("z3_sigma_w" + std::to_string(k),
                         CategoryPresentation(z3, 6, {root_of_unity(6, 2 * k)}));
    FiniteAbelianGroup z4({4});
    for (Int k = 0; k < 8; ++k)
        out.emplace_back("z4_sigma_z8_" + std::to_string(k),
                         CategoryPresentation(z4, 8, {root_of_unity(8, k)}));
    return out;
}

} // namespace corpus
} // namespace gctqft
