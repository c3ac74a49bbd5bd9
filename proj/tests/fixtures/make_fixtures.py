#!/usr/bin/env python3
"""Hand-encoded diagram fixtures. Run from this directory.

nested_lenses.json
    Torus with the reflection (x, y) -> (x, -y); fixed circles C0 = {y = 0}
    and C1 = {y = 2}. Two pairs of round curves alpha_i, beta_i = tau(alpha_i)
    centred just above/below C0, pair 1 nested inside pair 0, so each pair
    meets only on C0:

        x:   0      0.83   1.54      2.46   3.17     4
        C0:  X0 --- P1 --- P2 ------ Q2 --- Q1 ---- X0

    Plus sheet, from C0 upward: beta1+, alpha1+ span P2..Q2, beta0+, alpha0+
    span P1..Q1, then C1. An aux edge X0 -> W cuts the outer face to a disk.
    The inner lens is an acute bigon, the region between the lenses an
    annulus with four acute corners.

s3_torus.json
    Torus with (x, y) -> (y, x), C the diagonal (quotient a Moebius band).
    alpha = {y = 1/2}, beta = {x = 1/2} meet once, at O = (1/2, 1/2) on C.
    A = (0, 1/2), B = (1/2, 0) and D = (0, 0) subdivide the loops.

sphere.json
    Sphere with its equator as C and no curves.
"""
import json


def write(path, vertices, edges, faces, tau_edge, alpha_order, circles, orientable):
    """vertices: [(name, kind)], edges: [(name, from, to, label, direction)],
    faces: [(name, loop, sheet)] with loop [(edge, sign)], tau_edge: partial map
    (both directions); every vertex is fixed by tau or listed in tau_vertex."""
    vid = {n: k for k, (n, _) in enumerate(vertices)}
    eid = {e[0]: k for k, e in enumerate(edges)}
    full = {e[0]: tau_edge.get(e[0], e[0]) for e in edges}
    doc = {
        "vertices": [{"id": k, "kind": kind} for k, (_, kind) in enumerate(vertices)],
        "edges": [{"id": k, "from": vid[a], "to": vid[b], "label": lab, "direction": d}
                  for k, (_, a, b, lab, d) in enumerate(edges)],
        "faces": [{"id": k, "loop": [[eid[e], s] for e, s in loop], "sheet": sh}
                  for k, (_, loop, sh) in enumerate(faces)],
        "tau": {
            "vertices": [[k, vid[tau_vertex.get(n, n)]] for k, (n, _) in enumerate(vertices)],
            "edges": [[eid[n], eid[full[n]]] for n, *_ in edges],
            "faces": [[k, fid] for k, fid in enumerate(tau_faces(faces, full, edges, vid))],
        },
        "alpha_order": alpha_order,
        "curve_orientations": [1] * len(alpha_order),
        "fixed_circles": [{"cycle": [[eid[e], 1] for e in cyc], "basepoint_edge": eid[bp]} for cyc, bp in circles],
        "quotient_orientable": orientable,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


tau_vertex = {}


def tau_sign(name, full, ends):
    a, b = ends[name]
    c, d = ends[full[name]]
    return 1 if (tau_vertex.get(a, a), tau_vertex.get(b, b)) == (c, d) else -1


def tau_image(loop, full, ends):
    # tau reverses orientation, so the image loop is read backwards
    return [(full[e], -s * tau_sign(e, full, ends)) for e, s in reversed(loop)]


def same_cycle(a, b):
    return len(a) == len(b) and any(a == b[k:] + b[:k] for k in range(len(b)))


def tau_faces(faces, full, edges, vid):
    ends = {n: (a, b) for n, a, b, *_ in edges}
    out = []
    for _, loop, _ in faces:
        img = tau_image(loop, full, ends)
        match = [k for k, (_, other, _) in enumerate(faces) if same_cycle(img, other)]
        assert len(match) == 1, loop
        out.append(match[0])
    return out


def mirrored(plus, full, edges):
    ends = {n: (a, b) for n, a, b, *_ in edges}
    return [(n[:-1] + "-", tau_image(loop, full, ends), "minus") for n, loop, _ in plus]


def nested_lenses():
    tau_vertex.clear()
    V = [("X0", "subdivision"), ("P1", "fixed_crossing"), ("P2", "fixed_crossing"), ("Q2", "fixed_crossing"),
         ("Q1", "fixed_crossing"), ("W", "subdivision"), ("V2", "subdivision")]
    E = [("c_x0p1", "X0", "P1", "fixed:0", 0), ("c_p1p2", "P1", "P2", "fixed:0", 0),
         ("c_p2q2", "P2", "Q2", "fixed:0", 0), ("c_q2q1", "Q2", "Q1", "fixed:0", 0),
         ("c_q1x0", "Q1", "X0", "fixed:0", 0), ("c1_wv", "W", "V2", "fixed:1", 0),
         ("c1_vw", "V2", "W", "fixed:1", 0), ("aux+", "X0", "W", "aux", 0), ("aux-", "X0", "W", "aux", 0),
         # upper arcs run left to right; alpha_i is its upper arc followed by its lower arc reversed
         ("b1+", "P2", "Q2", "beta:1", -1), ("a1+", "P2", "Q2", "alpha:1", 1),
         ("b0+", "P1", "Q1", "beta:0", -1), ("a0+", "P1", "Q1", "alpha:0", 1),
         ("a1-", "P2", "Q2", "alpha:1", -1), ("b1-", "P2", "Q2", "beta:1", 1),
         ("a0-", "P1", "Q1", "alpha:0", -1), ("b0-", "P1", "Q1", "beta:0", 1)]
    tau = {"aux+": "aux-", "b1+": "a1-", "a1+": "b1-", "b0+": "a0-", "a0+": "b0-"}
    tau.update({v: k for k, v in list(tau.items())})
    full = {e[0]: tau.get(e[0], e[0]) for e in E}
    plus = [
        ("lens1+", [("c_p2q2", 1), ("b1+", -1)], "plus"),
        ("cres1+", [("b1+", 1), ("a1+", -1)], "plus"),
        ("ann+", [("c_p1p2", 1), ("a1+", 1), ("c_q2q1", 1), ("b0+", -1)], "plus"),
        ("cres0+", [("b0+", 1), ("a0+", -1)], "plus"),
        ("outer+", [("c_x0p1", 1), ("a0+", 1), ("c_q1x0", 1), ("aux+", 1), ("c1_vw", -1), ("c1_wv", -1),
                    ("aux+", -1)], "plus"),
    ]
    circles = [(["c_x0p1", "c_p1p2", "c_p2q2", "c_q2q1", "c_q1x0"], "c_x0p1"), (["c1_wv", "c1_vw"], "c1_wv")]
    write("nested_lenses.json", V, E, plus + mirrored(plus, full, E), tau, [0, 1], circles, True)


def s3_torus():
    tau_vertex.clear()
    tau_vertex.update({"A": "B", "B": "A"})
    V = [("O", "fixed_crossing"), ("A", "subdivision"), ("B", "subdivision"), ("D", "subdivision")]
    E = [("oa", "O", "A", "alpha:0", 1), ("ao", "A", "O", "alpha:0", 1),
         ("ob", "O", "B", "beta:0", 1), ("bo", "B", "O", "beta:0", 1),
         ("od", "O", "D", "fixed:0", 0), ("do", "D", "O", "fixed:0", 0)]
    tau = {"oa": "ob", "ob": "oa", "ao": "bo", "bo": "ao"}
    # the square [1/2, 3/2]^2 cut along its diagonal, which passes through D = (1, 1)
    faces = [("lower", [("oa", 1), ("ao", 1), ("ob", 1), ("bo", 1), ("do", -1), ("od", -1)], None),
             ("upper", [("od", 1), ("do", 1), ("ao", -1), ("oa", -1), ("bo", -1), ("ob", -1)], None)]
    write("s3_torus.json", V, E, faces, tau, [0], [(["od", "do"], "do")], False)


def sphere():
    tau_vertex.clear()
    V = [("E0", "subdivision"), ("E1", "subdivision")]
    E = [("c01", "E0", "E1", "fixed:0", 0), ("c10", "E1", "E0", "fixed:0", 0)]
    faces = [("north", [("c01", 1), ("c10", 1)], "plus"), ("south", [("c10", -1), ("c01", -1)], "minus")]
    write("sphere.json", V, E, faces, {}, [], [(["c01", "c10"], "c01")], True)


if __name__ == "__main__":
    nested_lenses()
    s3_torus()
    sphere()
