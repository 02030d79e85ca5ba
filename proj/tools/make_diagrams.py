#!/usr/bin/env python3
"""Regenerate the bundled planar diagrams in data/ from plane curves.

Each diagram is a list of closed polylines; crossings come from segment
intersections and an over/under rule. Output is the xlk-pd JSON format.
"""
import argparse
import json
import math
import os

import numpy as np


def trefoil(n=600, center=(0.0, 0.0)):
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    return np.c_[np.sin(t) + 2 * np.sin(2 * t) + center[0], np.cos(t) - 2 * np.cos(2 * t) + center[1]]


def circle(r, n=400, center=(0.0, 0.0)):
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    return np.c_[center[0] + r * np.cos(t), center[1] + r * np.sin(t)]


def intersections(curves):
    hits = []
    for ci, a in enumerate(curves):
        for cj in range(ci, len(curves)):
            b = curves[cj]
            p, q = a, np.roll(a, -1, 0)
            r, s = b, np.roll(b, -1, 0)
            d1 = (q - p)[:, None, :]
            d2 = (s - r)[None, :, :]
            w = r[None, :, :] - p[:, None, :]
            den = d1[..., 0] * d2[..., 1] - d1[..., 1] * d2[..., 0]
            with np.errstate(all="ignore"):
                t = (w[..., 0] * d2[..., 1] - w[..., 1] * d2[..., 0]) / den
                u = (w[..., 0] * d1[..., 1] - w[..., 1] * d1[..., 0]) / den
            ok = (np.abs(den) >= 1e-14) & (t >= 0) & (t < 1) & (u >= 0) & (u < 1)
            if ci == cj:
                n = len(a)
                ki, kj = np.indices(ok.shape)
                gap = np.abs(ki - kj)
                ok &= (kj > ki) & (gap > 1) & (gap != n - 1)
            for ki, kj in zip(*np.nonzero(ok)):
                hits.append(dict(ci=ci, ti=ki + t[ki, kj], cj=cj, tj=kj + u[ki, kj],
                                 di=q[ki] - p[ki], dj=s[kj] - r[kj],
                                 point=p[ki] + t[ki, kj] * (q[ki] - p[ki])))
    hits.sort(key=lambda h: (h["ci"], int(h["ti"]), h["cj"], int(h["tj"])))
    visits = {ci: [] for ci in range(len(curves))}
    for h, hit in enumerate(hits):
        hit["id"] = h
        visits[hit["ci"]].append((hit["ti"], h, "i"))
        visits[hit["cj"]].append((hit["tj"], h, "j"))
    for ci in visits:
        visits[ci].sort()
    return hits, visits


def alternating_self(hits, visits, comp):
    # over/under alternates along the component's own crossings
    own = [(h, side) for _, h, side in visits[comp] if hits[h]["ci"] == comp and hits[h]["cj"] == comp]
    return {h: own.index((h, "i")) % 2 == 0 for h in {h for h, _ in own}}


def nearest_hit(hits, pair, point):
    cands = [h for h in hits if {h["ci"], h["cj"]} == set(pair)]
    return min(cands, key=lambda h: np.hypot(*(h["point"] - np.asarray(point))))["id"]


def to_pd(curves, i_over, labels, name, meta):
    hits, visits = intersections(curves)
    lab = 1
    edge_in, edge_out, comp_edges = {}, {}, []
    for ci in range(len(curves)):
        v = visits[ci]
        ce = []
        for k in range(len(v)):
            e = lab
            lab += 1
            ce.append(e)
            edge_out[(v[k][1], v[k][2])] = e
            nxt = v[(k + 1) % len(v)]
            edge_in[(nxt[1], nxt[2])] = e
        comp_edges.append(ce)
    xs = []
    for h, hit in enumerate(hits):
        over_i = i_over(hits, visits, hit)
        us, os_ = ("j", "i") if over_i else ("i", "j")
        du, do = hit["d" + us], hit["d" + os_]
        a0 = math.atan2(-du[1], -du[0])

        def rel(v):
            return (math.atan2(v[1], v[0]) - a0) % (2 * math.pi)

        cands = sorted([(rel(-do), edge_in[(h, os_)], "in"), (rel(do), edge_out[(h, os_)], "out")])
        xs.append(dict(label=labels(hits, hit),
                       edges=[edge_in[(h, us)], cands[0][1], edge_out[(h, us)], cands[1][1]],
                       sign=1 if cands[0][2] == "out" else -1))
    meta = dict(meta)
    meta["component_edges"] = comp_edges
    return dict(format="xlk-pd", version=1, name=name, crossings=xs, meta=meta), hits


# crossings of the circle r = 2 with the two strands of each trefoil lobe
LOBES = {
    "right": [(1.965, -0.371), (0.661, 1.888)],
    "upper_left": [(-1.965, -0.371), (-0.661, 1.888)],
    "bottom": [(-1.304, -1.516), (1.304, -1.516)],
}


def split_trefoil(over_lobes=("upper_left",)):
    """Trefoil and a round unknot meeting it in six crossings.

    O lies over both strands of each lobe in over_lobes and under the rest,
    so each lobe can be cleared by a Reidemeister II move and the link is split.
    """
    curves = [trefoil(), circle(2.0)]
    hits, visits = intersections(curves)
    alt = alternating_self(hits, visits, 0)
    o_over = {nearest_hit(hits, (0, 1), p) for lobe in over_lobes for p in LOBES[lobe]}
    c = nearest_hit(hits, (0, 1), LOBES["right"][0])

    def i_over(hs, vs, hit):
        if hit["ci"] == hit["cj"]:
            return alt[hit["id"]]
        return hit["id"] not in o_over

    counter = {"t": 0, "o": 0}
    names = {}
    for hit in hits:
        if hit["id"] == c:
            names[hit["id"]] = "c"
        else:
            k = "t" if hit["ci"] == hit["cj"] else "o"
            counter[k] += 1
            names[hit["id"]] = k + str(counter[k])
    meta = {
        "description": "split link of a trefoil T and an unknot O; crossing c has T over O; "
                       "O lies over the lobes " + ", ".join(over_lobes) + " and under the rest",
        "components": {"T": {"index": 0, "two_bridge": "3/1"}, "O": {"index": 1}},
        "crossing": "c",
        "tangle": "2",
    }
    pd, _ = to_pd(curves, i_over, lambda hs, h: names[h["id"]], "3_1_split", meta)
    return pd


def parabolic_link():
    """Trefoil T1, a meridian circle T2 clasping one arc of T1, and an unknot O."""
    tip = (2.59807621, 1.5)
    curves = [trefoil(), circle(0.4, 160, tip), circle(1.0, 400, (tip[0] - 1.25, tip[1] + 0.25))]
    hits, visits = intersections(curves)
    alt = alternating_self(hits, visits, 0)
    clasp = sorted((h for h in hits if {h["ci"], h["cj"]} == {0, 1}), key=lambda h: h["ti"])
    t2_over = clasp[0]["id"]

    def i_over(hs, vs, hit):
        if hit["ci"] == hit["cj"]:
            return alt[hit["id"]]
        if {hit["ci"], hit["cj"]} == {0, 1}:
            return hit["id"] != t2_over if hit["ci"] == 0 else hit["id"] == t2_over
        return hit["ci"] != 2  # O always under

    def first(pair):
        return min((h for h in hits if {h["ci"], h["cj"]} == pair), key=lambda h: h["ti"])["id"]

    c1, c2 = first({0, 2}), first({1, 2})
    counter = {}
    names = {}
    for hit in hits:
        if hit["id"] == c1:
            names[hit["id"]] = "c1"
        elif hit["id"] == c2:
            names[hit["id"]] = "c2"
        else:
            k = {frozenset({0}): "t", frozenset({0, 1}): "d", frozenset({0, 2}): "o",
                 frozenset({1, 2}): "p"}[frozenset({hit["ci"], hit["cj"]})]
            counter[k] = counter.get(k, 0) + 1
            names[hit["id"]] = k + str(counter[k])
    meta = {
        "description": "trefoil T1 with a meridian circle T2 around one of its arcs, split from an unknot O; "
                       "c1 joins T1 and O, c2 joins T2 and O",
        "components": {"T1": {"index": 0, "two_bridge": "3/1"}, "T2": {"index": 1}, "O": {"index": 2}},
        "crossings": ["c1", "c2"],
        "tangles": ["2", "2 1"],
    }
    pd, _ = to_pd(curves, i_over, lambda hs, h: names[h["id"]], "parabolic_link", meta)
    return pd


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("--over-lobes", default="upper_left")
    args = ap.parse_args()
    lobes = tuple(x for x in args.over_lobes.split(",") if x)
    for fname, pd in [("3_1_split.pd.json", split_trefoil(lobes)), ("parabolic_link.pd.json", parabolic_link())]:
        path = os.path.join(args.out, fname)
        with open(path, "w") as f:
            json.dump(pd, f, indent=1, sort_keys=True)
            f.write("\n")
        print(path, len(pd["crossings"]), "crossings")


if __name__ == "__main__":
    main()
