"""90-degree orientation achieving strong connectivity at radius 7.

Small inputs (two or three points) get direct constructions at radius 2.
Otherwise the degree-5 spanning tree is carved bottom-up into subtrees of
four or more nodes; in each subtree four representative nodes (always
including the subtree root) are oriented by the four-point construction, and
every other node simply aims at its closest representative. A leftover root
remainder of at most three nodes aims at the root of the adjacent group.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import (
    ConstructionInvariantViolated,
    DisconnectedInput,
    TooFewPoints,
    TooManyPoints,
)
from .fourpoint import orient_four, search_cover_orientation
from .geometry import Point, QuadKind, TAU, classify_quad, collinear, direction, normalize_angle
from .orientation import OrientationAssignment
from .topology import RootedTree, bounded_degree_mst, build_udg, check_point_ids, is_connected
from .verifier import is_strongly_connected_at

RADIUS_90 = 7.0
RADIUS_SMALL = 2.0
ALPHA_90 = 0.5 * math.pi


@dataclass(frozen=True)
class Group90:
    """An extracted subtree: its root, members, representatives, and the node
    it hangs from in the residual tree (None when it contains the tree root).

    ``representatives`` is empty only for degenerate members that fall back
    to the collinear line construction.
    """

    subtree_root: int
    members: FrozenSet[int]
    representatives: Tuple[int, ...]
    attach_parent: Optional[int]


def _bisector(d1: float, d2: float) -> float:
    """Direction halfway along the short arc from d1 to d2."""
    delta = normalize_angle(d2 - d1)
    if delta <= math.pi:
        return normalize_angle(d1 + 0.5 * delta)
    return normalize_angle(d2 + 0.5 * (TAU - delta))


def orient_small(points: Sequence[Point]) -> OrientationAssignment:
    """Two points aim at each other; for three, the two sharpest corners get
    wedges containing the whole triangle and the third aims at its nearer
    companion. Strongly connected at radius 2 (max pairwise distance <= 2
    when the unit disk graph is connected)."""
    check_point_ids(points)
    n = len(points)
    if n > 3:
        raise TooManyPoints("orient_small handles at most 3 points")
    if n < 2:
        raise TooFewPoints("need at least 2 points")
    if not is_connected(build_udg(points)):
        raise DisconnectedInput("unit disk graph is not connected")
    pts = sorted(points, key=lambda p: p.id)
    theta: Dict[int, float] = {}
    if n == 2:
        a, b = pts
        theta[a.id] = direction(a, b)
        theta[b.id] = direction(b, a)
    else:
        angles = {}
        for v in pts:
            u, w = [q for q in pts if q.id != v.id]
            angles[v.id] = abs(
                math.remainder(direction(v, u) - direction(v, w), TAU)
            )
        apex_ids = sorted(angles, key=lambda i: (angles[i], i))[:2]
        for v in pts:
            u, w = [q for q in pts if q.id != v.id]
            if v.id in apex_ids:
                theta[v.id] = _bisector(direction(v, u), direction(v, w))
            else:
                target = min((u, w), key=lambda q: (v.dist(q), q.id))
                theta[v.id] = direction(v, target)
    assignment = OrientationAssignment(
        alpha=ALPHA_90, theta=theta, guaranteed_radius=RADIUS_SMALL
    )
    if not is_strongly_connected_at(pts, assignment, RADIUS_SMALL):
        raise ConstructionInvariantViolated("small 90-degree case failed at r=2")
    return assignment


def _subtree_nodes(v: int, children: Dict[int, List[int]]) -> List[int]:
    out = [v]
    i = 0
    while i < len(out):
        out.extend(children[out[i]])
        i += 1
    return out


def extract_groups_90(t: RootedTree) -> Tuple[List[Group90], List[int]]:
    """Carve off minimal subtrees of four or more nodes, deepest first.

    Each step removes the deepest node (ties: smallest id) whose subtree has
    at least 4 nodes while every child subtree has fewer; what remains at the
    end (at most 3 nodes, containing the tree root, possibly nothing) is the
    small root remainder.
    """
    if t.n < 4:
        raise TooFewPoints("group extraction needs at least 4 nodes")
    children = {v: list(t.children[v]) for v in t.parent}
    alive = set(t.parent)
    groups: List[Group90] = []
    while len(alive) >= 4:
        depth = {t.root: 0}
        order = [t.root]
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for c in children[v]:
                depth[c] = depth[v] + 1
                order.append(c)
        size = {v: 1 for v in order}
        for v in reversed(order):
            for c in children[v]:
                size[v] += size[c]
        eligible = [
            v
            for v in order
            if size[v] >= 4 and all(size[c] < 4 for c in children[v])
        ]
        v = min(eligible, key=lambda u: (-depth[u], u))
        members = _subtree_nodes(v, children)
        attach = None if v == t.root else t.parent[v]
        if attach is not None:
            children[attach].remove(v)
        for m in members:
            alive.discard(m)
            children[m] = []
        reps = choose_representatives(members, v, {m: list(t.children[m]) for m in members})
        groups.append(
            Group90(
                subtree_root=v,
                members=frozenset(members),
                representatives=reps,
                attach_parent=attach,
            )
        )
        # removal of a whole subtree keeps the residual tree connected
        assert attach is None or attach in alive
    return groups, sorted(alive)


def _hop_distances(members: Sequence[int], adj: Dict[int, List[int]]) -> Dict[int, Dict[int, int]]:
    dist = {}
    for s in members:
        d = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in d:
                    d[w] = d[v] + 1
                    queue.append(w)
        dist[s] = d
    return dist


def choose_representatives(
    members: Sequence[int], subtree_root: int, children: Dict[int, List[int]]
) -> Tuple[int, ...]:
    """The subtree root plus three members chosen to minimize, in order: the
    worst hop distance from any non-representative to its nearest
    representative, the representative hop diameter, then the id tuple."""
    ms = sorted(members)
    if len(ms) < 4:
        raise TooFewPoints("representative selection needs at least 4 members")
    adj: Dict[int, List[int]] = {m: [] for m in ms}
    for v in ms:
        for c in children.get(v, ()):
            if c in adj:
                adj[v].append(c)
                adj[c].append(v)
    hop = _hop_distances(ms, adj)
    others = [m for m in ms if m != subtree_root]
    best = None
    for triple in combinations(others, 3):
        reps = (subtree_root,) + triple
        non = [m for m in ms if m not in reps]
        spread = max((min(hop[m][r] for r in reps) for m in non), default=0)
        diam = max(hop[a][b] for a in reps for b in reps)
        key = (spread, diam, reps)
        if best is None or key < best:
            best = key
    return best[2]


def _line_thetas(pts: Sequence[Point]) -> Dict[int, float]:
    """Fallback for a fully collinear group: sort along the line and alternate
    facing direction, so neighbors relay messages both ways at hops <= 2."""
    far = max(
        ((a, b) for a in pts for b in pts if a.id < b.id),
        key=lambda ab: (ab[0].dist(ab[1]), -ab[0].id, -ab[1].id),
    )
    u, v = far
    if (v.x, v.y, v.id) < (u.x, u.y, u.id):
        u, v = v, u
    phi = direction(u, v)
    ux, uy = math.cos(phi), math.sin(phi)
    ordered = sorted(pts, key=lambda p: (p.x * ux + p.y * uy, p.id))
    return {
        p.id: phi if k % 2 == 0 else normalize_angle(phi + math.pi)
        for k, p in enumerate(ordered)
    }


def _general_position_reps(
    group: Group90, pts: Sequence[Point], children: Dict[int, List[int]]
) -> Optional[Tuple[int, ...]]:
    """Representative 4-set in general position, preferring the hop-objective
    choice, then other root-containing subsets, then (degenerate corner)
    subsets without the root."""
    def ok(ids: Sequence[int]) -> bool:
        return classify_quad([pts[i] for i in ids]).kind is not QuadKind.DEGENERATE

    if ok(group.representatives):
        return group.representatives
    ms = sorted(group.members)
    root = group.subtree_root
    for triple in combinations([m for m in ms if m != root], 3):
        reps = (root,) + triple
        if ok(reps):
            return reps
    for quad in combinations(ms, 4):
        if ok(quad):
            return quad
    return None


def orient_all_90(points: Sequence[Point]) -> OrientationAssignment:
    """Orient every antenna (aperture 90 degrees); verified strongly connected
    at radius 7, raising ConstructionInvariantViolated otherwise."""
    check_point_ids(points)
    if len(points) < 2:
        raise TooFewPoints("need at least 2 points")
    if not is_connected(build_udg(points)):
        raise DisconnectedInput("unit disk graph is not connected")
    if len(points) <= 3:
        return orient_small(points)

    pts = sorted(points, key=lambda p: p.id)
    tree = bounded_degree_mst(pts)
    groups, remainder = extract_groups_90(tree)
    theta: Dict[int, float] = {}
    rep_dmax: List[float] = []
    final_groups: List[Group90] = []
    for g in groups:
        member_pts = [pts[i] for i in sorted(g.members)]
        reps = _general_position_reps(g, pts, tree.children)
        if reps is not None:
            result = orient_four([pts[i] for i in reps])
            theta.update(result.theta)
            rep_dmax.append(result.dmax)
        elif all(collinear(member_pts[0], member_pts[1], q) for q in member_pts[2:]):
            theta.update(_line_thetas(member_pts))
            final_groups.append(replace(g, representatives=()))
            continue
        else:
            # degenerate but not collinear (e.g. lattice groups where every
            # root 4-subset has a collinear triple): fall back to the
            # plane-covering search at the full radius
            reps = g.representatives
            found = search_cover_orientation([pts[i] for i in reps], RADIUS_90)
            if found is None:
                raise ConstructionInvariantViolated(
                    "degenerate group admits no plane-covering orientation; "
                    "preserve this instance as a regression fixture"
                )
            theta.update(found)
            rep_pts4 = [pts[i] for i in reps]
            rep_dmax.append(max(a.dist(b) for a in rep_pts4 for b in rep_pts4))
        rep_pts = [pts[i] for i in reps]
        for m in sorted(g.members):
            if m in reps:
                continue
            target = min(rep_pts, key=lambda rp: (pts[m].dist(rp), rp.id))
            theta[m] = direction(pts[m], target)
        final_groups.append(replace(g, representatives=tuple(reps)))

    if remainder:
        adjacent = [g for g in final_groups if g.attach_parent in remainder]
        q = pts[adjacent[-1].subtree_root]
        for m in remainder:
            theta[m] = direction(pts[m], q)

    assignment = OrientationAssignment(
        alpha=ALPHA_90,
        theta=theta,
        guaranteed_radius=RADIUS_90,
        diagnostics={
            "group_sizes": [len(g.members) for g in final_groups],
            "remainder_size": len(remainder),
            "rep_dmax": rep_dmax,
            "all_groups_full": not remainder,
            "applicable_bound": 5.0 if not remainder else 7.0,
        },
    )
    if not is_strongly_connected_at(pts, assignment, RADIUS_90):
        raise ConstructionInvariantViolated(
            "90-degree construction not strongly connected at r=7; "
            "preserve this instance as a regression fixture"
        )
    return assignment
