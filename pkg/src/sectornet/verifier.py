"""Ground truth for constructions: communication graphs, strong connectivity,
minimum strong radius, plane coverage, and brute-force feasibility.

The communication graph has an edge a -> b exactly when b lies in a's wedge.
Strong connectivity is decided by an iterative Tarjan SCC pass; the radius
search and batch suites use an equivalent vectorized double-BFS on the
adjacency matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .errors import MissingOrientation, TooManyPoints
from .geometry import EPS, TAU, Point, Wedge, angle_diff, normalize_angle
from .orientation import OrientationAssignment

# Candidate-angle nudge for brute-force grids: above membership EPS, below
# geometric feature scale, so it selects each open side of a breakpoint
# without tripping the closed-boundary tolerance.
NUDGE = 1e-7


@dataclass(frozen=True)
class CommGraph:
    """Directed communication graph on point ids 0..n-1."""

    n: int
    out_edges: Dict[int, FrozenSet[int]]

    def edge_count(self) -> int:
        return sum(len(v) for v in self.out_edges.values())


def _coords(points: Sequence[Point]) -> np.ndarray:
    return np.array([(p.x, p.y) for p in points], dtype=float)


def _adjacency_matrix(
    coords: np.ndarray, theta: np.ndarray, alpha: float, r: float, eps: float = EPS
) -> np.ndarray:
    """Boolean matrix: adj[a, b] iff b is in a's wedge."""
    dx = coords[None, :, 0] - coords[:, None, 0]
    dy = coords[None, :, 1] - coords[:, None, 1]
    dist = np.hypot(dx, dy)
    ang = np.arctan2(dy, dx)
    diff = np.abs(np.mod(ang - theta[:, None] + math.pi, TAU) - math.pi)
    adj = (dist <= r + eps) & (diff <= 0.5 * alpha + eps)
    np.fill_diagonal(adj, False)
    return adj


def _theta_array(points: Sequence[Point], assignment: OrientationAssignment) -> np.ndarray:
    missing = [p.id for p in points if p.id not in assignment.theta]
    if missing:
        raise MissingOrientation(f"no orientation for point ids {missing}")
    return np.array([assignment.theta[p.id] for p in points], dtype=float)


def build_comm_graph(
    points: Sequence[Point],
    assignment: OrientationAssignment,
    r_override: Optional[float] = None,
) -> CommGraph:
    """Communication graph induced by the assignment's wedges.

    ``r_override`` replaces the assignment's radius when given.
    """
    pts = sorted(points, key=lambda p: p.id)
    r = assignment.guaranteed_radius if r_override is None else r_override
    if len(pts) == 0:
        return CommGraph(0, {})
    adj = _adjacency_matrix(_coords(pts), _theta_array(pts, assignment), assignment.alpha, r)
    out = {i: frozenset(int(j) for j in np.flatnonzero(adj[i])) for i in range(len(pts))}
    return CommGraph(n=len(pts), out_edges=out)


def tarjan_scc_count(n: int, out_edges: Dict[int, FrozenSet[int]]) -> int:
    """Number of strongly connected components (iterative Tarjan)."""
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    succ = {v: sorted(out_edges.get(v, ())) for v in range(n)}
    counter = 0
    sccs = 0
    for start in range(n):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(succ[v])):
                w = succ[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                sccs += 1
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    if w == v:
                        break
            if work:
                u = work[-1][0]
                lowlink[u] = min(lowlink[u], lowlink[v])
    return sccs


def strongly_connected(g: CommGraph) -> bool:
    """True iff the graph has exactly one SCC (a single node passes)."""
    if g.n <= 1:
        return True
    return tarjan_scc_count(g.n, g.out_edges) == 1


def _reaches_all(adj: np.ndarray, start: int = 0) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def _strong_matrix(adj: np.ndarray) -> bool:
    """Strong connectivity via forward and backward reachability from node 0."""
    if adj.shape[0] <= 1:
        return True
    return _reaches_all(adj) and _reaches_all(adj.T)


def is_strongly_connected_at(
    points: Sequence[Point], assignment: OrientationAssignment, r: float
) -> bool:
    """Fast strong-connectivity decision at an explicit radius."""
    pts = sorted(points, key=lambda p: p.id)
    if len(pts) <= 1:
        return True
    adj = _adjacency_matrix(_coords(pts), _theta_array(pts, assignment), assignment.alpha, r)
    return _strong_matrix(adj)


def min_strong_radius(
    points: Sequence[Point], assignment: OrientationAssignment
) -> Optional[float]:
    """Smallest pairwise distance at which the graph is strongly connected.

    Edges change only when r crosses a pairwise distance, and the edge set
    grows with r, so binary search over the sorted distances is exact.
    Returns None when even the maximum pairwise distance fails (infeasible).
    """
    pts = sorted(points, key=lambda p: p.id)
    n = len(pts)
    if n <= 1:
        return 0.0
    coords = _coords(pts)
    theta = _theta_array(pts, assignment)
    d = coords[:, None, :] - coords[None, :, :]
    dist = np.hypot(d[..., 0], d[..., 1])
    iu, ju = np.triu_indices(n, k=1)
    cands = np.unique(dist[iu, ju])

    def ok(r: float) -> bool:
        return _strong_matrix(_adjacency_matrix(coords, theta, assignment.alpha, r))

    if not ok(float(cands[-1])):
        return None
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(float(cands[mid])):
            hi = mid
        else:
            lo = mid + 1
    return float(cands[lo])


# ---------------------------------------------------------------------------
# Plane coverage
# ---------------------------------------------------------------------------


def _interval_cover_circle(intervals: List[Tuple[float, float]], eps: float = EPS) -> bool:
    """Do closed arcs [start, start+width] jointly cover the full circle?"""
    if not intervals:
        return False
    arcs = []
    for s, w in intervals:
        if w >= TAU - eps:
            return True
        s = normalize_angle(s)
        arcs.append((s, s + w))
        arcs.append((s - TAU, s + w - TAU))
    arcs.sort()
    reach = 0.0
    for s, e in arcs:
        if s > reach + eps:
            break
        reach = max(reach, e)
        if reach >= TAU - eps:
            return True
    return False


def _wedge_lines(wedges: Sequence[Wedge]) -> List[Tuple[float, float, float, float]]:
    """Boundary lines (px, py, ux, uy) of every wedge; a half-plane yields one line."""
    lines = []
    for w in wedges:
        seen_dirs: List[float] = []
        for sign in (-1.0, 1.0):
            b = normalize_angle(w.theta + sign * 0.5 * w.alpha)
            axis = math.fmod(b, math.pi)
            if axis < 0.0:
                axis += math.pi
            if any(abs(axis - d) < 1e-12 or abs(abs(axis - d) - math.pi) < 1e-12 for d in seen_dirs):
                continue
            seen_dirs.append(axis)
            lines.append((w.apex.x, w.apex.y, math.cos(b), math.sin(b)))
    return lines


def covers_plane(wedges: Sequence[Wedge]) -> bool:
    """Exact decision of directional plane coverage (wedge radii are ignored).

    Far-field: the angular intervals must cover the full circle. Near-field:
    the coverage pattern is constant on each cell of the boundary-line
    arrangement, so testing every vertex plus on-line samples and their small
    normal offsets (one sample lands in every face adjacent to each edge
    piece, bounded or not) decides coverage of the whole plane.
    """
    if not 1 <= len(wedges) <= 16:
        raise ValueError("covers_plane supports between 1 and 16 wedges")
    if not _interval_cover_circle([(w.theta - 0.5 * w.alpha, w.alpha) for w in wedges]):
        return False

    lines = _wedge_lines(wedges)
    # pairwise intersections, merged within EPS
    verts: List[Tuple[float, float]] = []
    for i in range(len(lines)):
        px, py, ux, uy = lines[i]
        for j in range(i + 1, len(lines)):
            qx, qy, vx, vy = lines[j]
            det = ux * vy - uy * vx
            if abs(det) < 1e-12:
                continue
            t = ((qx - px) * vy - (qy - py) * vx) / det
            verts.append((px + t * ux, py + t * uy))
    merged: List[Tuple[float, float]] = []
    for x, y in verts:
        if not any(abs(x - mx) <= EPS and abs(y - my) <= EPS for mx, my in merged):
            merged.append((x, y))

    ref = [(w.apex.x, w.apex.y) for w in wedges] + merged
    span = 1.0
    for i in range(len(ref)):
        for j in range(i + 1, len(ref)):
            span = max(span, abs(ref[i][0] - ref[j][0]) + abs(ref[i][1] - ref[j][1]))
    far = 2.0 * span + 1.0
    delta = 1e-6 * span

    on_line_tol = 1e-7 * span
    candidates: List[Tuple[float, float]] = list(merged)
    candidates.extend((w.apex.x, w.apex.y) for w in wedges)
    for px, py, ux, uy in lines:
        ts = sorted(
            (vx - px) * ux + (vy - py) * uy
            for vx, vy in merged
            if abs((vx - px) * uy - (vy - py) * ux) <= on_line_tol
        )
        samples = [ts[0] - far, ts[-1] + far] if ts else [-far, 0.0, far]
        for a, b in zip(ts, ts[1:]):
            if b - a > EPS:
                samples.append(0.5 * (a + b))
        nx, ny = -uy, ux
        for t in samples:
            sx, sy = px + t * ux, py + t * uy
            candidates.append((sx, sy))
            candidates.append((sx + delta * nx, sy + delta * ny))
            candidates.append((sx - delta * nx, sy - delta * ny))

    pts = np.asarray(candidates)
    apex = np.array([(w.apex.x, w.apex.y) for w in wedges])
    theta = np.array([w.theta for w in wedges])
    half = np.array([0.5 * w.alpha for w in wedges])
    dx = pts[:, None, 0] - apex[None, :, 0]
    dy = pts[:, None, 1] - apex[None, :, 1]
    ang = np.arctan2(dy, dx)
    diff = np.abs(np.mod(ang - theta[None, :] + math.pi, TAU) - math.pi)
    ok = (diff <= half[None, :] + EPS) | ((dx == 0.0) & (dy == 0.0))
    return bool(ok.any(axis=1).all())


# ---------------------------------------------------------------------------
# Brute-force feasibility
# ---------------------------------------------------------------------------

BRUTE_FORCE_MAX = 5


def candidate_bisectors(
    points: Sequence[Point], i: int, alpha: float
) -> List[float]:
    """Complete bisector grid for point i: toward each other point, plus both
    boundary alignments and their nudged open-side variants.

    Between consecutive breakpoints the covered subset is constant, so this
    grid realizes every achievable coverage pattern.
    """
    p = points[i]
    cand = set()
    for q in points:
        if q.id == p.id:
            continue
        d = math.atan2(q.y - p.y, q.x - p.x)
        cand.add(normalize_angle(d))
        for sign in (-1.0, 1.0):
            edge = d + sign * 0.5 * alpha
            cand.add(normalize_angle(edge))
            cand.add(normalize_angle(edge + NUDGE))
            cand.add(normalize_angle(edge - NUDGE))
    return sorted(cand)


def _coverage_mask(
    points: Sequence[Point], i: int, theta: float, alpha: float, r: float
) -> int:
    mask = 0
    p = points[i]
    for j, q in enumerate(points):
        if j == i:
            continue
        if p.dist(q) <= r + EPS and angle_diff(
            math.atan2(q.y - p.y, q.x - p.x), theta
        ) <= 0.5 * alpha + EPS:
            mask |= 1 << j
    return mask


def _masks_strongly_connected(masks: Sequence[int], n: int) -> bool:
    full = (1 << n) - 1
    for s in range(n):
        reach = 1 << s
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            frontier = nxt & ~reach
            reach |= nxt
        if reach != full:
            return False
    return True


def feasible_by_bruteforce(
    points: Sequence[Point], alpha: float, r: float
) -> Tuple[bool, Optional[OrientationAssignment]]:
    """Exhaustively decide whether some orientation is strongly connected at r.

    Enumerates the complete per-point bisector grid, deduplicated by coverage
    pattern (connectivity depends only on which points each wedge covers).
    Returns a witness assignment on success. Limited to n <= 5.
    """
    pts = sorted(points, key=lambda p: p.id)
    n = len(pts)
    if n > BRUTE_FORCE_MAX:
        raise TooManyPoints(f"brute force limited to {BRUTE_FORCE_MAX} points")
    if n <= 1:
        theta = {p.id: 0.0 for p in pts}
        return True, OrientationAssignment(alpha=alpha, theta=theta, guaranteed_radius=r)

    options: List[List[Tuple[int, float]]] = []
    for i in range(n):
        by_mask: Dict[int, float] = {}
        for th in candidate_bisectors(pts, i, alpha):
            m = _coverage_mask(pts, i, th, alpha, r)
            if m not in by_mask:
                by_mask[m] = th
        options.append(sorted(by_mask.items(), key=lambda kv: kv[1]))

    for combo in product(*options):
        masks = [m for m, _ in combo]
        if any(m == 0 for m in masks):
            continue
        if _masks_strongly_connected(masks, n):
            theta = {pts[i].id: combo[i][1] for i in range(n)}
            return True, OrientationAssignment(
                alpha=alpha, theta=theta, guaranteed_radius=r
            )
    return False, None
