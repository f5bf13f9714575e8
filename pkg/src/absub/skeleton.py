"""Leveled skeleton DAGs and constant-delay path enumeration.

A skeleton is a succinct encoding of a larger "expanded" DAG.  Every node
carries a level; level 0 holds the single source and the maximal level the
single sink.  Inside a level the nodes form one chain (the sibling order),
every node other than source and sink stores exactly one level-increasing
edge (its down edge), and the source may store several, at pairwise
distinct target levels.  The expanded DAG replaces each stored
level-increasing edge (v, v') by the bundle {(v, v'') : v'' = v' or v''
follows v' in the sibling order}.

Enumeration emits every source-sink path of the expanded DAG exactly once.
The first path reachable through each source edge is described in full; each
later path is a constant-size edit script against its predecessor.  The
walker keeps two fixed-size array stacks: S holds path objects describing
the segments of the current path, C holds pointers into S at the objects
that still have unexplored branches, bottom-to-top in the same order.
Between two consecutive outputs only a constant number of stack cells and
pointers change, which is what gives constant delay.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoCurrentPath


@dataclass(frozen=True)
class Edge:
    """Append the single node dst, reached from src by one expanded edge."""

    src: object
    dst: object


@dataclass(frozen=True)
class DefaultPath:
    """Append the nodes strictly after src on its down-edge chain, through dst."""

    src: object
    dst: object


@dataclass(frozen=True)
class FinalLetter:
    """Append one literal letter (used by word-level streams)."""

    letter: int


@dataclass(frozen=True)
class EditScript:
    """Keep the first `keep` elements of the previous result, then append segments."""

    keep: int
    rewind_to: object
    segments: tuple


class StepCounter:
    """Mutable counter threaded through enumerators for delay instrumentation."""

    __slots__ = ("steps",)

    def __init__(self):
        self.steps = 0


class SkeletonDag:
    """Succinct leveled DAG.

    levels: mapping node label -> level.
    sibling_orders: mapping level -> ordered list of labels on that level.
    edges: list of (x, y) label pairs for the stored level-increasing edges,
    including those leaving the source.
    """

    def __init__(self, levels, sibling_orders, edges):
        self.levels_in = dict(levels)
        self.sibling_in = {int(k): list(v) for k, v in sibling_orders.items()}
        self.edges_in = [(x, y) for x, y in edges]
        self._ready = False

    # -- derived, succinct storage -------------------------------------

    def _ensure(self):
        if self._ready:
            return self
        levels = self.levels_in
        m = max(levels.values())
        labels: list = []
        id_of: dict = {}
        level: list[int] = []
        pos: list[int] = []
        chains: list[list[int]] = []
        for ell in range(m + 1):
            row = self.sibling_in.get(ell)
            if row is None:
                raise ValueError(f"level {ell} has no sibling order")
            ids = []
            for p, lab in enumerate(row):
                if levels[lab] != ell:
                    raise ValueError(f"node {lab!r} listed on level {ell}, declared {levels[lab]}")
                i = len(labels)
                labels.append(lab)
                id_of[lab] = i
                level.append(ell)
                pos.append(p)
                ids.append(i)
            chains.append(ids)
        if len(chains[0]) != 1 or len(chains[m]) != 1:
            raise ValueError("source or sink level is not a singleton")
        link = [None] * len(labels)
        for ids in chains:
            for a, b in zip(ids, ids[1:]):
                link[a] = b
        source = chains[0][0]
        sink = chains[m][0]
        down = [None] * len(labels)
        s_edges = []
        for x, y in self.edges_in:
            xi = id_of[x]
            yi = id_of[y]
            if level[xi] >= level[yi]:
                raise ValueError(f"edge {x!r}->{y!r} does not increase level")
            if xi == source:
                s_edges.append(yi)
            elif down[xi] is not None:
                raise ValueError(f"node {x!r} has two down edges")
            else:
                down[xi] = yi
        for i in range(len(labels)):
            if i not in (source, sink) and down[i] is None:
                raise ValueError(f"node {labels[i]!r} has no down edge")
        s_edges.sort(key=lambda t: level[t])
        self._labels = labels
        self._id_of = id_of
        self._level = level
        self._pos = pos
        self._link = link
        self._down = down
        self._chains = chains
        self._source = source
        self._sink = sink
        self._s_edges = s_edges
        self._m = m
        self._ready = True
        return self

    # -- readable accessors used by builders and tests ------------------

    @property
    def max_level(self) -> int:
        return self._ensure()._m

    @property
    def source_label(self):
        return self._labels[self._ensure()._source]

    @property
    def sink_label(self):
        return self._labels[self._ensure()._sink]

    def node_labels(self):
        return list(self._ensure()._labels)

    def level_of(self, label) -> int:
        return self._ensure()._level[self._id_of[label]]

    def sibling_order(self, ell: int):
        self._ensure()
        return [self._labels[i] for i in self._chains[ell]]

    def down_of(self, label):
        self._ensure()
        t = self._down[self._id_of[label]]
        return None if t is None else self._labels[t]

    def source_edge_labels(self):
        self._ensure()
        return [self._labels[t] for t in self._s_edges]


def validate(dag: SkeletonDag) -> list[str]:
    """Check the structural axioms; returns a list of violations, empty when valid."""
    out = []
    levels = dag.levels_in
    if not levels:
        return ["no nodes"]
    m = max(levels.values())
    if min(levels.values()) < 0:
        out.append("negative level")
    by_level: dict[int, list] = {}
    for lab, ell in levels.items():
        by_level.setdefault(ell, []).append(lab)
    if len(by_level.get(0, [])) == 0:
        out.append("no source: level 0 is empty")
    elif len(by_level[0]) > 1:
        out.append("multiple sources: level 0 has more than one node")
    if len(by_level.get(m, [])) > 1:
        out.append("multiple sinks: the maximal level has more than one node")
    if m == 0 and not out:
        out.append("source and sink coincide")
    for ell in range(m + 1):
        if ell not in by_level:
            out.append(f"empty level {ell}")
    for ell, nodes in sorted(by_level.items()):
        row = dag.sibling_in.get(ell)
        if row is None or sorted(map(repr, row)) != sorted(map(repr, nodes)):
            out.append(f"sibling order mismatch at level {ell}")
    known = set(levels)
    source = by_level.get(0, [None])[0]
    sink = by_level.get(m, [None])[0] if m in by_level else None
    outdeg: dict = {}
    source_target_levels = []
    for x, y in dag.edges_in:
        if x not in known or y not in known:
            out.append(f"edge endpoint unknown: {x!r}->{y!r}")
            continue
        if levels[x] >= levels[y]:
            out.append(f"edge {x!r}->{y!r} does not increase level")
        if x == source:
            source_target_levels.append(levels[y])
        else:
            outdeg[x] = outdeg.get(x, 0) + 1
    if len(set(source_target_levels)) != len(source_target_levels):
        out.append("source edges share a target level")
    for lab in levels:
        if lab == source or lab == sink:
            continue
        k = outdeg.get(lab, 0)
        if k != 1:
            out.append(f"node {lab!r} has {k} down edges, expected 1")
    if sink is not None and outdeg.get(sink, 0):
        out.append("sink has an outgoing edge")
    return out


def expanded_children(dag: SkeletonDag, label):
    """Children of a node in the expanded DAG, in sibling order groups."""
    dag._ensure()
    vi = dag._id_of[label]
    if vi == dag._sink:
        raise ValueError("the sink has no children")
    link = dag._link
    out = []
    if vi == dag._source:
        starts = dag._s_edges
    else:
        starts = [dag._down[vi]]
    for t in starts:
        while t is not None:
            out.append(dag._labels[t])
            t = link[t]
    return out


@dataclass
class DefaultsTable:
    """Per node: default-path length to the sink and next branching node."""

    dag: SkeletonDag
    d: list
    nb: list

    def depth_of(self, label) -> int:
        return self.d[self.dag._id_of[label]]

    def next_branching_of(self, label):
        t = self.nb[self.dag._id_of[label]]
        return None if t is None else self.dag._labels[t]


def compute_defaults(dag: SkeletonDag) -> DefaultsTable:
    dag._ensure()
    size = len(dag._labels)
    d = [0] * size
    nb = [None] * size
    down = dag._down
    link = dag._link
    sink = dag._sink
    source = dag._source
    for ell in range(dag._m - 1, -1, -1):
        for v in dag._chains[ell]:
            if v == source:
                continue
            t = down[v]
            d[v] = d[t] + 1
            # v is branching iff its down target has a sibling successor
            nb[v] = v if link[t] is not None else nb[t]
    return DefaultsTable(dag, d, nb)


class _PathObject:
    """One stack cell: a segment of the current path plus its branch state.

    v: first node of the segment.  vp: next unexplored non-default edge
    target out of v.  vpp: branching node on the default path below v that
    is explored next.  ell: segment length bookkeeping (default-path objects
    store the full default depth of v).  u: segment endpoint.  alpha: 1 when
    vp or vpp is still set.  depth: number of non-source path nodes up to
    and including v.
    """

    __slots__ = ("v", "vp", "vpp", "ell", "u", "alpha", "depth")

    def __init__(self, v, vp, vpp, ell, u, alpha, depth):
        self.v = v
        self.vp = vp
        self.vpp = vpp
        self.ell = ell
        self.u = u
        self.alpha = alpha
        self.depth = depth


class PathEnumerator:
    """Stateful constant-delay walker over the expanded source-sink paths."""

    def __init__(self, dag: SkeletonDag, defaults: DefaultsTable | None = None,
                 stats: StepCounter | None = None):
        dag._ensure()
        self.dag = dag
        self.defaults = defaults if defaults is not None else compute_defaults(dag)
        self._stats = stats
        cap = 2 * dag._m + 6
        self._S: list = [None] * cap
        self._C: list = [0] * cap
        self._top_s = 0
        self._top_c = 0
        self._edge_pos = 0
        self._emitted = False
        self._exhausted = False

    def _tick(self, k: int = 1):
        if self._stats is not None:
            self._stats.steps += k

    def _push(self, obj: _PathObject):
        self._top_s += 1
        self._S[self._top_s] = obj
        self._tick()
        return self._top_s

    def _point(self, t: int):
        self._top_c += 1
        self._C[self._top_c] = t
        self._tick()

    def advance(self):
        """Emit the next edit script, or None when every path has been output."""
        if self._exhausted:
            return None
        dag = self.dag
        lab = dag._labels
        down = dag._down
        link = dag._link
        d = self.defaults.d
        nb = self.defaults.nb
        snk = dag._sink
        src = dag._source
        while True:
            if self._top_c == 0:
                # either fresh, or the current source-edge group is exhausted
                if self._edge_pos >= len(dag._s_edges):
                    self._tick()
                    self._exhausted = True
                    return None
                v = dag._s_edges[self._edge_pos]
                self._edge_pos += 1
                self._top_s = 0
                self._top_c = 0
                self._tick()
                if v == snk:
                    self._push(_PathObject(src, None, None, 1, v, 0, 0))
                    self._emitted = True
                    self._tick()
                    return EditScript(0, lab[src], (Edge(lab[src], lab[snk]),))
                lv = link[v]
                x1 = _PathObject(src, lv, None, 1, v, 1 if lv is not None else 0, 0)
                t1 = self._push(x1)
                if x1.alpha:
                    self._point(t1)
                dv = down[v]
                vp = link[dv]
                vpp = nb[dv]
                x2 = _PathObject(v, vp, vpp, d[v], snk,
                                 1 if (vp is not None or vpp is not None) else 0, 1)
                t2 = self._push(x2)
                if x2.alpha:
                    self._point(t2)
                self._emitted = True
                self._tick()
                return EditScript(0, lab[src],
                                  (Edge(lab[src], lab[v]), DefaultPath(lab[v], lab[snk])))
            t = self._C[self._top_c]
            self._top_s = t
            x = self._S[t]
            self._tick(2)
            if x.vpp is not None:
                # explore the non-default edge out of the branching node x.vpp
                v2 = x.vpp
                v3 = nb[down[v2]]
                if v3 is not None and d[v3] >= d[x.u]:
                    x.vpp = v3
                else:
                    x.vpp = None
                    x.alpha = 1 if x.vp is not None else 0
                    if x.alpha == 0:
                        self._top_c -= 1
                        self._tick()
                u2 = link[down[v2]]
                lu = link[u2]
                y = _PathObject(v2, lu, None, 1, u2, 1 if lu is not None else 0,
                                x.depth + (x.ell - d[v2]))
                du = down[u2]
                z_vp = link[du]
                z_vpp = nb[du]
                z = _PathObject(u2, z_vp, z_vpp, d[u2], snk,
                                1 if (z_vp is not None or z_vpp is not None) else 0,
                                y.depth + 1)
                ty = self._push(y)
                tz = self._push(z)
                if y.alpha:
                    self._point(ty)
                if z.alpha:
                    self._point(tz)
                segs = []
                if v2 != x.v:
                    segs.append(DefaultPath(lab[x.v], lab[v2]))
                segs.append(Edge(lab[v2], lab[u2]))
                segs.append(DefaultPath(lab[u2], lab[snk]))
                self._tick(len(segs))
                return EditScript(x.depth, lab[x.v], tuple(segs))
            # no branching node pending: explore the non-default edge (x.v, x.vp)
            v1 = x.vp
            x.vp = link[v1]
            x.alpha = 1 if x.vp is not None else 0
            if x.alpha == 0:
                self._top_c -= 1
                self._tick()
            dv = down[v1]
            y_vp = link[dv]
            y_vpp = nb[dv]
            y = _PathObject(v1, y_vp, y_vpp, d[v1], snk,
                            1 if (y_vp is not None or y_vpp is not None) else 0,
                            x.depth + 1)
            ty = self._push(y)
            if y.alpha:
                self._point(ty)
            self._tick(2)
            return EditScript(x.depth, lab[x.v],
                              (Edge(lab[x.v], lab[v1]), DefaultPath(lab[v1], lab[snk])))

    def materialize_current(self):
        """The full node sequence of the most recently emitted path."""
        if not self._emitted:
            raise NoCurrentPath("no path has been enumerated yet")
        dag = self.dag
        lab = dag._labels
        down = dag._down
        level = dag._level
        pos = dag._pos
        snk = dag._sink
        src = dag._source
        firsts = [self._S[t].v for t in range(1, self._top_s + 1)]
        nodes = [lab[src]]
        prev = firsts[0]
        for b in firsts[1:] + [snk]:
            a = prev
            prev = b
            if b == a:
                continue
            if a == src:
                nodes.append(lab[b])
                continue
            da = down[a]
            if b == da or (level[da] == level[b] and pos[da] < pos[b]):
                nodes.append(lab[b])
                continue
            c = da
            while True:
                nodes.append(lab[c])
                if c == b:
                    break
                c = down[c]
        return tuple(nodes)

    def check_invariants(self):
        """Debug helper: the pointer stack mirrors the marked objects in order."""
        marked = [t for t in range(1, self._top_s + 1) if self._S[t].alpha == 1]
        pointed = [self._C[t] for t in range(1, self._top_c + 1)]
        assert marked == pointed, (marked, pointed)
        assert pointed == sorted(pointed)


def enumerate_paths_incremental(dag: SkeletonDag, stats: StepCounter | None = None):
    """Stream of edit scripts covering every expanded source-sink path once."""
    walker = PathEnumerator(dag, stats=stats)
    while (script := walker.advance()) is not None:
        yield script


def enumerate_paths(dag: SkeletonDag):
    """Stream of fully materialized paths, in the same order as the scripts."""
    walker = PathEnumerator(dag)
    while walker.advance() is not None:
        yield walker.materialize_current()


def replay_paths(dag: SkeletonDag, scripts):
    """Reconstruct the path stream from edit scripts."""
    dag._ensure()
    id_of = dag._id_of
    down = dag._down
    lab = dag._labels
    src_label = lab[dag._source]
    cur: list = []
    for sc in scripts:
        nodes = cur[: sc.keep + 1] if cur else [src_label]
        for seg in sc.segments:
            if isinstance(seg, Edge):
                nodes.append(seg.dst)
            elif isinstance(seg, DefaultPath):
                if seg.src == seg.dst:
                    continue
                c = down[id_of[seg.src]]
                target = id_of[seg.dst]
                while True:
                    nodes.append(lab[c])
                    if c == target:
                        break
                    c = down[c]
            else:
                raise ValueError(f"unexpected segment {seg!r} in a path stream")
        cur = nodes
        yield tuple(nodes)


def count_paths(dag: SkeletonDag) -> int:
    """Number of source-sink paths of the expanded DAG (exact integer)."""
    dag._ensure()
    if dag._m == 0:
        return 0
    size = len(dag._labels)
    paths = [0] * size
    tails = [0] * size
    down = dag._down
    sink = dag._sink
    paths[sink] = 1
    tails[sink] = 1
    for ell in range(dag._m - 1, 0, -1):
        ids = dag._chains[ell]
        for v in ids:
            paths[v] = tails[down[v]]
        acc = 0
        for v in reversed(ids):
            acc += paths[v]
            tails[v] = acc
    return sum(tails[t] for t in dag._s_edges)
