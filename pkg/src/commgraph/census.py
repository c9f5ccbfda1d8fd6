"""Full census of the commuting graph of a tiny M_n(F_q), on the quotient by centralizer classes."""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass

from .centralizer import centralizer_space
from .distance import DistanceResult, _check_pair
from .errors import BudgetExceeded, InfiniteField
from .fields import FieldSpec, parse_field
from .matrix import Matrix

DEFAULT_CENSUS_BUDGET = 2**24


def _code(M: Matrix, q: int) -> int:
    c = 0
    for x in reversed(M.vec()):
        c = c * q + x
    return c


@dataclass
class CensusGraph:
    field: FieldSpec
    n: int
    reps: list          # class representative matrices
    sizes: list         # class sizes
    keys: list          # canonical centralizer signatures
    adjacency: list     # sorted neighbour lists over class indices
    components: list    # component label per class

    def __post_init__(self):
        self._index = {k: i for i, k in enumerate(self.keys)}
        self._bfs_cache: dict[int, list] = {}

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    @property
    def num_vertices(self) -> int:
        return sum(self.sizes)

    def class_of(self, A: Matrix) -> int:
        return self._index[centralizer_space([A]).key()]

    def bfs(self, src: int) -> list:
        if src not in self._bfs_cache:
            dist = [-1] * self.num_classes
            dist[src] = 0
            dq = deque([src])
            while dq:
                u = dq.popleft()
                for v in self.adjacency[u]:
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        dq.append(v)
            self._bfs_cache[src] = dist
        return self._bfs_cache[src]

    def class_distance(self, a: int, b: int) -> int | None:
        d = self.bfs(a)[b]
        return None if d < 0 else d

    def to_json(self) -> dict:
        return {
            "field": self.field.text(),
            "n": self.n,
            "classes": [
                {"representative": [list(map(self.field.format, r)) for r in M.data], "size": s}
                for M, s in zip(self.reps, self.sizes)
            ],
            "adjacency": [[i, j] for i, nb in enumerate(self.adjacency) for j in nb if i < j],
            "components": self.components,
        }

    def save(self, path: str):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)

    @classmethod
    def from_json(cls, obj: dict) -> CensusGraph:
        F = parse_field(obj["field"])
        n = obj["n"]
        reps = [Matrix(F, [[F.parse(x) for x in r] for r in c["representative"]]) for c in obj["classes"]]
        adj = [[] for _ in reps]
        for i, j in obj["adjacency"]:
            adj[i].append(j)
            adj[j].append(i)
        return cls(
            F,
            n,
            reps,
            [c["size"] for c in obj["classes"]],
            [centralizer_space([M]).key() for M in reps],
            [sorted(a) for a in adj],
            list(obj["components"]),
        )

    @classmethod
    def load(cls, path: str) -> CensusGraph:
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def census_build(n: int, field: FieldSpec, budget: int = DEFAULT_CENSUS_BUDGET) -> CensusGraph:
    F = field
    if not F.is_finite:
        raise InfiniteField("census needs a finite field")
    q = F.order
    total = q ** (n * n)
    if total > budget:
        raise BudgetExceeded(f"q^(n^2) = {total} exceeds the census budget {budget}")
    elems = list(F.elements())
    code_class: dict[int, int] = {}
    index: dict = {}
    reps, sizes, keys, spaces = [], [], [], []
    for vec in itertools.product(elems, repeat=n * n):
        M = Matrix.from_vec(F, n, vec)
        if M.is_scalar():
            continue
        S = centralizer_space([M])
        k = S.key()
        c = index.get(k)
        if c is None:
            c = index[k] = len(reps)
            reps.append(M)
            sizes.append(0)
            keys.append(k)
            spaces.append(S)
        sizes[c] += 1
        code_class[_code(M, q)] = c
    adjacency = []
    for c, S in enumerate(spaces):
        nb = set()
        for X in S.elements():
            if not X.is_scalar():
                d = code_class[_code(X, q)]
                if d != c:
                    nb.add(d)
        adjacency.append(sorted(nb))
    components = [-1] * len(reps)
    label = 0
    for s in range(len(reps)):
        if components[s] >= 0:
            continue
        components[s] = label
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for v in adjacency[u]:
                if components[v] < 0:
                    components[v] = label
                    dq.append(v)
        label += 1
    return CensusGraph(F, n, reps, sizes, keys, adjacency, components)


def census_distance(G: CensusGraph, A: Matrix, B: Matrix) -> DistanceResult:
    _check_pair(A, B)
    if A == B:
        return DistanceResult("d0", [A])
    a, b = G.class_of(A), G.class_of(B)
    if a == b:
        return DistanceResult("d1", [A, B], exhaustion={"method": "census", "same_class": True})
    dist = G.bfs(b)
    if dist[a] < 0:
        return DistanceResult(
            "unreachable", exhaustion={"method": "census", "components": [G.components[a], G.components[b]]}
        )
    path = [A]
    u = a
    while dist[u] > 1:
        u = next(v for v in G.adjacency[u] if dist[v] == dist[u] - 1)
        path.append(G.reps[u])
    path.append(B)
    return DistanceResult(f"d{dist[a]}", path, exhaustion={"method": "census"})


def census_diameter(G: CensusGraph) -> dict:
    """Per-component diameter and vertex-weighted eccentricity histogram."""
    comps: dict[int, list[int]] = {}
    for c, lab in enumerate(G.components):
        comps.setdefault(lab, []).append(c)
    report = []
    for lab, members in sorted(comps.items()):
        hist: Counter = Counter()
        diam = 0
        for c in members:
            dist = G.bfs(c)
            ecc = max(dist[m] for m in members)
            if G.sizes[c] > 1:
                ecc = max(ecc, 1)
            hist[ecc] += G.sizes[c]
            diam = max(diam, ecc)
        report.append(
            {
                "component": lab,
                "classes": len(members),
                "vertices": sum(G.sizes[c] for c in members),
                "diameter": diam,
                "eccentricity_histogram": {str(k): v for k, v in sorted(hist.items())},
            }
        )
    return {
        "field": G.field.text(),
        "n": G.n,
        "vertices": G.num_vertices,
        "classes": G.num_classes,
        "components": len(comps),
        "connected": len(comps) == 1,
        "per_component": report,
    }


def class_eccentricity(G: CensusGraph, c: int) -> int:
    dist = G.bfs(c)
    members = [m for m, lab in enumerate(G.components) if lab == G.components[c]]
    ecc = max(dist[m] for m in members)
    return max(ecc, 1) if G.sizes[c] > 1 else ecc
