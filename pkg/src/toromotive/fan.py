"""Simplicial fans in the cocharacter space: construction, validation, refinement."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .errors import MalformedFan, NotRefinement, RayOutsideSupport
from .polyhedral import (
    Cone,
    coefficients,
    determinant,
    pairwise_common_faces,
    primitive,
    rational_inverse,
)
from .root_datum import RootDatum, mat_vec, pairing, weyl_group


@dataclass(frozen=True)
class Fan:
    """Rays are referenced by index; a maximal cone is a sorted tuple of indices."""

    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cones(cls, cones: Iterable[Cone | Sequence[Sequence[int]]]) -> Fan:
        rays: list[tuple[int, ...]] = []
        index: dict[tuple[int, ...], int] = {}
        cone_set = set()
        for c in cones:
            ray_list = c.rays if isinstance(c, Cone) else [primitive(r) for r in c]
            ids = []
            for r in ray_list:
                if r not in index:
                    index[r] = len(rays)
                    rays.append(r)
                ids.append(index[r])
            cone_set.add(tuple(sorted(ids)))
        return cls(tuple(rays), tuple(sorted(cone_set)))

    def cone(self, idx: Sequence[int]) -> Cone:
        return Cone(tuple(self.rays[i] for i in idx))

    def cones(self) -> list[Cone]:
        return [self.cone(c) for c in self.max_cones]

    def cone_set(self) -> frozenset[frozenset[tuple[int, ...]]]:
        """Index-free identity of the fan, for comparisons."""
        return frozenset(frozenset(self.rays[i] for i in c) for c in self.max_cones)

    @property
    def rank(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    def check_structure(self, rank: int) -> None:
        """Raise :class:`MalformedFan` on the first structural defect."""
        seen_rays = set()
        for r in self.rays:
            if len(r) != rank:
                raise MalformedFan(f"ray {list(r)} has length {len(r)}, expected {rank}")
            if all(x == 0 for x in r):
                raise MalformedFan("zero ray")
            if primitive(r) != tuple(r):
                raise MalformedFan(f"ray {list(r)} is not primitive")
            if tuple(r) in seen_rays:
                raise MalformedFan(f"duplicate ray {list(r)}")
            seen_rays.add(tuple(r))
        seen_cones = set()
        for c in self.max_cones:
            if len(c) != rank:
                raise MalformedFan(f"cone {list(c)} has {len(c)} rays, expected {rank}")
            if len(set(c)) != len(c):
                raise MalformedFan(f"cone {list(c)} repeats a ray index")
            if any(not 0 <= i < len(self.rays) for i in c):
                raise MalformedFan(f"cone {list(c)} has an index out of range")
            key = tuple(sorted(c))
            if key in seen_cones:
                raise MalformedFan(f"duplicate cone {list(c)}")
            seen_cones.add(key)
        if not self.max_cones:
            raise MalformedFan("fan has no maximal cones")


@dataclass(frozen=True)
class FanReport:
    simplicial: bool
    smooth: bool
    complete: bool
    faces_ok: bool
    w_invariant: bool
    refines_chambers: bool
    s: int
    k: int

    @property
    def admissible(self) -> bool:
        return self.failed_field() is None

    def failed_field(self) -> str | None:
        for name in ("simplicial", "faces_ok", "smooth", "complete", "w_invariant", "refines_chambers"):
            if not getattr(self, name):
                return name
        return None

    def to_dict(self) -> dict:
        return asdict(self)


def negative_chamber_rays(rd: RootDatum) -> list[tuple[int, ...]]:
    """Primitive generators of Omega = {x : <alpha_i, x> <= 0 for all i}."""
    n = rd.rank
    if not rd.simply_connected:
        return [tuple(-int(i == j) for i in range(n)) for j in range(n)]
    # fundamental coweight j solves A x = e_j, i.e. column j of A^{-1}
    inv = rational_inverse(rd.cartan)
    out = []
    for j in range(n):
        col = [inv[i][j] for i in range(n)]
        den = lcm(*(x.denominator for x in col))
        out.append(primitive([-int(x * den) for x in col]))
    return out


def in_negative_chamber(rd: RootDatum, v: Sequence[int]) -> bool:
    return all(pairing(a, v) <= 0 for a in rd.simple_roots)


def weyl_chamber_fan(rd: RootDatum) -> Fan:
    omega = negative_chamber_rays(rd)
    cones = []
    for w in weyl_group(rd):
        cones.append([mat_vec(w.cochar_matrix, r) for r in omega])
    return Fan.from_cones(cones)


def _to_negative_chamber(rd: RootDatum, v: Sequence[int]) -> list[int]:
    """Word (applied left to right) of simple reflections taking v into Omega."""
    v = tuple(v)
    word = []
    roots, coref = rd.simple_roots, rd.simple_coreflections
    while True:
        for i, a in enumerate(roots):
            if pairing(a, v) > 0:
                v = mat_vec(coref[i], v)
                word.append(i)
                break
        else:
            return word


def _apply_word(rd: RootDatum, word: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    coref = rd.simple_coreflections
    v = tuple(v)
    for i in word:
        v = mat_vec(coref[i], v)
    return v


def cone_in_single_chamber(rd: RootDatum, cone: Cone) -> bool:
    interior = [sum(col) for col in zip(*cone.rays)]
    word = _to_negative_chamber(rd, interior)
    return all(in_negative_chamber(rd, _apply_word(rd, word, r)) for r in cone.rays)


def _is_w_invariant(rd: RootDatum, f: Fan) -> bool:
    index = {r: i for i, r in enumerate(f.rays)}
    cone_set = set(f.max_cones)
    for m in rd.simple_coreflections:
        perm = []
        for r in f.rays:
            img = mat_vec(m, r)
            if img not in index:
                return False
            perm.append(index[img])
        for c in f.max_cones:
            if tuple(sorted(perm[i] for i in c)) not in cone_set:
                return False
    return True


def _is_complete(f: Fan, rank: int) -> bool:
    walls = defaultdict(list)
    for ci, c in enumerate(f.max_cones):
        for face in combinations(c, rank - 1):
            walls[face].append(ci)
    if any(len(v) != 2 for v in walls.values()):
        return False
    adj = defaultdict(set)
    for a, b in walls.values():
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for v in adj[u] - seen:
            seen.add(v)
            stack.append(v)
    return len(seen) == len(f.max_cones)


@lru_cache(maxsize=256)
def validate_fan(rd: RootDatum | int, f: Fan) -> FanReport:
    """Structural and geometric checks.

    With an integer in place of a root datum only the toric checks apply and
    the Weyl-group fields are reported as ``True`` with ``k = s``.
    """
    toric = isinstance(rd, int)
    rank = rd if toric else rd.rank
    f.check_structure(rank)
    dets = [determinant(f.cone(c).rays) for c in f.max_cones]
    simplicial = all(d != 0 for d in dets)
    smooth = simplicial and all(abs(d) == 1 for d in dets)
    faces_ok = False
    if simplicial:
        faces_ok = pairwise_common_faces(rank, f.cones())
    complete = simplicial and faces_ok and _is_complete(f, rank)
    if toric:
        return FanReport(simplicial, smooth, complete, faces_ok, True, True, len(f.max_cones), len(f.max_cones))
    w_inv = _is_w_invariant(rd, f)
    refines = simplicial and all(cone_in_single_chamber(rd, f.cone(c)) for c in f.max_cones)
    k = len(cones_in_negative_chamber(rd, f))
    return FanReport(simplicial, smooth, complete, faces_ok, w_inv, refines, len(f.max_cones), k)


def cones_in_negative_chamber(rd: RootDatum, f: Fan) -> list[Cone]:
    return [f.cone(c) for c in f.max_cones if all(in_negative_chamber(rd, f.rays[i]) for i in c)]


def stellar_subdivide(rd: RootDatum | int, f: Fan, ray: Sequence[int]) -> Fan:
    """Star subdivision of ``f`` at ``ray``."""
    ray = primitive(ray)
    if ray in f.rays:
        return f
    new_cones = []
    hit = False
    for c in f.max_cones:
        cone = f.cone(c)
        if determinant(cone.rays) == 0:
            raise MalformedFan(f"cone {list(c)} is not full-dimensional")
        lam = coefficients(cone, ray)
        if any(x < 0 for x in lam):
            new_cones.append(cone.rays)
            continue
        hit = True
        for j, x in enumerate(lam):
            if x > 0:
                rays = list(cone.rays)
                rays[j] = ray
                new_cones.append(rays)
    if not hit:
        raise RayOutsideSupport(f"ray {list(ray)} is not in the support of the fan")
    return Fan.from_cones(new_cones)


def symmetrize(rd: RootDatum, f: Fan) -> Fan:
    """W-orbit closure of the cones of ``f`` lying in the negative chamber."""
    for c in f.max_cones:
        if not cone_in_single_chamber(rd, f.cone(c)):
            raise NotRefinement(f"cone {[list(f.rays[i]) for i in c]} crosses a chamber wall")
    inner = cones_in_negative_chamber(rd, f)
    cones = []
    for w in weyl_group(rd):
        for cone in inner:
            cones.append([mat_vec(w.cochar_matrix, r) for r in cone.rays])
    return Fan.from_cones(cones)

