"""Finite simplicial complexes, self-maps, and exact rational cohomology.

Betti numbers come from integer coboundary matrices through the Smith
normal form engine in `linalg`; induced endomorphisms are produced in a
deterministic cocycle basis (lexicographic pivot order) so matrices are
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import GradedTrace, RationalMatrix, integer_rank


def _vkey(v):
    return (type(v).__name__, v)


def _canon(simplex):
    items = list(simplex)
    verts = tuple(sorted(set(items), key=_vkey))
    if len(verts) != len(items):
        raise ValueError(f"simplex has repeated vertices: {items!r}")
    return verts


class SimplicialComplex:
    """A finite abstract simplicial complex, closed under taking faces."""

    __slots__ = ("vertices", "simplices", "dimension")

    def __init__(self, simplices):
        simps = set()
        for s in simplices:
            simps.add(_canon(s))
        for s in simps:
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face and face not in simps:
                    raise ValueError(f"not face-closed: missing {face!r} of {s!r}")
        self.simplices = frozenset(simps)
        self.vertices = tuple(sorted({v for s in simps for v in s}, key=_vkey))
        self.dimension = max((len(s) - 1 for s in simps), default=-1)

    @classmethod
    def from_maximal(cls, simplices) -> "SimplicialComplex":
        """Build a complex from generating simplices, closing under faces."""
        closed = set()
        stack = [_canon(s) for s in simplices]
        while stack:
            s = stack.pop()
            if s in closed or not s:
                continue
            closed.add(s)
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face:
                    stack.append(face)
        return cls(closed)

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    def p_simplices(self, p: int):
        """Sorted list of the p-dimensional simplices (the degree-p basis)."""
        return sorted((s for s in self.simplices if len(s) == p + 1),
                      key=lambda s: tuple(_vkey(v) for v in s))

    def has_simplex(self, simplex) -> bool:
        return _canon(simplex) in self.simplices

    def is_subcomplex(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def full_subcomplex(self, verts) -> "SimplicialComplex":
        vs = set(verts)
        return SimplicialComplex(s for s in self.simplices if set(s) <= vs)

    def is_full_in(self, other: "SimplicialComplex") -> bool:
        """True if this subcomplex contains every simplex of `other` whose
        vertices all lie in it."""
        vs = set(self.vertices)
        for s in other.simplices:
            if set(s) <= vs and s not in self.simplices:
                return False
        return True

    def coboundary_matrix(self, p: int):
        """Integer matrix of the degree-p coboundary, rows indexed by
        (p+1)-simplices and columns by p-simplices."""
        lower = self.p_simplices(p)
        upper = self.p_simplices(p + 1)
        index = {s: i for i, s in enumerate(lower)}
        mat = [[0] * len(lower) for _ in upper]
        for r, s in enumerate(upper):
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                mat[r][index[face]] = (-1) ** j
        return mat

    def components(self):
        """Connected components as sorted vertex tuples (union-find)."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for s in self.simplices:
            if len(s) >= 2:
                root = find(s[0])
                for v in s[1:]:
                    parent[find(v)] = root
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted((tuple(sorted(g, key=_vkey)) for g in groups.values()),
                      key=lambda c: tuple(_vkey(v) for v in c))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return (f"SimplicialComplex({len(self.vertices)} vertices, "
                f"dim {self.dimension})")


class SimplicialMap:
    """A simplicial map given by a total vertex assignment."""

    __slots__ = ("source", "target", "vertex_map")

    def __init__(self, source, target, vertex_map):
        vm = dict(vertex_map)
        missing = [v for v in source.vertices if v not in vm]
        if missing:
            raise ValueError(f"vertex map is not total; missing {missing!r}")
        for s in source.simplices:
            image = {vm[v] for v in s}
            if not target.has_simplex(tuple(image)):
                raise ValueError(f"image of {s!r} is not a simplex of the target")
        self.source = source
        self.target = target
        self.vertex_map = vm

    @classmethod
    def identity(cls, k: SimplicialComplex) -> "SimplicialMap":
        return cls(k, k, {v: v for v in k.vertices})

    def is_self_map(self) -> bool:
        return self.source == self.target

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other."""
        if other.target != self.source:
            raise ValueError("maps are not composable")
        return SimplicialMap(other.source, self.target,
                             {v: self.vertex_map[w]
                              for v, w in other.vertex_map.items()})

    def preserves(self, sub: SimplicialComplex) -> bool:
        return all(self.vertex_map[v] in set(sub.vertices) for v in sub.vertices)

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (self.source, self.target, self.vertex_map) == \
               (other.source, other.target, other.vertex_map)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(
            self.vertex_map.items(), key=lambda kv: _vkey(kv[0])))))


@dataclass(frozen=True)
class CohomologyProfile:
    """Per-degree rational cohomology dimensions, with optional matrices
    of an induced endomorphism in the fixed cocycle basis."""

    dimensions: tuple
    matrices: tuple | None = None

    def graded_trace(self) -> GradedTrace:
        if self.matrices is None:
            raise ValueError("profile carries no endomorphism matrices")
        return GradedTrace((d, m.trace()) for d, m in enumerate(self.matrices))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.dimensions))


def _sort_sign(values):
    """Sign of the permutation sorting `values`, or 0 on a repeat."""
    vals = list(values)
    if len(set(vals)) != len(vals):
        return 0
    sign = 1
    keys = [_vkey(v) for v in vals]
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] > keys[j]:
                keys[i], keys[j] = keys[j], keys[i]
                sign = -sign
    return sign


class _Cochains:
    """Cochain workspace for a complex, optionally relative to a full
    subcomplex (cochains vanishing on it)."""

    def __init__(self, complex_, sub=None):
        self.complex = complex_
        self.subsimplices = sub.simplices if sub is not None else frozenset()
        self.dim = complex_.dimension

    def basis(self, p):
        return [s for s in self.complex.p_simplices(p)
                if s not in self.subsimplices]

    def coboundary(self, p) -> RationalMatrix:
        lower = self.basis(p)
        upper = self.basis(p + 1)
        index = {s: i for i, s in enumerate(lower)}
        rows = [[0] * len(lower) for _ in upper]
        for r, s in enumerate(upper):
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                if face in index:
                    rows[r][index[face]] = (-1) ** j
        if not upper or not lower:
            return RationalMatrix([], shape=(len(upper), len(lower)))
        return RationalMatrix(rows)

    def coboundary_int(self, p):
        m = self.coboundary(p)
        return [[int(x) for x in row] for row in m.entries]

    def betti(self, p) -> int:
        n = len(self.basis(p))
        if n == 0:
            return 0
        rank_out = integer_rank(self.coboundary_int(p))
        rank_in = integer_rank(self.coboundary_int(p - 1)) if p > 0 else 0
        return n - rank_out - rank_in

    def cohomology_basis(self, p):
        """Deterministic data for H^p: boundary-space columns, chosen
        cocycle representatives, and the stacked solve matrix."""
        delta = self.coboundary(p)
        cocycles = delta.kernel_basis() if delta.cols else []
        n = len(self.basis(p))
        if p > 0:
            below = self.coboundary(p - 1)
            # image of the lower coboundary = its column space
            boundaries = below.column_space_basis() if below.cols else []
        else:
            boundaries = []
        acc = RationalMatrix.from_columns(boundaries, n)
        reps = []
        current_rank = acc.rank() if acc.cols else 0
        for z in cocycles:
            trial = acc.hstack(RationalMatrix.from_columns([z], n))
            r = trial.rank()
            if r > current_rank:
                acc = trial
                current_rank = r
                reps.append(z)
        return boundaries, reps, acc

    def induced_matrix(self, vertex_map, p) -> RationalMatrix:
        """Matrix of the pullback on H^p in the deterministic basis."""
        boundaries, reps, acc = self.cohomology_basis(p)
        k = len(reps)
        if k == 0:
            return RationalMatrix([], shape=(0, 0))
        basis_p = self.basis(p)
        index = {s: i for i, s in enumerate(basis_p)}
        nb = len(boundaries)

        def pullback(vec):
            out = [Fraction(0)] * len(basis_p)
            for i, s in enumerate(basis_p):
                image = [vertex_map[v] for v in s]
                sign = _sort_sign(image)
                if sign == 0:
                    continue
                t = tuple(sorted(image, key=_vkey))
                j = index.get(t)
                if j is not None:
                    out[i] = sign * vec[j]
            return tuple(out)

        cols = []
        for z in reps:
            fz = pullback(z)
            coords = acc.solve(fz)
            if coords is None:
                raise ValueError("pullback of a cocycle left the cocycle space")
            cols.append(tuple(coords[nb:nb + k]))
        return RationalMatrix.from_columns(cols, k)


def cohomology(k: SimplicialComplex) -> CohomologyProfile:
    """Rational Betti numbers of a non-empty complex, degree by degree."""
    if k.is_empty:
        raise ValueError("cohomology of the empty complex is not defined here")
    ws = _Cochains(k)
    dims = tuple(ws.betti(p) for p in range(k.dimension + 1))
    return CohomologyProfile(dims)


def induced_endomorphism(f: SimplicialMap) -> CohomologyProfile:
    """Matrices of the pullback of a simplicial self-map on each H^p."""
    if not f.is_self_map():
        raise ValueError("induced endomorphism needs a self-map")
    ws = _Cochains(f.source)
    dims = []
    mats = []
    for p in range(f.source.dimension + 1):
        m = ws.induced_matrix(f.vertex_map, p)
        dims.append(m.rows)
        mats.append(m)
    return CohomologyProfile(tuple(dims), tuple(mats))


def lefschetz_number(f: SimplicialMap) -> Fraction:
    """Alternating sum of traces of the induced cohomology endomorphism."""
    profile = induced_endomorphism(f)
    return profile.graded_trace().alternating_sum()


def relative_cohomology(k: SimplicialComplex, sub: SimplicialComplex,
                        self_map: SimplicialMap | None = None) -> CohomologyProfile:
    """Cohomology of the pair (k, sub); with a sub-preserving self-map,
    also the induced endomorphism matrices.

    For a full subcomplex this computes the compactly supported
    cohomology of the open complement.
    """
    if not sub.is_subcomplex(k):
        raise ValueError("sub is not a subcomplex")
    if not sub.is_empty and not sub.is_full_in(k):
        raise ValueError("sub is not a full subcomplex")
    ws = _Cochains(k, sub)
    dims = tuple(ws.betti(p) for p in range(k.dimension + 1))
    if self_map is None:
        return CohomologyProfile(dims)
    if self_map.source != k or not self_map.is_self_map():
        raise ValueError("self_map must be a self-map of k")
    if not sub.is_empty and not self_map.preserves(sub):
        raise ValueError("self_map does not preserve the subcomplex")
    mats = tuple(ws.induced_matrix(self_map.vertex_map, p)
                 for p in range(k.dimension + 1))
    dims = tuple(m.rows for m in mats)
    return CohomologyProfile(dims, mats)


# -- text format ---------------------------------------------------------
#
# Complexes: one simplex per line, vertices separated by whitespace.
# Maps: one "source target" vertex pair per line.

def _token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def read_complex(text: str) -> SimplicialComplex:
    simplices = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        simplices.append([_token(t) for t in line.split()])
    if not simplices:
        raise ValueError("no simplices in input")
    return SimplicialComplex.from_maximal(simplices)


def read_vertex_map(text: str, source: SimplicialComplex,
                    target: SimplicialComplex) -> SimplicialMap:
    vm = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [_token(t) for t in line.split()]
        if len(parts) != 2:
            raise ValueError(f"map lines need exactly two vertices: {raw!r}")
        vm[parts[0]] = parts[1]
    return SimplicialMap(source, target, vm)


def write_complex(k: SimplicialComplex) -> str:
    maximal = [s for s in k.simplices
               if not any(set(s) < set(t) for t in k.simplices)]
    maximal.sort(key=lambda s: (len(s), tuple(_vkey(v) for v in s)))
    return "\n".join(" ".join(str(v) for v in s) for s in maximal) + "\n"


# -- standard triangulations ----------------------------------------------

def point_complex(label="pt") -> SimplicialComplex:
    return SimplicialComplex.from_maximal([[label]])


def path_complex(lo: int, hi: int) -> SimplicialComplex:
    """Triangulated interval with integer vertices lo..hi."""
    if hi < lo:
        raise ValueError("empty path")
    if hi == lo:
        return point_complex(lo)
    return SimplicialComplex.from_maximal([[i, i + 1] for i in range(lo, hi)])


def circle_complex(n: int = 6) -> SimplicialComplex:
    """Cyclic polygon with n >= 3 vertices 0..n-1."""
    if n < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    return SimplicialComplex.from_maximal(
        [[i, (i + 1) % n] for i in range(n)])


def tetrahedron_sphere() -> SimplicialComplex:
    """Boundary of the tetrahedron: the smallest triangulated 2-sphere."""
    return SimplicialComplex.from_maximal(
        [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def octahedron_sphere() -> SimplicialComplex:
    """Octahedral 2-sphere on vertices px, nx, py, ny, pz, nz.

    Supports simplicial quarter- and half-turns about the z-axis and the
    antipodal map, which makes it the preferred sphere for symmetry work.
    """
    faces = []
    for x in ("px", "nx"):
        for y in ("py", "ny"):
            for z in ("pz", "nz"):
                faces.append([x, y, z])
    return SimplicialComplex.from_maximal(faces)


def octahedron_rotation(quarter_turns: int) -> dict:
    """Vertex map of a rotation by quarter_turns * 90 degrees about z."""
    cycle = ["px", "py", "nx", "ny"]
    k = quarter_turns % 4
    vm = {v: cycle[(i + k) % 4] for i, v in enumerate(cycle)}
    vm["pz"] = "pz"
    vm["nz"] = "nz"
    return vm


def csaszar_torus() -> SimplicialComplex:
    """Minimal 7-vertex torus; every pair of vertices spans an edge."""
    faces = []
    for i in range(7):
        faces.append([i % 7, (i + 1) % 7, (i + 3) % 7])
        faces.append([i % 7, (i + 2) % 7, (i + 3) % 7])
    return SimplicialComplex.from_maximal(faces)


def grid_torus(n: int = 3) -> SimplicialComplex:
    """n x n diagonal-split grid torus on vertex pairs (i, j) mod n.

    Unlike the 7-vertex torus this has full-subcomplex circles (the rows),
    which is what the flow verifications with removed circles need.
    """
    if n < 3:
        raise ValueError("grid torus needs n >= 3")
    faces = []
    for i in range(n):
        for j in range(n):
            a = (i, j)
            b = ((i + 1) % n, j)
            c = ((i + 1) % n, (j + 1) % n)
            d = (i, (j + 1) % n)
            faces.append([a, b, c])
            faces.append([a, c, d])
    return SimplicialComplex.from_maximal(faces)


def grid_torus_row(n: int = 3, j: int = 0) -> SimplicialComplex:
    """Row circle of the grid torus as a full subcomplex."""
    return SimplicialComplex.from_maximal(
        [[(i, j), ((i + 1) % n, j)] for i in range(n)])


def disk_complex(n: int = 6) -> SimplicialComplex:
    """Cone over the n-gon: a triangulated disk with center vertex 'c'."""
    return SimplicialComplex.from_maximal(
        [["c", i, (i + 1) % n] for i in range(n)])


def annulus_complex(n: int = 6) -> SimplicialComplex:
    """Triangulated annulus between vertex rings (i, 0) and (i, 1)."""
    faces = []
    for i in range(n):
        a, b = (i, 0), ((i + 1) % n, 0)
        c, d = (i, 1), ((i + 1) % n, 1)
        faces.append([a, b, d])
        faces.append([a, c, d])
    return SimplicialComplex.from_maximal(faces)
