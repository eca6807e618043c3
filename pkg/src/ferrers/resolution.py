"""The labeled cell complex inside Delta_{n-1} x Delta_{m-1} and its cellular resolution.

A face is a pair (S, T) of nonempty row and column sets; it belongs to the complex
for a partition when every box x_i y_j (i in S, j in T) lies in the tableau, which
amounts to max(T) <= lambda_{max(S)}.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .combinatorics import Partition, binomial


@dataclass(frozen=True, order=True)
class CellFace:
    S: tuple
    T: tuple

    @property
    def dim(self) -> int:
        return len(self.S) + len(self.T) - 2

    def label(self) -> tuple:
        """Support of the monomial prod x_i * prod y_j as (x-indices, y-indices)."""
        return self.S, self.T

    def label_str(self) -> str:
        return "".join(f"x{i}" for i in self.S) + "".join(f"y{j}" for j in self.T)

    def facets(self):
        """Yield (facet, variable) with variable = label quotient, e.g. ('x', 3)."""
        if len(self.S) > 1:
            for i in self.S:
                yield CellFace(tuple(v for v in self.S if v != i), self.T), ("x", i)
        if len(self.T) > 1:
            for j in self.T:
                yield CellFace(self.S, tuple(v for v in self.T if v != j)), ("y", j)

    def to_json(self) -> dict:
        return {"S": list(self.S), "T": list(self.T)}


@dataclass
class CellComplex:
    partition: Partition
    faces: list  # faces[k] = sorted list of k-dimensional faces
    index: dict = field(repr=False)  # face -> position inside faces[face.dim]

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    @property
    def f_vector(self) -> tuple:
        return tuple(len(fk) for fk in self.faces)

    def __contains__(self, face):
        return face in self.index

    def facets(self) -> list:
        """Maximal faces."""
        return [f for fk in self.faces for f in fk
                if not any(g in self.index for g in self._cofaces(f))]

    def _cofaces(self, face):
        n, m = self.partition.n, self.partition.m
        for i in range(1, n + 1):
            if i not in face.S:
                yield CellFace(tuple(sorted(face.S + (i,))), face.T)
        for j in range(1, m + 1):
            if j not in face.T:
                yield CellFace(face.S, tuple(sorted(face.T + (j,))))


def _subsets_with_max(top: int):
    """Nonempty subsets of {1..top} that contain top."""
    rest = range(1, top)
    for r in range(top):
        for c in combinations(rest, r):
            yield c + (top,)


def _nonempty_subsets(upto: int):
    items = range(1, upto + 1)
    for r in range(1, upto + 1):
        yield from combinations(items, r)


def build_complex(p: Partition) -> CellComplex:
    by_dim = defaultdict(list)
    for top in range(1, p.n + 1):
        cols = list(_nonempty_subsets(p.part(top)))
        for S in _subsets_with_max(top):
            for T in cols:
                by_dim[len(S) + len(T) - 2].append(CellFace(S, T))
    faces = [sorted(by_dim[k]) for k in range(max(by_dim) + 1)]
    index = {face: pos for fk in faces for pos, face in enumerate(fk)}
    return CellComplex(p, faces, index)


def face_counts(p: Partition) -> tuple:
    """f-vector by counting, without building faces."""
    f = defaultdict(int)
    for top in range(1, p.n + 1):
        for a in range(1, top + 1):
            for b in range(1, p.part(top) + 1):
                f[a + b - 2] += binomial(top - 1, a - 1) * binomial(p.part(top), b)
    return tuple(f[k] for k in range(max(f) + 1))


def combinatorial_type(face: CellFace) -> tuple:
    """(|S|-1, |T|-1): the face is Delta_{|S|-1} x Delta_{|T|-1}."""
    return len(face.S) - 1, len(face.T) - 1


class IncidenceError(ValueError):
    pass


def incidence(P: CellFace, Q: CellFace) -> int:
    """Sign of Q in the boundary of P (tensor-product rule, rows first)."""
    if P.T == Q.T and len(Q.S) == len(P.S) - 1 and set(Q.S) < set(P.S):
        (gone,) = set(P.S) - set(Q.S)
        return -1 if P.S.index(gone) % 2 else 1
    if P.S == Q.S and len(Q.T) == len(P.T) - 1 and set(Q.T) < set(P.T):
        (gone,) = set(P.T) - set(Q.T)
        return -1 if (len(P.S) - 1 + P.T.index(gone)) % 2 else 1
    raise IncidenceError(f"{Q} is not a facet of {P}")


def var_name(var) -> str:
    return f"{var[0]}{var[1]}"


@dataclass
class ChainComplex:
    """Cellular free complex.

    ``augmentation[c]`` is the generator (i, j) labelling vertex c, i.e. the map to R.
    ``maps[k-1]`` is the differential from k-faces to (k-1)-faces as sparse entries
    (row, col, sign, var) with var = ('x', i) or ('y', j).
    """

    complex: CellComplex
    augmentation: list
    maps: list

    @property
    def length(self) -> int:
        return len(self.maps)

    def entries(self, k: int):
        return self.maps[k - 1]

    def to_json(self) -> dict:
        faces = self.complex.faces
        out = {"partition": list(self.complex.partition.parts),
               "f_vector": list(self.complex.f_vector),
               "augmentation": [f"x{i}y{j}" for i, j in self.augmentation],
               "maps": []}
        for k, entries in enumerate(self.maps, start=1):
            out["maps"].append({
                "rows": [f.to_json() for f in faces[k - 1]],
                "cols": [f.to_json() for f in faces[k]],
                "entries": [[r, c, s, var_name(v)] for r, c, s, v in entries],
            })
        return out


def build_resolution(p: Partition, cx: CellComplex | None = None) -> ChainComplex:
    if cx is None:
        cx = build_complex(p)
    aug = [(face.S[0], face.T[0]) for face in cx.faces[0]]
    maps = []
    for k in range(1, cx.dim + 1):
        entries = []
        for col, P in enumerate(cx.faces[k]):
            for Q, var in P.facets():
                entries.append((cx.index[Q], col, incidence(P, Q), var))
        entries.sort()
        maps.append(entries)
    return ChainComplex(cx, aug, maps)


# --- verification -------------------------------------------------------------

def _monomial(S, T, extra=None):
    xs = defaultdict(int)
    ys = defaultdict(int)
    for i in S:
        xs[i] += 1
    for j in T:
        ys[j] += 1
    if extra is not None:
        (xs if extra[0] == "x" else ys)[extra[1]] += 1
    return tuple(sorted(xs.items())), tuple(sorted(ys.items()))


def check_minimal(cc: ChainComplex):
    """First entry whose coefficient is not the single variable m_P / m_Q, or None."""
    faces = cc.complex.faces
    for k, entries in enumerate(cc.maps, start=1):
        for r, c, s, var in entries:
            P, Q = faces[k][c], faces[k - 1][r]
            if s not in (1, -1) or _monomial(Q.S, Q.T, var) != _monomial(P.S, P.T):
                return (k, P, Q)
    return None


def check_composition(cc: ChainComplex):
    """Symbolically expand d_k o d_{k+1} (and the augmentation o d_1); first nonzero or None."""
    faces = cc.complex.faces
    if cc.maps:
        acc = defaultdict(int)
        for r, c, s, var in cc.maps[0]:
            i, j = cc.augmentation[r]
            acc[(c, _monomial((i,), (j,), var))] += s
        bad = [key for key, v in acc.items() if v]
        if bad:
            return (1, faces[1][bad[0][0]])
    for k in range(1, len(cc.maps)):
        lower = defaultdict(list)
        for r, c, s, var in cc.maps[k - 1]:
            lower[c].append((r, s, var))
        acc = defaultdict(int)
        for mid, c, s, var in cc.maps[k]:
            for r, s2, var2 in lower[mid]:
                acc[(r, c, tuple(sorted((var, var2))))] += s * s2
        bad = [key for key, v in acc.items() if v]
        if bad:
            return (k + 1, faces[k + 1][bad[0][1]])
    return None


def restricted_boundaries(cx: CellComplex, A, B):
    """Integer boundary matrices of the faces with S in A and T in B (variables set to 1).

    Returns [d_0, d_1, ...] where d_0 is the augmentation row and d_k maps
    k-faces to (k-1)-faces.
    """
    A, B = set(A), set(B)
    faces = [[f for f in fk if set(f.S) <= A and set(f.T) <= B] for fk in cx.faces]
    while faces and not faces[-1]:
        faces.pop()
    if not faces:
        return []
    pos = [{f: i for i, f in enumerate(fk)} for fk in faces]
    mats = [[[1] * len(faces[0])]]
    for k in range(1, len(faces)):
        mat = [[0] * len(faces[k]) for _ in faces[k - 1]]
        for c, P in enumerate(faces[k]):
            for Q, _ in P.facets():
                mat[pos[k - 1][Q]][c] = incidence(P, Q)
        mats.append(mat)
    return mats


@dataclass
class VerificationReport:
    partition: Partition
    depth: int
    passed: bool = True
    checks: list = field(default_factory=list)
    failure: str | None = None

    def record(self, name, ok, detail=""):
        self.checks.append((name, ok, detail))
        if not ok and self.passed:
            self.passed = False
            self.failure = f"{name}: {detail}"

    def to_json(self) -> dict:
        return {"partition": list(self.partition.parts), "depth": self.depth,
                "passed": self.passed, "failure": self.failure,
                "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks]}


def _subsets(items):
    items = list(items)
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)


def verify_resolution(p: Partition, depth: int = 4, method: str = "exact") -> VerificationReport:
    """Check the cellular complex at increasing depth.

    1 minimality, 2 d o d = 0, 3 f_k = beta_{k+1}, 4 acyclicity of every squarefree
    restriction.  ``method`` is "exact" (rational ranks) or "modular" (ranks mod a
    large prime; any nonzero homology found that way is re-checked exactly).
    """
    from . import oracle, series

    if not 1 <= depth <= 4:
        raise ValueError("depth must be between 1 and 4")
    report = VerificationReport(p, depth)
    cx = build_complex(p)
    cc = build_resolution(p, cx)

    bad = check_minimal(cc)
    report.record("minimality", bad is None,
                  "" if bad is None else f"d_{bad[0]} entry {bad[2]} <- {bad[1]}")
    if depth >= 2:
        bad = check_composition(cc)
        report.record("d∘d=0", bad is None,
                      "" if bad is None else f"d_{bad[0] - 1}∘d_{bad[0]} nonzero on {bad[1]}")
    if depth >= 3:
        beta = series.betti_numbers(p)
        f = cx.f_vector
        mism = [k for k in range(max(len(f), beta.pd)) if (f[k] if k < len(f) else 0) != beta[k + 1]]
        report.record("f_k=beta_{k+1}", not mism,
                      "" if not mism else f"k={mism[0]}: f={f}, beta={beta.beta}")
    if depth >= 4:
        failure = None
        for A in _subsets(range(1, p.n + 1)):
            for B in _subsets(range(1, p.m + 1)):
                mats = restricted_boundaries(cx, A, B)
                if not mats:
                    continue
                ranks = oracle.homology_ranks(mats, method=method)
                if any(ranks) and method != "exact":
                    ranks = oracle.homology_ranks(mats, method="exact")
                if any(ranks):
                    failure = f"multidegree A={A} B={B}: reduced homology {ranks}"
                    break
            if failure:
                break
        report.record("acyclic restrictions", failure is None, failure or "")
    return report
