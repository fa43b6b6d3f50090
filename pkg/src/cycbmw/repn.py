"""Structure analysis of the constructed algebras.

Jacobson radical (trace-form kernel in characteristic 0; the iterated
p-power trace refinement in characteristic p, evaluated on integer lifts
of the regular representation), Wedderburn block data of the semisimple
quotient through its center, explicit simple right modules via primitive
idempotents, and the idempotent-truncation functor M -> M e.

All linear algebra is exact; random choices (only used to hunt splitting
elements inside a block) are driven by an explicit seed and the
deterministic sweeps run first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import sympy

from .fields import Field, PRIME_FIELD
from .linalg import EchelonSpan, RowBasis, nullspace
from .presentation import StructureAlgebra

DEFAULT_SEED = 20260801


class AnalysisError(RuntimeError):
    """Internal consistency failure; raised rather than reporting bad data."""


# -- traces of the right regular representation -------------------------------

def _basis_traces(A: StructureAlgebra) -> list:
    """t[m] = trace of right multiplication by basis element m."""
    f = A.field
    t = []
    for m in range(A.dim):
        acc = f.zero()
        for k in range(A.dim):
            for j, c in A.product(k, m):
                if j == k:
                    acc = f.add(acc, c)
        t.append(acc)
    return t


def _trace_gram(A: StructureAlgebra) -> list:
    """G[i][j] = tr(R_{b_i b_j}), assembled from structure constants."""
    f = A.field
    t = _basis_traces(A)
    G = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            acc = f.zero()
            for m, c in A.product(i, j):
                if t[m]:
                    acc = f.add(acc, f.mul(c, t[m]))
            row.append(acc)
        G.append(row)
    return G


def _right_matrix_int(A: StructureAlgebra, coords: Dict[int, object]) -> np.ndarray:
    """Integer lift of the right-multiplication matrix (GF(p) only).

    int64 when the arithmetic below cannot overflow, object otherwise."""
    if A._tensor_ok():
        return A.right_matrix_np(coords)
    small = A.dim * (A.field.p - 1) ** 2 < 2**62
    M = np.zeros((A.dim, A.dim), dtype=np.int64 if small else object)
    for k in range(A.dim):
        row = A.mul({k: 1}, coords)
        for j, c in row.items():
            M[k, j] = int(c)
    return M


def _power_trace_mod(M: np.ndarray, power: int, mod: int) -> int:
    """tr(M^power) mod `mod`, by binary powering over Z/mod."""
    n = M.shape[0]
    if n * (mod - 1) ** 2 < 2**62:
        acc = np.eye(n, dtype=np.int64)
        base = M.astype(np.int64) % mod
    else:
        acc = np.eye(n, dtype=object)
        base = M.astype(object) % mod
    e = power
    while e:
        if e & 1:
            acc = acc @ base % mod
        base = base @ base % mod
        e >>= 1
    return int(np.trace(acc)) % mod


def radical(A: StructureAlgebra) -> List[list]:
    """Exact basis (dense row vectors) of the Jacobson radical.

    Characteristic 0: kernel of the associative trace form tr(R_{xy}).
    Characteristic p: the trace-form kernel refined by the p-power trace
    functions f_i(z) = p^{-i} tr(Z^{p^i}) mod p on integer lifts, one
    round per i with p^i <= dim.  The result is certified to be a
    nilpotent two-sided ideal before it is returned.
    """
    f = A.field
    G = _trace_gram(A)
    basis = nullspace(G, A.dim, f)
    if f.kind == PRIME_FIELD:
        p = f.p
        i = 1
        while p**i <= A.dim and basis:
            mod = p ** (i + 1)
            sparse = [{k: c for k, c in enumerate(v) if c} for v in basis]
            # lift once per basis element; R_{xy} lifts as the product of lifts
            lifts = [_right_matrix_int(A, v) for v in sparse]
            safe = A.dim * (p - 1) ** 2 < 2**62
            gram = []
            for Ms in lifts:
                row = []
                for Mt in lifts:
                    if safe and Ms.dtype == np.int64 and Mt.dtype == np.int64:
                        prod = (Ms @ Mt) % mod
                    else:
                        prod = (Ms.astype(object) @ Mt.astype(object)) % mod
                    tr = _power_trace_mod(prod, p**i, mod)
                    if tr % (p**i):
                        raise AnalysisError("p-power trace not divisible as expected")
                    row.append((tr // p**i) % p)
                gram.append(row)
            coords = nullspace(gram, len(basis), f)
            basis = [_combine(coords_row, basis, f) for coords_row in coords]
            i += 1
    _certify_nilpotent_ideal(A, basis)
    return basis


def _combine(coeffs, vectors, f):
    out = [f.zero()] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] = f.add(out[j], f.mul(c, x))
    return out


def _certify_nilpotent_ideal(A: StructureAlgebra, basis: List[list]):
    if not basis:
        return
    f = A.field
    span = EchelonSpan(f, A.dim)
    for v in basis:
        span.insert(v)
    multipliers = list(A.gens.values()) if A.gens else [
        {i: f.one()} for i in range(A.dim)]
    for v in basis:
        sv = {k: c for k, c in enumerate(v) if c}
        for m in multipliers:
            for prod in (A.mul(sv, m), A.mul(m, sv)):
                if not span.contains(A.dense(prod)):
                    raise AnalysisError("radical candidate is not an ideal")
    # repeated squaring of the ideal: dims must strictly fall to 0
    current = [{k: c for k, c in enumerate(v) if c} for v in basis]
    while current:
        nxt_span = EchelonSpan(f, A.dim)
        nxt = []
        for a in current:
            for b in current:
                prod = A.mul(a, b)
                if prod and nxt_span.insert(A.dense(prod)):
                    nxt.append(prod)
        if nxt_span.dim >= len(current):
            raise AnalysisError("radical candidate is not nilpotent")
        current = nxt


# -- semisimple quotient ---------------------------------------------------------

class QuotientData:
    """A/rad as a table algebra plus the projection map."""

    def __init__(self, S: StructureAlgebra, proj: Callable[[Dict[int, object]], Dict[int, object]],
                 lift_rows: List[list]):
        self.S = S
        self.proj = proj
        self.lift_rows = lift_rows


def semisimple_quotient(A: StructureAlgebra, rad_rows: List[list]) -> QuotientData:
    f = A.field
    if not rad_rows:
        return QuotientData(A, lambda coords: dict(coords),
                            [A.dense({i: f.one()}) for i in range(A.dim)])
    span = EchelonSpan(f, A.dim)
    for v in rad_rows:
        span.insert(v)
    pivots = set(span.pivots)
    complement = [j for j in range(A.dim) if j not in pivots]
    pos = {j: t for t, j in enumerate(complement)}

    def project(coords: Dict[int, object]) -> Dict[int, object]:
        vec = span.reduce(A.dense(coords))
        return {pos[j]: vec[j] for j in complement if vec[j]}

    table = {}
    dim = len(complement)
    for a in range(dim):
        for b in range(dim):
            prod = A.mul({complement[a]: f.one()}, {complement[b]: f.one()})
            table[(a, b)] = tuple(sorted(project(prod).items()))
    unit = project(A.unit())
    gens = {name: project(coords) for name, coords in A.gens.items()}
    S = StructureAlgebra.from_table(f, table, dim, unit,
                                    labels=[A.labels[j] for j in complement],
                                    gens=gens, meta={"quotient_of": A.meta.get("n")})
    lift = [A.dense({complement[t]: f.one()}) for t in range(dim)]
    return QuotientData(S, project, lift)


# -- center and central idempotents -------------------------------------------------

def center(S: StructureAlgebra) -> List[list]:
    """Dense basis of the center, solved against the generators
    (or against every basis element when no generator set is known)."""
    f = S.field
    gens = list(S.gens.values()) if S.gens else [{i: f.one()} for i in range(S.dim)]
    equations = []
    for g in gens:
        # z * g - g * z = 0, one equation per output coordinate
        D = [[f.zero()] * S.dim for _ in range(S.dim)]
        for i in range(S.dim):
            right = S.mul({i: f.one()}, g)
            left = S.mul(g, {i: f.one()})
            for j, c in right.items():
                D[i][j] = f.add(D[i][j], c)
            for j, c in left.items():
                D[i][j] = f.sub(D[i][j], c)
        for j in range(S.dim):
            equations.append([D[i][j] for i in range(S.dim)])
    return nullspace(equations, S.dim, f)


def _minimal_polynomial(S: StructureAlgebra, w: Dict[int, object],
                        unit: Dict[int, object]) -> list:
    """Monic minimal polynomial (ascending raw coefficients) of w in the
    unital algebra (span, unit)."""
    f = S.field
    span = EchelonSpan(f, S.dim)
    span.insert(S.dense(unit))
    Rw = S.right_matrix_np(w) if S._tensor_ok() else None
    power_rows = [S.dense(unit)]
    cur_vec = S.dense(unit)
    cur = dict(unit)
    while True:
        if Rw is not None:
            cur_vec = [int(x) for x in
                       (np.asarray(cur_vec, dtype=np.int64) @ Rw) % f.p]
        else:
            cur = S.mul(cur, w)
            cur_vec = S.dense(cur)
        if not span.insert(list(cur_vec)):
            basis = RowBasis(power_rows, f)
            coeffs = basis.coords(cur_vec)
            mp = [f.neg(c) for c in coeffs] + [f.one()]
            return mp
        power_rows.append(list(cur_vec))


def _sympy_poly(coeffs, f: Field):
    x = sympy.Symbol("x")
    if f.kind == PRIME_FIELD:
        return sympy.Poly(list(reversed([int(c) for c in coeffs])), x, modulus=f.p)
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator)
                                     for c in coeffs])), x, domain="QQ")


def _coeffs_from_sympy(poly, f: Field) -> list:
    cs = list(reversed(poly.all_coeffs()))
    if f.kind == PRIME_FIELD:
        return [int(c) % f.p for c in cs]
    from fractions import Fraction
    return [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in cs]


def _coprime_idempotent_polys(mp_coeffs, f: Field):
    """Polynomials h_a with h_a = 1 mod primary factor a, 0 mod the rest.

    Empty list when the minimal polynomial is primary (no split there)."""
    poly = _sympy_poly(mp_coeffs, f)
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return []
    primaries = [fac**mult for fac, mult in factors]
    out = []
    for a, pa in enumerate(primaries):
        rest = sympy.Poly(1, poly.gen, **_dom_kwargs(f))
        for b, pb in enumerate(primaries):
            if b != a:
                rest = rest * pb
        inv = sympy.invert(rest, pa)
        h = (rest * inv) % poly
        out.append(_coeffs_from_sympy(h, f))
    return out


def _dom_kwargs(f: Field):
    return {"modulus": f.p} if f.kind == PRIME_FIELD else {"domain": "QQ"}


def _eval_poly(S: StructureAlgebra, coeffs, w: Dict[int, object],
               unit: Dict[int, object]) -> Dict[int, object]:
    """Horner evaluation of sum c_k w^k with w^0 = unit."""
    f = S.field
    if S._tensor_ok():
        Rw = S.right_matrix_np(w)
        uvec = np.zeros(S.dim, dtype=np.int64)
        for i, c in unit.items():
            uvec[i] = int(c)
        acc = np.zeros(S.dim, dtype=np.int64)
        for c in reversed(coeffs):
            acc = (acc @ Rw + int(c) * uvec) % f.p
        return {i: int(v) for i, v in enumerate(acc) if v}
    acc: Dict[int, object] = {}
    for c in reversed(coeffs):
        acc = S.mul(acc, w)
        if c:
            for i, uc in unit.items():
                v = f.mul(c, uc)
                acc[i] = f.add(acc.get(i, f.zero()), v)
                if not acc[i]:
                    del acc[i]
    return acc


def central_primitive_idempotents(S: StructureAlgebra,
                                  center_rows: List[list]) -> List[Dict[int, object]]:
    """Split the commutative semisimple center along minimal polynomials."""
    f = S.field
    idems = [S.unit()] if any(S.unit().values()) else []
    for z_row in center_rows:
        z = {i: c for i, c in enumerate(z_row) if c}
        nxt = []
        for eps in idems:
            w = S.mul(S.mul(eps, z), eps)
            mp = _minimal_polynomial(S, w, eps)
            hs = _coprime_idempotent_polys(mp, f)
            if not hs:
                nxt.append(eps)
                continue
            for h in hs:
                part = _eval_poly(S, h, w, eps)
                if part:
                    nxt.append(part)
        idems = nxt
    for eps in idems:
        if S.mul(eps, eps) != eps:
            raise AnalysisError("central idempotent candidate fails e^2 = e")
    return idems


# -- block data and simple modules ------------------------------------------------

@dataclass
class BlockInfo:
    dim: int                     # F-dimension of the block
    center_degree: int           # [Z(block) : F]
    matrix_size: Optional[int]   # d with block = M_d(D), when determined
    division_dim: Optional[int]  # dim_F D for a primitive idempotent, if found
    idempotent: Optional[Dict[int, object]] = None   # primitive, in S coords
    split: bool = False


@dataclass
class WedderburnReport:
    dim: int
    radical_dim: int
    blocks: List[int]
    split: bool
    block_info: List[BlockInfo] = dc_field(default_factory=list)
    caveats: List[str] = dc_field(default_factory=list)

    def block_dims_sorted(self) -> List[int]:
        return sorted(self.blocks, reverse=True)

    def to_json(self, classification_count=None, match=None) -> dict:
        return {
            "dim": self.dim,
            "radical_dim": self.radical_dim,
            "blocks": self.block_dims_sorted(),
            "split": self.split,
            "classification_count": classification_count,
            "match": match,
        }


def _sandwich_rows(S: StructureAlgebra, e: Dict[int, object]):
    """Rows spanning e*S*e: row i = e * b_i * e."""
    if S._tensor_ok():
        p = S.field.p
        return (S.left_matrix_np(e) @ S.right_matrix_np(e) % p).tolist()
    return [S.dense(S.mul(S.mul(e, {i: S.field.one()}), e)) for i in range(S.dim)]


def _left_mult_rows(S: StructureAlgebra, e: Dict[int, object]):
    """Rows spanning e*S: row i = e * b_i."""
    if S._tensor_ok():
        return S.left_matrix_np(e).tolist()
    return [S.dense(S.mul(e, {i: S.field.one()})) for i in range(S.dim)]


def _span_of(S: StructureAlgebra, rows) -> EchelonSpan:
    span = EchelonSpan(S.field, S.dim)
    for row in rows:
        span.insert(row)
    return span


def _block_span(S: StructureAlgebra, eps: Dict[int, object]) -> EchelonSpan:
    return _span_of(S, _sandwich_rows(S, eps))


def _corner_dim(S: StructureAlgebra, e: Dict[int, object]) -> int:
    return _span_of(S, _sandwich_rows(S, e)).dim


def _right_ideal_dim(S: StructureAlgebra, e: Dict[int, object]) -> int:
    return _span_of(S, _left_mult_rows(S, e)).dim


def primitive_idempotent(S: StructureAlgebra, eps: Dict[int, object],
                         seed: int = DEFAULT_SEED,
                         tries: int = 60) -> Optional[Dict[int, object]]:
    """Refine eps to a primitive idempotent of eps*S*eps.

    Deterministic sweep through corner basis elements and their pairwise
    products first, then seeded random corner elements.  Returns None when
    nothing splits within the budget (reported by callers, never fudged).
    """
    f = S.field
    rng = random.Random(seed)
    e = dict(eps)
    guard = 0
    while guard < 200:
        guard += 1
        corner = EchelonSpan(f, S.dim)
        corner_rows = []
        for row in _sandwich_rows(S, e):
            if corner.insert(list(row)):
                corner_rows.append({i: c for i, c in enumerate(row) if c})
        if corner.dim == 1:
            return e
        def candidates():
            # basis sweep first (cheap, catches the classical cases), then
            # seeded combinations, then the quadratic product sweep
            for v in corner_rows:
                yield v
            for _ in range(tries):
                acc: Dict[int, object] = {}
                for v in corner_rows:
                    c = f.of_int(rng.randrange(f.p)) if f.kind == PRIME_FIELD \
                        else f.of_int(rng.randrange(-9, 10))
                    if c:
                        for i, x in v.items():
                            w = f.mul(c, x)
                            acc[i] = f.add(acc.get(i, f.zero()), w)
                            if not acc[i]:
                                del acc[i]
                yield acc
            for a in corner_rows:
                for b in corner_rows:
                    yield S.mul(a, b)
        split_found = False
        for w in candidates():
            if not w:
                continue
            mp = _minimal_polynomial(S, w, e)
            hs = _coprime_idempotent_polys(mp, f)
            if hs:
                part = _eval_poly(S, hs[0], w, e)
                if part and part != e:
                    e = part
                    split_found = True
                    break
        if not split_found:
            return None
    return None


def wedderburn(A: StructureAlgebra, rad_rows: List[list],
               seed: int = DEFAULT_SEED) -> WedderburnReport:
    """Block dimensions of A/rad via central idempotents, exactly.

    Over GF(p) the split decision is rigorous from the center alone
    (finite division rings are fields); a primitive idempotent per block
    is still computed when possible so simple modules can be materialized.
    Over Q splitness is certified only by an explicit primitive idempotent
    with a 1-dimensional corner; otherwise the report carries a caveat.
    """
    f = A.field
    quot = semisimple_quotient(A, rad_rows)
    S = quot.S
    cen = center(S)
    idems = central_primitive_idempotents(S, cen)
    infos = []
    caveats = []
    for eps in idems:
        bdim = _block_span(S, eps).dim
        kdeg = None
        span = EchelonSpan(f, S.dim)
        for z_row in cen:
            z = {i: c for i, c in enumerate(z_row) if c}
            span.insert(S.dense(S.mul(eps, S.mul(z, eps))))
        kdeg = span.dim
        info = BlockInfo(dim=bdim, center_degree=kdeg, matrix_size=None,
                         division_dim=None)
        e = primitive_idempotent(S, eps, seed=seed)
        if e is not None:
            ddim = _corner_dim(S, e)
            rdim = _right_ideal_dim(S, e)
            info.idempotent = e
            info.division_dim = ddim
            info.matrix_size = rdim // ddim
            if rdim % ddim or info.matrix_size**2 * ddim != bdim:
                raise AnalysisError("block dimensions are inconsistent")
            info.split = (ddim == 1)
        else:
            if f.kind == PRIME_FIELD:
                # D is a finite division ring, hence the field of degree kdeg
                d2 = bdim // kdeg
                d = int(round(d2**0.5))
                if d * d * kdeg != bdim:
                    raise AnalysisError("block dimension is not d^2 * k")
                info.matrix_size = d
                info.split = (kdeg == 1)
            else:
                caveats.append(
                    f"block of dim {bdim}: no primitive idempotent found; "
                    "split flag left false")
                info.split = False
        if f.kind == PRIME_FIELD and info.split and info.center_degree != 1:
            raise AnalysisError("split block with nontrivial center degree")
        infos.append(info)
    blocks = [info.matrix_size if info.matrix_size is not None else info.dim
              for info in infos]
    split = all(info.split for info in infos)
    rep = WedderburnReport(dim=A.dim, radical_dim=len(rad_rows), blocks=blocks,
                           split=split, block_info=infos, caveats=caveats)
    if split and sum(d * d for d in rep.blocks) != A.dim - len(rad_rows):
        raise AnalysisError("split block dims do not sum to dim A - dim rad")
    rep._quotient = quot
    rep._central_idempotents = idems
    return rep


def count_simples(A: StructureAlgebra, seed: int = DEFAULT_SEED) -> Tuple[int, bool]:
    """(number of Wedderburn blocks, split flag); the count is the number
    of non-isomorphic simple modules exactly when split is True."""
    rep = wedderburn(A, radical(A), seed=seed)
    return len(rep.blocks), rep.split


# -- modules ------------------------------------------------------------------------

class ModuleRep:
    """Right module given by exact action matrices.

    Rows live in the coordinates of the semisimple quotient S; the action
    of an arbitrary algebra element is computed through the projection, so
    generator matrices and idempotent truncations stay exact.
    """

    def __init__(self, quot: QuotientData, rows: List[list]):
        self.quot = quot
        self.field = quot.S.field
        self.rows = rows
        self.dim = len(rows)
        self.basis = RowBasis(rows, self.field) if rows else None

    def action_matrix(self, coords_in_A: Dict[int, object]) -> List[list]:
        """Matrix of v -> v * a on the row basis."""
        S = self.quot.S
        a = self.quot.proj(coords_in_A)
        if S._tensor_ok():
            Ra = S.right_matrix_np(a)
            imgs = (np.asarray(self.rows, dtype=np.int64) @ Ra) % S.field.p
            imgs = [[int(x) for x in row] for row in imgs]
        else:
            imgs = [S.dense(S.mul({i: c for i, c in enumerate(row) if c}, a))
                    for row in self.rows]
        out = []
        for vec in imgs:
            coords = self.basis.coords(vec)
            if coords is None:
                raise AnalysisError("module rows are not invariant")
            out.append(coords)
        return out

    def generator_matrices(self, A: StructureAlgebra) -> Dict[str, List[list]]:
        return {name: self.action_matrix(coords) for name, coords in A.gens.items()}


def simple_modules(A: StructureAlgebra, report: WedderburnReport) -> List[ModuleRep]:
    """One simple right module per block, as e*(A/rad) for the block's
    primitive idempotent; requires every block to carry one."""
    quot = report._quotient
    S = quot.S
    f = S.field
    out = []
    for info in report.block_info:
        if info.idempotent is None:
            raise AnalysisError(
                "no primitive idempotent available for a block; "
                "simple modules cannot be materialized")
        span = EchelonSpan(f, S.dim)
        for i in range(S.dim):
            span.insert(S.dense(S.mul(info.idempotent, {i: f.one()})))
        out.append(ModuleRep(quot, span.row_lists()))
    return out


def truncate_module(M: ModuleRep, e_coords_A: Dict[int, object],
                    corner: StructureAlgebra) -> "CornerModule":
    """The image M e with the corner algebra acting on it."""
    T = M.action_matrix(e_coords_A)
    f = M.field
    span = EchelonSpan(f, M.dim)
    for row in T:
        span.insert(row)
    rows = span.row_lists()
    if not rows:
        return CornerModule(corner, [], M)
    return CornerModule(corner, rows, M)


class CornerModule:
    """Right module over a corner algebra eAe, carried inside a parent module."""

    def __init__(self, corner: StructureAlgebra, rows: List[list], parent: ModuleRep):
        self.corner = corner
        self.rows = rows             # coordinates inside the parent module
        self.parent = parent
        self.dim = len(rows)
        self.field = corner.field
        self.basis = RowBasis(rows, self.field) if rows else None

    def action_matrix(self, corner_index: int) -> List[list]:
        """Action of the corner basis element (given by its index)."""
        return _corner_action(self, {corner_index: self.field.one()})


@dataclass
class FunctorReport:
    annihilated: int
    survivors: List[Tuple[int, bool]]    # (dimension of Me, simple over corner?)
    corner_blocks: List[int]

    @property
    def surviving(self) -> int:
        return len(self.survivors)


def functor_grading_check(A: StructureAlgebra, corner: StructureAlgebra,
                          simples: List[ModuleRep],
                          e_coords: Dict[int, object],
                          seed: int = DEFAULT_SEED) -> FunctorReport:
    """Apply M -> M e to every simple and test the image against the
    corner's own block data (central character + dimension)."""
    crad = radical(corner)
    crep = wedderburn(corner, crad, seed=seed)
    cquot = crep._quotient
    annihilated = 0
    survivors = []
    for M in simples:
        T = truncate_module(M, e_coords, corner)
        if T.dim == 0:
            annihilated += 1
            continue
        is_simple = _corner_module_is_simple(T, crep, cquot)
        survivors.append((T.dim, is_simple))
    return FunctorReport(annihilated=annihilated, survivors=survivors,
                         corner_blocks=crep.block_dims_sorted())


def _corner_module_is_simple(T: CornerModule, crep: WedderburnReport,
                             cquot: QuotientData) -> bool:
    """Simple iff exactly one block acts nonzero and the dimension matches
    that block's matrix size (valid for split blocks)."""
    hits = []
    for info, eps in zip(crep.block_info, crep._central_idempotents):
        # lift eps back to corner coordinates through the quotient rows
        eps_corner = _lift_from_quotient(T.corner, cquot, eps)
        mat = _corner_action(T, eps_corner)
        if any(any(c for c in row) for row in mat):
            hits.append(info)
    if len(hits) != 1:
        return False
    info = hits[0]
    return info.split and T.dim == info.matrix_size


def _lift_from_quotient(corner: StructureAlgebra, cquot: QuotientData,
                        eps: Dict[int, object]) -> Dict[int, object]:
    f = corner.field
    out: Dict[int, object] = {}
    for i, c in eps.items():
        lift = cquot.lift_rows[i]
        for j, x in enumerate(lift):
            if x:
                v = f.mul(c, x)
                out[j] = f.add(out.get(j, f.zero()), v)
                if not out[j]:
                    del out[j]
    return out


def _corner_action(T: CornerModule, corner_coords: Dict[int, object]) -> List[list]:
    """Action of an arbitrary corner element (corner coordinates) on T."""
    f = T.field
    parent_rows = T.corner.meta["parent_rows"]
    a: Dict[int, object] = {}
    for t, c in corner_coords.items():
        for j, x in enumerate(parent_rows[t]):
            if x:
                v = f.mul(c, x)
                a[j] = f.add(a.get(j, f.zero()), v)
                if not a[j]:
                    del a[j]
    big = T.parent.action_matrix(a)
    out = []
    for row in T.rows:
        img = [f.zero()] * T.parent.dim
        for t, c in enumerate(row):
            if c:
                for j in range(T.parent.dim):
                    if big[t][j]:
                        img[j] = f.add(img[j], f.mul(c, big[t][j]))
        coords = T.basis.coords(img)
        if coords is None:
            raise AnalysisError("corner action left the truncated space")
        out.append(coords)
    return out
