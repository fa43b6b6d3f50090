"""Cyclotomic BMW algebras as explicit structure-constants algebras.

The defining presentation (generators e_i, g_i, x_1 with the inverse-free
relation set, plus the cyclotomic polynomial in x_1) is oriented into a
rewriting system and completed; the irreducible words then form an exact
basis and products are computed by normal form.  Inverses never appear as
generators: g_i^{-1} expands to g_i - delta + delta*e_i and x_1^{-1} to
the cofactor polynomial of prod (x_1 - u_j).

Generator precedence under the degree-lex order:
e_1 < ... < e_{n-1} < g_1 < ... < g_{n-1} < x_1.
"""

from __future__ import annotations

import json
import os
from typing import Dict, List, Optional, Tuple

import numpy as np

from .fields import Field, FieldElement, PRIME_FIELD
from .linalg import EchelonSpan, RowBasis
from .params import ParameterSet, omega
from .rewriting import (CompletionError, RewriteSystem, complete, deglex_key,
                        enumerate_irreducible_words)


class BuildError(ValueError):
    """Invalid build request or a presentation that fails validation."""


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*...*(2n-1)."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def default_degree_cap(n: int, r: int) -> int:
    env = os.environ.get("BMW_DEGREE_CAP")
    if env:
        return int(env)
    return 4 * n + 2 * r


# -- generator coding ---------------------------------------------------------

def gen_count(n: int) -> int:
    return 1 if n == 1 else 2 * n - 1


def E(i: int, n: int) -> int:
    if not 1 <= i <= n - 1:
        raise BuildError(f"e_{i} is out of range for n = {n}")
    return i - 1


def G(i: int, n: int) -> int:
    if not 1 <= i <= n - 1:
        raise BuildError(f"g_{i} is out of range for n = {n}")
    return (n - 1) + (i - 1)


def X(n: int) -> int:
    return 0 if n == 1 else 2 * (n - 1)


def gen_name(gid: int, n: int) -> str:
    if n == 1:
        return "x1"
    if gid < n - 1:
        return f"e{gid + 1}"
    if gid < 2 * (n - 1):
        return f"g{gid - (n - 1) + 1}"
    return "x1"


def word_str(w: bytes, n: int) -> str:
    if not w:
        return "1"
    return ".".join(gen_name(g, n) for g in w)


def parse_word(s: str, n: int) -> bytes:
    if s == "1":
        return b""
    out = []
    for tok in s.split("."):
        if tok == "x1":
            out.append(X(n))
        elif tok.startswith("e"):
            out.append(E(int(tok[1:]), n))
        elif tok.startswith("g"):
            out.append(G(int(tok[1:]), n))
        else:
            raise BuildError(f"bad generator token {tok!r}")
    return bytes(out)


# -- relations ----------------------------------------------------------------

def _x_power_reduction(p: ParameterSet):
    """x^r = sum_{k<r} (-1)^(r-k-1) sigma_{r-k} x^k as a coefficient list."""
    f = p.field
    r = p.r
    coeffs = []
    for k in range(r):
        c = p.sigma[r - k]
        coeffs.append(c if (r - k - 1) % 2 == 0 else -c)
    return coeffs  # index k -> coefficient of x^k


def x_inverse_coeffs(p: ParameterSet):
    """x^{-1} = sum_k c_k x^k with c_k = (-1)^k sigma_{r-1-k} / sigma_r."""
    f = p.field
    r = p.r
    sig_r_inv = p.sigma[r].inv()
    out = []
    for k in range(r):
        c = p.sigma[r - 1 - k] * sig_r_inv
        out.append(c if k % 2 == 0 else -c)
    return out


def canonical_relations(n: int, p: ParameterSet, variant: str = "bmw",
                        orientation13: str = "x1") -> List[dict]:
    """The inverse-free defining equations as sparse elements (== 0).

    variant "ariki_koike" adds e_i -> 0, which collapses the quotient onto
    the cyclotomic Hecke algebra.
    """
    if n < 1:
        raise BuildError("n must be >= 1")
    if variant not in ("bmw", "ariki_koike"):
        raise BuildError(f"unknown variant {variant!r}")
    if orientation13 not in ("x1", "x1inv"):
        raise BuildError(f"unknown relation-13 orientation {orientation13!r}")
    f = p.field
    one = f.one()
    eqs: List[dict] = []

    def eq(*terms):
        d: dict = {}
        for word, coeff in terms:
            c = coeff.value if isinstance(coeff, FieldElement) else coeff
            if word in d:
                s = f.add(d[word], c)
                if s:
                    d[word] = s
                else:
                    del d[word]
            elif c:
                d[word] = c
        if d:
            eqs.append(d)

    x = bytes((X(n),))
    # cyclotomic relation: x^r - (reduction of x^r)
    red = _x_power_reduction(p)
    eq((x * p.r, one), *(((x * k), -red[k]) for k in range(p.r)))

    if n == 1:
        return eqs

    rho = p.rho
    delta = p.delta
    omega0 = p.omega0
    es = [bytes((E(i, n),)) for i in range(1, n)]
    gs = [bytes((G(i, n),)) for i in range(1, n)]
    rel_omegas = p.relation_omegas()

    for i in range(n - 1):
        e, g = es[i], gs[i]
        # (5) e^2 = omega_0 e
        eq((e + e, one), (e, -omega0))
        # (9) corrected: e g = g e = rho e
        eq((e + g, one), (e, -rho))
        eq((g + e, one), (e, -rho))
        # (12) after inverse elimination: g^2 = 1 + delta g - delta rho e
        eq((g + g, one), (b"", -f.one()), (g, -delta), (e, delta * rho))

    for i in range(n - 2):
        e1, e2 = es[i], es[i + 1]
        g1, g2 = gs[i], gs[i + 1]
        # (2) braid
        eq((g1 + g2 + g1, one), (g2 + g1 + g2, -one))
        # (10); the curl between two caps carries the inverse twist scalar:
        # with e_i g_i = rho e_i and g_i g_{i+1} e_i = e_{i+1} e_i, reducing
        # e_i g_i g_{i+1} e_i both ways forces e_i g_{i+1} e_i = rho^{-1} e_i
        eq((e1 + g2 + e1, one), (e1, -rho.inv()))
        eq((e2 + g1 + e2, one), (e2, -rho.inv()))
        eq((e1 + e2 + e1, one), (e1, -one))
        eq((e2 + e1 + e2, one), (e2, -one))
        # (11)
        eq((g1 + g2 + e1, one), (e2 + e1, -one))
        eq((g2 + g1 + e2, one), (e1 + e2, -one))
        eq((e1 + g2 + g1, one), (e1 + e2, -one))
        eq((e2 + g1 + g2, one), (e2 + e1, -one))

    for i in range(n - 1):
        for j in range(n - 1):
            if abs(i - j) > 1 and i < j:
                # (3) and (8): distant generators commute
                eq((gs[i] + gs[j], one), (gs[j] + gs[i], -one))
                eq((es[i] + es[j], one), (es[j] + es[i], -one))
                eq((gs[i] + es[j], one), (es[j] + gs[i], -one))
                eq((es[i] + gs[j], one), (gs[j] + es[i], -one))

    # (4) and (7): x_1 interactions
    e1w, g1w = es[0], gs[0]
    eq((x + g1w + x + g1w, one), (g1w + x + g1w + x, -one))
    for j in range(1, n - 1):
        eq((x + gs[j], one), (gs[j] + x, -one))

    # (6) pole relations for irreducible x-powers
    for a in range(1, p.r):
        eq((e1w + x * a + e1w, one), (e1w, -rel_omegas[a]))

    # (13): left clause as printed; right clause per configured orientation
    eq((e1w + x + g1w + x + g1w, one), (e1w, -one))
    if orientation13 == "x1":
        eq((g1w + x + g1w + x + e1w, one), (e1w, -one))
    else:
        xinv = x_inverse_coeffs(p)
        terms = [(g1w + x * k + g1w + x + e1w, xinv[k]) for k in range(p.r)]
        eq(*terms, (e1w, -one))

    if variant == "ariki_koike":
        for e in es:
            eq((e, one))
    return eqs


# -- the algebra object ---------------------------------------------------------

class StructureAlgebra:
    """Finite-dimensional algebra with an explicit basis and exact products.

    Two births: from a completed rewriting system (basis = irreducible
    words) or from an explicit multiplication table (quotients, corners,
    blocks).  Products are memoized; for dim <= 512 the full table is
    materialized at construction.
    """

    MATERIALIZE_LIMIT = 512
    TENSOR_LIMIT = 168          # dim^3 int64 stays under ~40 MB

    def __init__(self, field: Field, dim: int, unit_coords: Dict[int, object],
                 labels: List[str], mul_provider, gens: Optional[Dict[str, dict]] = None,
                 meta: Optional[dict] = None):
        self.field = field
        self.dim = dim
        self.unit_coords = unit_coords
        self.labels = labels
        self._mul_provider = mul_provider
        self._table: Dict[Tuple[int, int], tuple] = {}
        self.gens = gens or {}
        self.meta = meta or {}
        self._tensor = None      # (dim, dim*dim) int64 fast path over GF(p)
        # word-born extras, set by from_rewriting
        self.rules: Optional[RewriteSystem] = None
        self.words: Optional[List[bytes]] = None
        self.word_index: Optional[Dict[bytes, int]] = None
        self.n: Optional[int] = None
        self.params: Optional[ParameterSet] = None
        self.variant: Optional[str] = None

    # -- construction --------------------------------------------------------

    @classmethod
    def from_rewriting(cls, field: Field, rules: RewriteSystem, words: List[bytes],
                       n: int, params: ParameterSet, variant: str, meta: dict):
        index = {w: i for i, w in enumerate(words)}

        def provider(i: int, j: int):
            red = rules.reduce_word(words[i] + words[j])
            return tuple(sorted((index[w], c) for w, c in red.items()))

        alg = cls(field, len(words), {0: field.one()},
                  [word_str(w, n) for w in words], provider, meta=meta)
        alg.rules = rules
        alg.words = words
        alg.word_index = index
        alg.n = n
        alg.params = params
        alg.variant = variant
        gens = {}
        for gid in range(gen_count(n)):
            red = rules.reduce_word(bytes((gid,)))
            gens[gen_name(gid, n)] = {index[w]: c for w, c in red.items()}
        alg.gens = gens
        if alg.dim <= cls.MATERIALIZE_LIMIT:
            alg.materialize()
        return alg

    @classmethod
    def from_table(cls, field: Field, table: Dict[Tuple[int, int], tuple], dim: int,
                   unit_coords: Dict[int, object], labels: Optional[List[str]] = None,
                   gens: Optional[Dict[str, dict]] = None, meta: Optional[dict] = None):
        alg = cls(field, dim, unit_coords, labels or [f"b{i}" for i in range(dim)],
                  lambda i, j: table[(i, j)], gens=gens, meta=meta)
        alg._table = dict(table)
        return alg

    def materialize(self):
        for i in range(self.dim):
            for j in range(self.dim):
                if (i, j) not in self._table:
                    self._table[(i, j)] = self._mul_provider(i, j)

    # -- arithmetic ------------------------------------------------------------

    def product(self, i: int, j: int) -> tuple:
        t = self._table.get((i, j))
        if t is None:
            t = self._mul_provider(i, j)
            self._table[(i, j)] = t
        return t

    def _structure_tensor(self):
        """Flattened int64 structure constants; GF(p) and small dims only."""
        if self._tensor is None:
            self.materialize()
            T = np.zeros((self.dim, self.dim * self.dim), dtype=np.int64)
            for (i, j), entries in self._table.items():
                base = j * self.dim
                for k, c in entries:
                    T[i, base + k] = int(c)
            self._tensor = T
        return self._tensor

    def _tensor_ok(self) -> bool:
        return (self.field.kind == PRIME_FIELD and self.field.p < 2**15
                and self.dim <= self.TENSOR_LIMIT)

    def mul(self, a: Dict[int, object], b: Dict[int, object]) -> Dict[int, object]:
        f = self.field
        if len(a) * len(b) > 24 and self._tensor_ok():
            p = f.p
            va = np.zeros(self.dim, dtype=np.int64)
            for i, c in a.items():
                va[i] = int(c)
            vb = np.zeros(self.dim, dtype=np.int64)
            for j, c in b.items():
                vb[j] = int(c)
            M = (va @ self._structure_tensor()).reshape(self.dim, self.dim) % p
            out_vec = (vb @ M) % p
            return {k: int(v) for k, v in enumerate(out_vec) if v}
        out: Dict[int, object] = {}
        for i, ci in a.items():
            if not ci:
                continue
            for j, cj in b.items():
                if not cj:
                    continue
                c = f.mul(ci, cj)
                for k, ck in self.product(i, j):
                    v = f.mul(c, ck)
                    if k in out:
                        s = f.add(out[k], v)
                        if s:
                            out[k] = s
                        else:
                            del out[k]
                    else:
                        out[k] = v
        return out

    def unit(self) -> Dict[int, object]:
        return dict(self.unit_coords)

    def dense(self, coords: Dict[int, object]) -> list:
        v = [self.field.zero()] * self.dim
        for i, c in coords.items():
            v[i] = c
        return v

    def sparse(self, vec) -> Dict[int, object]:
        return {i: c for i, c in enumerate(vec) if c}

    def right_matrix(self, x: Dict[int, object]) -> list:
        """Rows: row k = coordinates of b_k * x (right multiplication)."""
        if self._tensor_ok():
            return [[int(v) for v in row] for row in self.right_matrix_np(x)]
        rows = []
        for k in range(self.dim):
            rows.append(self.dense(self.mul({k: self.field.one()}, x)))
        return rows

    def right_matrix_np(self, x: Dict[int, object]) -> np.ndarray:
        """int64 matrix of right multiplication by x, entries reduced mod p."""
        p = self.field.p
        vx = np.zeros(self.dim, dtype=np.int64)
        for j, c in x.items():
            vx[j] = int(c)
        T3 = self._structure_tensor().reshape(self.dim, self.dim, self.dim)
        # R[i, k] = sum_j x_j T[i, j, k]
        return np.tensordot(T3, vx, axes=([1], [0])) % p

    def left_matrix_np(self, a: Dict[int, object]) -> np.ndarray:
        """int64 matrix L with row j = coordinates of a * b_j."""
        p = self.field.p
        va = np.zeros(self.dim, dtype=np.int64)
        for i, c in a.items():
            va[i] = int(c)
        return (va @ self._structure_tensor()).reshape(self.dim, self.dim) % p

    def gen_coords(self, name: str) -> Dict[int, object]:
        if name not in self.gens:
            raise BuildError(f"unknown generator {name!r}")
        return dict(self.gens[name])

    # -- word-born helpers -------------------------------------------------------

    def _need_words(self):
        if self.rules is None:
            raise BuildError("operation needs a presentation-born algebra")

    def nf_word(self, w: bytes) -> Dict[int, object]:
        self._need_words()
        red = self.rules.reduce_word(w)
        return {self.word_index[v]: c for v, c in red.items()}

    def nf_element(self, elem: Dict[bytes, object]) -> Dict[int, object]:
        self._need_words()
        red = self.rules.reduce(elem)
        return {self.word_index[v]: c for v, c in red.items()}

    def star(self, coords: Dict[int, object]) -> Dict[int, object]:
        """The anti-involution fixing every generator: reverse words, reduce."""
        self._need_words()
        rev = {}
        f = self.field
        for i, c in coords.items():
            w = bytes(reversed(self.words[i]))
            if w in rev:
                rev[w] = f.add(rev[w], c)
            else:
                rev[w] = c
        return self.nf_element(rev)

    def element_str(self, coords: Dict[int, object]) -> str:
        if not coords:
            return "0"
        bits = []
        for i in sorted(coords):
            bits.append(f"{self.field.render(coords[i])}*{self.labels[i]}")
        return " + ".join(bits)


# -- building -----------------------------------------------------------------

def expected_dimension(p: ParameterSet, n: int, variant: str,
                       d: Optional[int] = None):
    """(value, rule-name) per the applicable dimension theorem, or (None, None)."""
    if variant == "ariki_koike":
        fact = 1
        for k in range(2, n + 1):
            fact *= k
        return p.r**n * fact, "cyclotomic-hecke-rank"
    if p.admissible:
        return p.r**n * double_factorial_odd(n), "admissible-rank"
    if d is not None:
        fact = 1
        for k in range(2, n + 1):
            fact *= k
        return (d**n * double_factorial_odd(n) + p.r**n * fact - d**n * fact,
                "semi-admissible-rank")
    return None, None


_probe_cache: Dict[tuple, str] = {}


def _params_key(p: ParameterSet) -> tuple:
    return (p.field.descriptor_string(), str(p.q), str(p.rho),
            tuple(str(x) for x in p.u), p.admissible,
            tuple(str(w) for w in (p._explicit or ())) if not p.admissible else ())


def select_orientation13(p: ParameterSet, variant: str = "bmw") -> str:
    """Pick the relation-13 orientation that validates at n = 2.

    The candidate with y_1 read as x_1 is tried first; a candidate is
    accepted when completion succeeds, the rank matches the admissible
    formula (when the flag is set), and the pole relations
    e_1 x_1^a e_1 = omega_a e_1 hold up to a = 2r.  Probes always run at
    the default degree cap: a starved user cap should fail the real build
    as a resource error, not masquerade as an invalid orientation.
    """
    key = (_params_key(p), variant)
    if key in _probe_cache:
        return _probe_cache[key]
    last_error = None
    for cand in ("x1", "x1inv"):
        try:
            alg = build_algebra(2, p, variant=variant, orientation13=cand)
        except CompletionError as exc:
            last_error = f"{cand}: {exc}"
            continue
        if p.admissible and variant == "bmw":
            want, _ = expected_dimension(p, 2, variant)
            if alg.dim != want:
                last_error = f"{cand}: dimension {alg.dim} != {want}"
                continue
        if variant == "bmw":
            rep = check_omega_relations(alg, p, 2 * p.r)
            if not rep.passed:
                last_error = f"{cand}: omega relations fail at {rep.failures}"
                continue
        _probe_cache[key] = cand
        return cand
    raise BuildError(f"no relation-13 orientation validates: {last_error}")


def build_algebra(n: int, p: ParameterSet, variant: str = "bmw",
                  degree_cap: Optional[int] = None,
                  orientation13: Optional[str] = None) -> StructureAlgebra:
    """Complete the presentation and return the finite-dimensional quotient."""
    if n < 1:
        raise BuildError("n must be >= 1")
    cap = degree_cap if degree_cap is not None else default_degree_cap(n, p.r)
    if orientation13 is None:
        orientation13 = "x1" if n == 1 else select_orientation13(p, variant=variant)
    eqs = canonical_relations(n, p, variant=variant, orientation13=orientation13)
    rules, stats = complete(eqs, p.field, cap)
    words = enumerate_irreducible_words(rules, gen_count(n), cap)
    d = None
    if variant == "bmw" and not p.admissible and n >= 2:
        if n == 2:
            d = _semi_degree_in_words(rules, words, p, 2)
        else:
            d = semi_admissibility_degree(p, degree_cap=degree_cap,
                                          orientation13=orientation13)
    want, rule_name = expected_dimension(p, n, variant, d=d)
    meta = {
        "n": n,
        "r": p.r,
        "variant": variant,
        "dimension": len(words),
        "expected_dimension": want,
        "expected_rule": rule_name,
        "relation13_orientation": orientation13,
        "relation13_note": "y_1 in the printed right clause is undefined; "
                           f"resolved by validation to {orientation13!r}",
        "degree_cap": cap,
        "completion": stats.as_dict(),
    }
    return StructureAlgebra.from_rewriting(p.field, rules, words, n, p, variant, meta)


def _semi_degree_in_words(rules: RewriteSystem, words: List[bytes],
                          p: ParameterSet, n: int) -> int:
    """Rank profile of {e_1 x_1^k} against an already-enumerated basis."""
    f = p.field
    e1 = bytes((E(1, n),))
    x = bytes((X(n),))
    index = {w: i for i, w in enumerate(words)}
    span = EchelonSpan(f, len(words))
    for k in range(p.r + 1):
        red = rules.reduce_word(e1 + x * k)
        vec = [f.zero()] * len(words)
        for w, c in red.items():
            vec[index[w]] = c
        if not span.insert(vec):
            return k
    return p.r


# -- operations on built algebras ----------------------------------------------

class OmegaRelationReport:
    def __init__(self, entries):
        self.entries = entries          # list of (a, passed)
        self.failures = [a for a, ok in entries if not ok]
        self.passed = not self.failures

    def __bool__(self):
        return self.passed


def check_omega_relations(A: StructureAlgebra, p: ParameterSet, a_max: int) -> OmegaRelationReport:
    """Verify e_1 x_1^a e_1 = omega_a e_1 in A for 0 <= a <= a_max."""
    A._need_words()
    if A.n < 2:
        raise BuildError("omega relations need n >= 2")
    f = A.field
    e1 = bytes((E(1, A.n),))
    x = bytes((X(A.n),))
    e1_coords = A.nf_word(e1)
    entries = []
    for a in range(a_max + 1):
        lhs = A.nf_word(e1 + x * a + e1)
        om = omega(p, a)
        rhs = {i: f.mul(om.value, c) for i, c in e1_coords.items() if f.mul(om.value, c)}
        entries.append((a, lhs == rhs))
    return OmegaRelationReport(entries)


def semi_admissibility_degree(p: ParameterSet, degree_cap: Optional[int] = None,
                              orientation13: Optional[str] = None) -> int:
    """Minimal d with {e_1, e_1 x_1, ..., e_1 x_1^d} dependent in the n = 2 quotient."""
    A = build_algebra(2, p, variant="bmw", degree_cap=degree_cap,
                      orientation13=orientation13)
    f = A.field
    e1 = bytes((E(1, 2),))
    x = bytes((X(2),))
    span = EchelonSpan(f, A.dim)
    for k in range(p.r + 1):
        vec = A.dense(A.nf_word(e1 + x * k))
        if not span.insert(vec):
            return k
    return p.r


def ideal_generated_by(A: StructureAlgebra, x: Dict[int, object]):
    """(dimension, echelon row basis) of the two-sided ideal A x A."""
    f = A.field
    span = EchelonSpan(f, A.dim)
    if not any(x.values()):
        return 0, []
    multipliers = list(A.gens.values()) if A.gens else [
        {i: f.one()} for i in range(A.dim)]
    frontier = [dict(x)]
    span.insert(A.dense(x))
    while frontier:
        nxt = []
        for v in frontier:
            for m in multipliers:
                for prod in (A.mul(v, m), A.mul(m, v)):
                    if span.insert(A.dense(prod)):
                        nxt.append(prod)
        frontier = nxt
    return span.dim, span.row_lists()


def truncation_idempotent(A: StructureAlgebra, p: ParameterSet) -> Dict[int, object]:
    """omega_0^{-1} e_{n-1}, falling back to rho * e_{n-1} g_{n-2} when
    omega_0 = 0 (which needs n >= 3); idempotency is verified, not assumed.

    The fallback scalar is rho, not rho^{-1}: squaring rho e_{n-1} g_{n-2}
    gives rho^2 (e_{n-1} g_{n-2} e_{n-1}) g_{n-2} = rho e_{n-1} g_{n-2} by
    the corrected curl relation, so this is the choice that squares to
    itself.
    """
    A._need_words()
    n = A.n
    if n < 2:
        raise BuildError("truncation idempotent needs n >= 2")
    f = A.field
    if not p.omega0.is_zero():
        w = bytes((E(n - 1, n),))
        scale = p.omega0.inv().value
    else:
        if n < 3:
            raise BuildError("omega_0 = 0 branch needs n >= 3 (uses g_{n-2})")
        w = bytes((E(n - 1, n), G(n - 2, n)))
        scale = p.rho.value
    coords = {i: f.mul(scale, c) for i, c in A.nf_word(w).items()}
    if A.mul(coords, coords) != coords:
        raise BuildError("constructed element is not idempotent; presentation broken")
    return coords


def corner_algebra(A: StructureAlgebra, e: Dict[int, object]) -> StructureAlgebra:
    """The corner eAe with unit e, as a structure-constants algebra."""
    f = A.field
    if A.mul(e, e) != e:
        raise BuildError("corner requires an idempotent")
    span = EchelonSpan(f, A.dim)
    for k in range(A.dim):
        v = A.mul(A.mul(e, {k: f.one()}), e)
        span.insert(A.dense(v))
    rows = span.row_lists()
    basis = RowBasis(rows, f)
    dim = len(rows)
    sparse_rows = [{i: c for i, c in enumerate(row) if c} for row in rows]
    table = {}
    for i in range(dim):
        for j in range(dim):
            prod = A.mul(sparse_rows[i], sparse_rows[j])
            coords = basis.coords([prod.get(t, f.zero()) for t in range(A.dim)])
            table[(i, j)] = tuple((k, c) for k, c in enumerate(coords) if c)
    unit = basis.coords(A.dense(e))
    meta = {"parent_dim": A.dim, "parent_rows": rows}
    return StructureAlgebra.from_table(
        f, table, dim, {k: c for k, c in enumerate(unit) if c},
        labels=[f"c{i}" for i in range(dim)], meta=meta)


# -- canonical JSON dump ---------------------------------------------------------

def dump_algebra(A: StructureAlgebra) -> dict:
    """Canonical JSON-able dump: byte-identical across runs."""
    A._need_words()
    f = A.field
    p = A.params
    A.materialize()
    products = []
    for i in range(A.dim):
        for j in range(A.dim):
            entries = [[k, f.render(c)] for k, c in A.product(i, j)]
            products.append([i, j, entries])
    params_blob = {
        "q": str(p.q),
        "rho": str(p.rho),
        "u": [str(x) for x in p.u],
        "admissible": p.admissible,
    }
    if not p.admissible and p.r > 1:
        params_blob["omega"] = [str(w) for w in p._explicit]
    return {
        "field": f.descriptor_string(),
        "n": A.n,
        "r": p.r,
        "variant": A.variant,
        "params": params_blob,
        "basis": list(A.labels),
        "products": products,
    }


def dumps_algebra(A: StructureAlgebra) -> str:
    return json.dumps(dump_algebra(A), sort_keys=True, separators=(",", ":")) + "\n"


def load_algebra(blob: dict) -> StructureAlgebra:
    """Rebuild a table-born algebra (plus parameters) from a dump."""
    try:
        field = Field.from_descriptor(blob["field"])
        pb = blob["params"]
        p = ParameterSet(field, pb["q"], pb["rho"], pb["u"],
                         admissible=pb["admissible"],
                         omegas=pb.get("omega"))
        n = blob["n"]
        labels = blob["basis"]
        dim = len(labels)
        table = {}
        for i, j, entries in blob["products"]:
            table[(int(i), int(j))] = tuple(
                (int(k), field.parse(c)) for k, c in entries)
        if len(table) != dim * dim:
            raise BuildError("product table is incomplete")
        unit = {labels.index("1"): field.one()}
    except (KeyError, TypeError, ValueError) as exc:
        raise BuildError(f"corrupted algebra dump: {exc}") from exc
    gens = {}
    for i, lab in enumerate(labels):
        if "." not in lab and lab != "1":
            gens[lab] = {i: field.one()}
    alg = StructureAlgebra.from_table(field, table, dim, unit, labels=labels,
                                      gens=gens,
                                      meta={"n": n, "variant": blob.get("variant")})
    alg.params = p
    alg.n = n
    alg.variant = blob.get("variant")
    return alg
