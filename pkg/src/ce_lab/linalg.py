"""Exact linear algebra over the scalar rings.

Subspaces are row spans.  Over a field the canonical form is the reduced
row echelon form; over Z/nZ it is the Howell normal form, which is the
unique canonical matrix with the same row span and supports membership
testing by successive reduction.  Matrices at this interface are nested
sequences of scalar payloads; modular rings are routed through the
integer kernels.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import _kernels
from .errors import AmbientMismatch, DimensionMismatch, InfiniteRing, UnsupportedScalars


def _is_modular(ring):
    return getattr(ring, "modulus", None) is not None


def _check_rect(rows):
    k = None
    for row in rows:
        if k is None:
            k = len(row)
        elif len(row) != k:
            raise DimensionMismatch("ragged matrix")
    return k or 0


def _rref_generic(ring, rows):
    # augmented reduction carrying the transform; pivot entries become one
    m = len(rows)
    k = _check_rect(rows)
    aug = []
    for i, row in enumerate(rows):
        pad = [ring.zero] * m
        pad[i] = ring.one
        aug.append(list(row) + pad)
    r = 0
    pivots = []
    for c in range(k):
        if r == m:
            break
        piv = next((j for j in range(r, m) if not ring.is_zero(aug[j][c])),
                   None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = ring.invert(aug[r][c])
        if inv != ring.one:
            aug[r] = [ring.mul(inv, x) for x in aug[r]]
        for j in range(m):
            if j != r and not ring.is_zero(aug[j][c]):
                f = aug[j][c]
                aug[j] = [ring.sub(x, ring.mul(f, y))
                          for x, y in zip(aug[j], aug[r])]
        pivots.append(c)
        r += 1
    order = list(range(r)) + [j for j in range(r, m)]
    h = [aug[j][:k] for j in order]
    u = [aug[j][k:] for j in order]
    return h, u, pivots


def _reduce_full(ring, rows):
    """(h, u, pivots): h = u . rows with zero rows of h at the bottom."""
    m = len(rows)
    k = _check_rect(rows)
    if _is_modular(ring):
        n = ring.modulus
        a = np.array(rows, dtype=np.int64).reshape(m, k)
        if ring.is_field:
            h, u, pivots = _kernels.rref_mod_p(a, n)
        else:
            h, u, pivots = _kernels.howell_mod_n(a, n)
        return h.tolist(), u.tolist(), list(pivots)
    if ring.is_field:
        return _rref_generic(ring, rows)
    raise UnsupportedScalars(
        f"row reduction over {ring.describe()} is not supported")


def canonicalize_with_transform(ring, rows):
    """Canonical form split into (reduced rows, transform rows, relation rows).

    The reduced rows are the canonical nonzero rows, each transform row
    expresses the matching reduced row as a combination of the inputs,
    and the relation rows generate every combination of the inputs that
    vanishes (the left kernel).
    """
    h, u, pivots = _reduce_full(ring, rows)
    r = len(pivots)
    return h[:r], u[:r], u[r:]


def canonicalize(ring, rows):
    """Canonical nonzero rows spanning the same row space."""
    h, _, pivots = _reduce_full(ring, rows)
    return h[: len(pivots)]


def _pivot_columns(ring, canonical_rows):
    cols = []
    for row in canonical_rows:
        for c, x in enumerate(row):
            if not ring.is_zero(x):
                cols.append(c)
                break
    return cols


def _reduce_against(ring, rows, pivots, vec):
    """Reduce vec against canonical rows; (coeffs, remainder).

    coeffs is None when a pivot divisibility test fails, which over Z/nZ
    already proves non-membership.
    """
    vec = list(vec)
    coeffs = []
    if _is_modular(ring):
        n = ring.modulus
        for row, c in zip(rows, pivots):
            d = row[c]
            a = vec[c] % n
            if a % d:
                return None, vec
            q = a // d
            coeffs.append(q % n)
            if q:
                vec = [(x - q * y) % n for x, y in zip(vec, row)]
        return coeffs, [x % n for x in vec]
    for row, c in zip(rows, pivots):
        q = vec[c]
        coeffs.append(q)
        if not ring.is_zero(q):
            vec = [ring.sub(x, ring.mul(q, y)) for x, y in zip(vec, row)]
    return coeffs, vec


def kernel(ring, rows):
    """The space {x : x . M = 0} as a subspace of rows-many coordinates."""
    _, _, relations = canonicalize_with_transform(ring, rows)
    return Subspace(ring, len(rows), relations)


def solve(ring, rows, target):
    """One x with x . M = target, or None when target is not in the span."""
    if len(target) != _check_rect(rows) and rows:
        raise DimensionMismatch("target length does not match matrix width")
    h, u, _ = canonicalize_with_transform(ring, rows)
    pivots = _pivot_columns(ring, h)
    coeffs, rem = _reduce_against(ring, h, pivots, target)
    if coeffs is None or any(not ring.is_zero(x) for x in rem):
        return None
    x = [ring.zero] * len(rows)
    for q, urow in zip(coeffs, u):
        if not ring.is_zero(q):
            x = [ring.add(a, ring.mul(q, b)) for a, b in zip(x, urow)]
    return x


def image(ring, rows):
    """The row span of the matrix."""
    return Subspace(ring, _check_rect(rows), rows)


def mat_mul(ring, a, b):
    """Matrix product with payload entries."""
    if _is_modular(ring):
        return _kernels.mat_mul_mod(
            np.array(a, dtype=np.int64), np.array(b, dtype=np.int64),
            ring.modulus).tolist()
    ka = _check_rect(a)
    if ka != len(b):
        raise DimensionMismatch("inner dimensions differ")
    kb = _check_rect(b)
    out = []
    for row in a:
        new = [ring.zero] * kb
        for x, brow in zip(row, b):
            if ring.is_zero(x):
                continue
            new = [ring.add(v, ring.mul(x, w)) for v, w in zip(new, brow)]
        out.append(new)
    return out


def vec_mat(ring, vec, rows):
    """Row vector times matrix."""
    if len(vec) != len(rows):
        raise DimensionMismatch("vector length does not match row count")
    if _is_modular(ring):
        n = ring.modulus
        arr = np.array(rows, dtype=np.int64)
        v = np.array(vec, dtype=np.int64)
        return ((v @ arr) % n).tolist()
    k = _check_rect(rows)
    out = [ring.zero] * k
    for x, row in zip(vec, rows):
        if ring.is_zero(x):
            continue
        out = [ring.add(v, ring.mul(x, w)) for v, w in zip(out, row)]
    return out


def identity_rows(ring, k):
    rows = []
    for i in range(k):
        row = [ring.zero] * k
        row[i] = ring.one
        rows.append(row)
    return rows


class Subspace:
    """A canonical row span inside ring^ambient."""

    __slots__ = ("ring", "ambient", "rows", "_pivots")

    def __init__(self, ring, ambient, rows, *, canonical=False):
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch(
                    f"row length {len(r)} in ambient dimension {ambient}")
        if rows and not canonical:
            rows = canonicalize(ring, rows)
        self.ring = ring
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self._pivots = tuple(_pivot_columns(ring, self.rows))

    @property
    def rank(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def contains(self, vector):
        if len(vector) != self.ambient:
            raise AmbientMismatch(
                f"vector length {len(vector)} in ambient {self.ambient}")
        coeffs, rem = _reduce_against(self.ring, self.rows, self._pivots,
                                      vector)
        return coeffs is not None and all(
            self.ring.is_zero(x) for x in rem)

    def coordinates(self, vector):
        """Coefficients expressing vector over the canonical rows, or None."""
        coeffs, rem = _reduce_against(self.ring, self.rows, self._pivots,
                                      vector)
        if coeffs is None or any(not self.ring.is_zero(x) for x in rem):
            return None
        return coeffs

    def is_subspace_of(self, other):
        self._check_compatible(other)
        return all(other.contains(list(r)) for r in self.rows)

    def _check_compatible(self, other):
        if self.ring != other.ring or self.ambient != other.ambient:
            raise AmbientMismatch("subspaces live in different ambients")

    def size(self):
        """Number of elements; raises for spans over infinite fields."""
        ring = self.ring
        if _is_modular(ring) and not ring.is_field:
            n = ring.modulus
            out = 1
            for row, c in zip(self.rows, self._pivots):
                out *= n // row[c]
            return out
        if ring.size is None:
            raise InfiniteRing(f"span over {ring.describe()} is infinite")
        return ring.size ** self.rank

    def enumerate(self):
        """Yield every element of the span as a payload list."""
        ring = self.ring
        if not self.rows:
            yield [ring.zero] * self.ambient
            return
        if _is_modular(ring) and not ring.is_field:
            n = ring.modulus
            ranges = [range(n // row[c])
                      for row, c in zip(self.rows, self._pivots)]
            arr = np.array(self.rows, dtype=np.int64)
            for combo in itertools.product(*ranges):
                v = (np.array(combo, dtype=np.int64) @ arr) % n
                yield v.tolist()
            return
        if ring.size is None:
            raise InfiniteRing(f"span over {ring.describe()} is infinite")
        coeff_pool = list(ring.enumerate_elements())
        for combo in itertools.product(coeff_pool, repeat=self.rank):
            yield vec_mat(ring, list(combo), list(self.rows))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ring == other.ring
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring, self.ambient, self.rows))

    def __repr__(self):
        return (f"Subspace(ambient={self.ambient}, rank={self.rank}, "
                f"ring={self.ring.describe()})")


def zero_subspace(ring, ambient):
    return Subspace(ring, ambient, [], canonical=True)


def full_subspace(ring, ambient):
    return Subspace(ring, ambient, identity_rows(ring, ambient),
                    canonical=True)


def subspace_sum(u, v):
    u._check_compatible(v)
    return Subspace(u.ring, u.ambient, list(u.rows) + list(v.rows))


def subspace_intersect(u, v):
    """Intersection via relations of the stacked generator rows."""
    u._check_compatible(v)
    if u.is_zero() or v.is_zero():
        return zero_subspace(u.ring, u.ambient)
    stacked = list(u.rows) + list(v.rows)
    relations = kernel(u.ring, stacked)
    gens = []
    for rel in relations.rows:
        head = list(rel[: len(u.rows)])
        gens.append(vec_mat(u.ring, head, list(u.rows)))
    return Subspace(u.ring, u.ambient, gens)


def contains(sub, vector):
    return sub.contains(vector)


def is_subspace_of(u, v):
    return u.is_subspace_of(v)
