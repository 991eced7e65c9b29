"""Finite-dimensional algebras presented by structure constants.

An Algebra owns a scalar ring, a dense multiplication table
(e_i * e_j = sum_k c_ijk e_k), optional unit coordinates, and an
optional involution matrix.  Elements are coordinate vectors; all
arithmetic funnels through the table.  Modular scalar rings get numpy
fast paths; other scalars use payload arithmetic.

Matrix conventions are row-based throughout: left_matrix(b) satisfies
v . left_matrix(b) = coords(b * v), and right_matrix(b) satisfies
v . right_matrix(b) = coords(v * b).
"""

from __future__ import annotations

import itertools

import numpy as np

from . import linalg
from .errors import (
    AlgebraMismatch,
    DimensionCapExceeded,
    DimensionMismatch,
    NotAnIdeal,
    QuotientNotFree,
    ScalarMismatch,
)

DEFAULT_DIM_CAP = 64
_dim_cap = DEFAULT_DIM_CAP


def set_dim_cap(n):
    """Raise or lower the construction-time dimension cap; returns the old."""
    global _dim_cap
    old = _dim_cap
    _dim_cap = n
    return old


def get_dim_cap():
    return _dim_cap


def _is_modular(ring):
    return getattr(ring, "modulus", None) is not None


class Element:
    """A vector of coordinates tied to its algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(coords)
        if len(coords) != algebra.dim:
            raise DimensionMismatch(
                f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        ring = self.algebra.ring
        return Element(self.algebra,
                       [ring.add(a, b)
                        for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        ring = self.algebra.ring
        return Element(self.algebra,
                       [ring.sub(a, b)
                        for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        ring = self.algebra.ring
        return Element(self.algebra, [ring.neg(a) for a in self.coords])

    def __mul__(self, other):
        self._check(other)
        return Element(self.algebra,
                       self.algebra.multiply_coords(self.coords, other.coords))

    def scale(self, scalar):
        ring = self.algebra.ring
        return Element(self.algebra,
                       [ring.mul(scalar, a) for a in self.coords])

    def star(self):
        return Element(self.algebra, self.algebra.star_coords(self.coords))

    def is_zero(self):
        ring = self.algebra.ring
        return all(ring.is_zero(a) for a in self.coords)

    def __eq__(self, other):
        return (isinstance(other, Element)
                and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Element({self.algebra.describe_element(self.coords)})"


class Algebra:
    """Structure-constant algebra over a scalar ring."""

    def __init__(self, ring, labels, table, *, unit=None, involution=None,
                 known_associative=None, known_commutative=None, check=True):
        labels = tuple(labels)
        dim = len(labels)
        if dim > _dim_cap:
            raise DimensionCapExceeded(
                f"dimension {dim} exceeds the cap {_dim_cap}")
        if len(set(labels)) != dim:
            raise DimensionMismatch("basis labels are not distinct")
        self.ring = ring
        self.dim = dim
        self.labels = labels
        self.table = tuple(
            tuple(tuple(table[i][j]) for j in range(dim)) for i in range(dim))
        for i in range(dim):
            for j in range(dim):
                if len(self.table[i][j]) != dim:
                    raise DimensionMismatch(
                        f"product e_{i} e_{j} has wrong length")
        self.unit = tuple(unit) if unit is not None else None
        self.involution = (tuple(tuple(r) for r in involution)
                           if involution is not None else None)
        self._assoc = known_associative
        self._comm = known_commutative
        self._np_table = None
        if _is_modular(ring):
            n = ring.modulus
            self._np_table = (np.array(self.table, dtype=np.int64)
                              .reshape(dim, dim, dim) % n)
            self._np_table.setflags(write=False)
        if check:
            self._verify()

    # -- construction checks --------------------------------------------
    def _verify(self):
        ring = self.ring
        if self.unit is not None:
            if len(self.unit) != self.dim:
                raise DimensionMismatch("unit has wrong length")
            for i in range(self.dim):
                e = self.basis_coords(i)
                if (self.multiply_coords(self.unit, e) != e
                        or self.multiply_coords(e, self.unit) != e):
                    raise AlgebraMismatch(
                        f"declared unit fails on basis element {i}")
        if self.involution is not None:
            V = [list(r) for r in self.involution]
            if len(V) != self.dim or any(len(r) != self.dim for r in V):
                raise DimensionMismatch("involution matrix has wrong shape")
            for i in range(self.dim):
                e = self.basis_coords(i)
                if tuple(self.star_coords(self.star_coords(e))) != e:
                    raise AlgebraMismatch("involution does not square to one")
            for i in range(self.dim):
                for j in range(self.dim):
                    lhs = self.star_coords(self.table[i][j])
                    rhs = self.multiply_coords(
                        self.star_coords(self.basis_coords(j)),
                        self.star_coords(self.basis_coords(i)))
                    if tuple(lhs) != tuple(rhs):
                        raise AlgebraMismatch(
                            "involution does not reverse products")

    # -- elements --------------------------------------------------------
    def zero(self):
        return Element(self, [self.ring.zero] * self.dim)

    def basis_coords(self, i):
        out = [self.ring.zero] * self.dim
        out[i] = self.ring.one
        return tuple(out)

    def basis_element(self, i):
        return Element(self, self.basis_coords(i))

    def element(self, coords):
        return Element(self, coords)

    def one(self):
        if self.unit is None:
            raise AlgebraMismatch("algebra has no unit")
        return Element(self, self.unit)

    def random_element(self, rng):
        return Element(self,
                       [self.ring.random_element(rng)
                        for _ in range(self.dim)])

    def describe_element(self, coords):
        ring = self.ring
        parts = []
        for c, lab in zip(coords, self.labels):
            if ring.is_zero(c):
                continue
            if c == ring.one:
                parts.append(lab)
            else:
                parts.append(f"{ring.format(c)}*{lab}")
        return " + ".join(parts) if parts else "0"

    # -- core arithmetic -------------------------------------------------
    def multiply_coords(self, a, b):
        if self._np_table is not None:
            n = self.ring.modulus
            av = np.asarray(a, dtype=np.int64)
            bv = np.asarray(b, dtype=np.int64)
            out = np.einsum("i,j,ijk->k", av, bv, self._np_table) % n
            return tuple(int(x) for x in out)
        ring = self.ring
        out = [ring.zero] * self.dim
        for i, x in enumerate(a):
            if ring.is_zero(x):
                continue
            for j, y in enumerate(b):
                if ring.is_zero(y):
                    continue
                xy = ring.mul(x, y)
                row = self.table[i][j]
                out = [ring.add(o, ring.mul(xy, c))
                       for o, c in zip(out, row)]
        return tuple(out)

    def left_matrix(self, b):
        """Rows: coords(b * e_j); so v . M = coords(b * v)."""
        if self._np_table is not None:
            bv = np.asarray(b, dtype=np.int64)
            return (np.einsum("i,ijk->jk", bv, self._np_table)
                    % self.ring.modulus)
        return [list(self.multiply_coords(b, self.basis_coords(j)))
                for j in range(self.dim)]

    def right_matrix(self, b):
        """Rows: coords(e_j * b); so v . M = coords(v * b)."""
        if self._np_table is not None:
            bv = np.asarray(b, dtype=np.int64)
            return (np.einsum("i,jik->jk", bv, self._np_table)
                    % self.ring.modulus)
        return [list(self.multiply_coords(self.basis_coords(j), b))
                for j in range(self.dim)]

    def star_coords(self, coords):
        if self.involution is None:
            raise AlgebraMismatch("algebra has no involution")
        return tuple(linalg.vec_mat(self.ring, list(coords),
                                    [list(r) for r in self.involution]))

    # -- predicates ------------------------------------------------------
    def is_associative(self):
        if self._assoc is None:
            self._assoc = self._compute_associative()
        return self._assoc

    def _compute_associative(self):
        if self._np_table is not None:
            T = self._np_table
            n = self.ring.modulus
            left = np.einsum("ijm,mkl->ijkl", T, T) % n
            right = np.einsum("jkm,iml->ijkl", T, T) % n
            return bool(np.array_equal(left, right))
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table[i][j]
                for k in range(self.dim):
                    jk = self.table[j][k]
                    lhs = self.multiply_coords(ij, self.basis_coords(k))
                    rhs = self.multiply_coords(self.basis_coords(i), jk)
                    if tuple(lhs) != tuple(rhs):
                        return False
        return True

    def is_commutative(self):
        if self._comm is None:
            if self._np_table is not None:
                self._comm = bool(np.array_equal(
                    self._np_table, self._np_table.transpose(1, 0, 2)))
            else:
                self._comm = all(
                    self.table[i][j] == self.table[j][i]
                    for i in range(self.dim) for j in range(self.dim))
        return self._comm

    def find_unit(self):
        """Solve u * e_i = e_i * u = e_i; None when no unit exists."""
        if self.unit is not None:
            return Element(self, self.unit)
        cols = []
        target = []
        for i in range(self.dim):
            e = self.basis_coords(i)
            right = self.right_matrix(e)
            left = self.left_matrix(e)
            cols.append(np.asarray(right) if self._np_table is not None
                        else right)
            cols.append(np.asarray(left) if self._np_table is not None
                        else left)
            target.extend(e)
            target.extend(e)
        if self._np_table is not None:
            big = np.concatenate([np.asarray(c) for c in cols], axis=1)
            rows = big.tolist()
        else:
            rows = [sum((list(c[j]) for c in cols), [])
                    for j in range(self.dim)]
        x = linalg.solve(self.ring, rows, list(target))
        if x is None:
            return None
        self.unit = tuple(x)
        return Element(self, self.unit)

    # -- subspace plumbing -----------------------------------------------
    def full_space(self):
        return linalg.full_subspace(self.ring, self.dim)

    def zero_space(self):
        return linalg.zero_subspace(self.ring, self.dim)

    def span(self, elements):
        rows = [list(e.coords) if isinstance(e, Element) else list(e)
                for e in elements]
        return linalg.Subspace(self.ring, self.dim, rows)

    def __repr__(self):
        return (f"Algebra(dim={self.dim}, ring={self.ring.describe()})")

    # -- serialization -----------------------------------------------------
    def to_json(self):
        ring = self.ring
        triples = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.table[i][j]):
                    if not ring.is_zero(c):
                        triples.append([i, j, k, ring.format(c)])
        out = {
            "scalar": ring.spec().to_json(),
            "dim": self.dim,
            "labels": list(self.labels),
            "table": triples,
        }
        if self.unit is not None:
            out["unit"] = [ring.format(c) for c in self.unit]
        if self.involution is not None:
            out["involution"] = [[ring.format(c) for c in row]
                                 for row in self.involution]
        return out

    @classmethod
    def from_json(cls, data, *, check=True):
        from . import scalars as _scalars
        ring = _scalars.make_scalar_ring(data["scalar"])
        dim = data["dim"]
        labels = data["labels"]
        if len(labels) != dim:
            raise DimensionMismatch("label count does not match dim")
        table = [[[ring.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, coeff in data["table"]:
            table[i][j][k] = ring.parse(coeff)
        unit = ([ring.parse(c) for c in data["unit"]]
                if "unit" in data else None)
        involution = ([[ring.parse(c) for c in row]
                       for row in data["involution"]]
                      if "involution" in data else None)
        return cls(ring, labels, table, unit=unit, involution=involution,
                   check=check)


# -- free functions on elements -----------------------------------------

def multiply(a, b):
    return a * b


def commutator(a, b):
    """a b - b a."""
    return a * b - b * a


def associator(a, b, c):
    """(a b) c - a (b c)."""
    return (a * b) * c - a * (b * c)


def is_associative(algebra):
    return algebra.is_associative()


def is_commutative(algebra):
    return algebra.is_commutative()


def find_unit(algebra):
    return algebra.find_unit()


# -- combinators --------------------------------------------------------

def direct_sum(a, b):
    """Componentwise product on the concatenated coordinate module."""
    if a.ring != b.ring:
        raise ScalarMismatch("direct sum needs a common scalar ring")
    ring = a.ring
    dim = a.dim + b.dim
    labels = [f"p1.{lab}" for lab in a.labels] + \
             [f"p2.{lab}" for lab in b.labels]
    zero = ring.zero

    def pad_left(coords):
        return list(coords) + [zero] * b.dim

    def pad_right(coords):
        return [zero] * a.dim + list(coords)

    table = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            if i < a.dim and j < a.dim:
                table[i][j] = pad_left(a.table[i][j])
            elif i >= a.dim and j >= a.dim:
                table[i][j] = pad_right(b.table[i - a.dim][j - a.dim])
            else:
                table[i][j] = [zero] * dim
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = list(a.unit) + list(b.unit)
    assoc = (True if (a._assoc and b._assoc) else None)
    comm = (True if (a._comm and b._comm) else None)
    return Algebra(ring, labels, table, unit=unit,
                   known_associative=assoc, known_commutative=comm,
                   check=False)


def tensor_product(a, b):
    """Structure constants by Kronecker product; field scalars only."""
    if a.ring != b.ring:
        raise ScalarMismatch("tensor product needs a common scalar ring")
    if not a.ring.is_field:
        raise ScalarMismatch("tensor product needs field scalars")
    ring = a.ring
    da, db = a.dim, b.dim
    dim = da * db
    labels = [f"{la}@{lb}" for la in a.labels for lb in b.labels]

    def fuse(i, p):
        return i * db + p

    table = [[[ring.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(da):
        for j in range(da):
            arow = a.table[i][j]
            for p in range(db):
                for q in range(db):
                    brow = b.table[p][q]
                    out = table[fuse(i, p)][fuse(j, q)]
                    for k, ak in enumerate(arow):
                        if ring.is_zero(ak):
                            continue
                        for r, br in enumerate(brow):
                            if ring.is_zero(br):
                                continue
                            idx = fuse(k, r)
                            out[idx] = ring.add(out[idx], ring.mul(ak, br))
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = [ring.mul(x, y) for x in a.unit for y in b.unit]
    assoc = (True if (a._assoc and b._assoc) else None)
    comm = (True if (a._comm and b._comm) else None)
    return Algebra(ring, labels, table, unit=unit,
                   known_associative=assoc, known_commutative=comm,
                   check=False)


# -- subspace operations ------------------------------------------------

def subspace_product(algebra, u, v):
    """Span of pairwise products of the generators; valid by bilinearity."""
    if u.ambient != algebra.dim or v.ambient != algebra.dim:
        raise DimensionMismatch("subspace does not live in this algebra")
    prods = []
    for x in u.rows:
        for y in v.rows:
            prods.append(list(algebra.multiply_coords(x, y)))
    return linalg.Subspace(algebra.ring, algebra.dim, prods)


def ideal_generated_by(algebra, elements):
    """Two-sided ideal closure of the span of the given elements."""
    current = algebra.span(elements)
    basis = algebra.full_space()
    while True:
        grown = linalg.subspace_sum(
            current, subspace_product(algebra, basis, current))
        grown = linalg.subspace_sum(
            grown, subspace_product(algebra, current, basis))
        if grown == current:
            return current
        current = grown


def nilpotency_index(algebra, u):
    """Least n with u^n = 0 under left-normed powers; None if it never dies.

    Powers are computed as u^(k+1) = u^k * u + u * u^k, which agrees with
    the usual power ideal in the associative case.
    """
    if u.is_zero():
        return 1
    power = u
    seen = [u]
    for n in itertools.count(2):
        power = linalg.subspace_sum(
            subspace_product(algebra, power, u),
            subspace_product(algebra, u, power))
        if power.is_zero():
            return n
        if any(power == old for old in seen):
            return None
        seen.append(power)


def quotient_by_ideal(algebra, ideal):
    """Quotient algebra on the complement coordinates, plus the projection.

    The complement basis is the set of non-pivot coordinates of the
    ideal's canonical form; over Z/nZ every pivot must be a unit for the
    quotient module to be free.
    """
    ring = algebra.ring
    if ideal.ambient != algebra.dim:
        raise DimensionMismatch("ideal does not live in this algebra")
    whole = algebra.full_space()
    if not subspace_product(algebra, whole, ideal).is_subspace_of(ideal):
        raise NotAnIdeal("not closed under left multiplication")
    if not subspace_product(algebra, ideal, whole).is_subspace_of(ideal):
        raise NotAnIdeal("not closed under right multiplication")
    rows = [list(r) for r in ideal.rows]
    pivots = []
    for row in rows:
        c = next(i for i, x in enumerate(row) if not ring.is_zero(x))
        if not ring.is_unit(row[c]):
            raise QuotientNotFree(
                "ideal pivots are not units; quotient module is not free")
        pivots.append(c)
    keep = [i for i in range(algebra.dim) if i not in pivots]

    def project(coords):
        vec = list(coords)
        for row, c in zip(rows, pivots):
            f = ring.mul(vec[c], ring.invert(row[c]))
            if not ring.is_zero(f):
                vec = [ring.sub(x, ring.mul(f, y)) for x, y in zip(vec, row)]
        return tuple(vec[i] for i in keep)

    def lift(small):
        vec = [ring.zero] * algebra.dim
        for value, pos in zip(small, keep):
            vec[pos] = value
        return vec

    dim_q = len(keep)
    labels = [algebra.labels[i] for i in keep]
    table = [[None] * dim_q for _ in range(dim_q)]
    for i in range(dim_q):
        for j in range(dim_q):
            prod = algebra.multiply_coords(lift(_unit_vec(ring, dim_q, i)),
                                           lift(_unit_vec(ring, dim_q, j)))
            table[i][j] = list(project(prod))
    unit = None
    if algebra.unit is not None:
        unit = list(project(algebra.unit))
    quotient = Algebra(ring, labels, table, unit=unit,
                       known_associative=algebra._assoc, check=False)

    def projection(element_or_coords):
        coords = (element_or_coords.coords
                  if isinstance(element_or_coords, Element)
                  else element_or_coords)
        return Element(quotient, project(coords))

    return quotient, projection


def _unit_vec(ring, dim, i):
    out = [ring.zero] * dim
    out[i] = ring.one
    return out


# -- lazily evaluated triangular derivation ring ------------------------

class DerivationTriangularRing:
    """Pairs (f, g) over a polynomial ring with a derivation-twisted product.

    (f1, g1) * (f2, g2) = (f1 f2, f1 g2 + g1 f2 + d1(f1) d2(f2)).
    The ring is infinite-dimensional, so only pointwise arithmetic and
    sampled checks are provided; the matrix model realizes (f, g) as the
    upper triangular matrix [[f, d1 f, g], [0, f, d2 f], [0, 0, f]].
    """

    def __init__(self, poly_ring, d1="d/dx", d2="d/dy"):
        if d1 not in poly_ring.derivations or d2 not in poly_ring.derivations:
            raise DimensionMismatch(
                f"{poly_ring.describe()} lacks one of {d1!r}, {d2!r}")
        self.ring = poly_ring
        self.d1 = d1
        self.d2 = d2
        self.zero = (poly_ring.zero, poly_ring.zero)
        self.one = (poly_ring.one, poly_ring.zero)

    def add(self, a, b):
        R = self.ring
        return (R.add(a[0], b[0]), R.add(a[1], b[1]))

    def neg(self, a):
        R = self.ring
        return (R.neg(a[0]), R.neg(a[1]))

    def mul(self, a, b):
        R = self.ring
        f1, g1 = a
        f2, g2 = b
        cross = R.mul(R.derive(f1, self.d1), R.derive(f2, self.d2))
        return (R.mul(f1, f2),
                R.add(R.add(R.mul(f1, g2), R.mul(g1, f2)), cross))

    def matrix_model(self, a):
        """The 3x3 upper triangular matrix realizing the pair."""
        R = self.ring
        f, g = a
        z = R.zero
        return [[f, R.derive(f, self.d1), g],
                [z, f, R.derive(f, self.d2)],
                [z, z, f]]

    def matrix_multiply(self, m1, m2):
        R = self.ring
        out = [[R.zero] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                acc = R.zero
                for k in range(3):
                    acc = R.add(acc, R.mul(m1[i][k], m2[k][j]))
                out[i][j] = acc
        return out

    def random_element(self, rng):
        return (self.ring.random_element(rng), self.ring.random_element(rng))

    def commutes_with_sample(self, a, rng, trials=50):
        """Sampled centrality: does a commute with random elements?"""
        for _ in range(trials):
            b = self.random_element(rng)
            if self.mul(a, b) != self.mul(b, a):
                return False
        return True
