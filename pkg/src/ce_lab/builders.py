"""Constructors for the concrete algebras the analyzers consume:
group and monoid algebras, exterior algebras, Cayley-Dickson doubles,
triangular-matrix families, skew-polynomial and derivation quotients,
and polynomial truncations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import Algebra, DerivationTriangularRing
from .errors import (
    AlphaNotCentral,
    AlphaNotSymmetric,
    AlphaNotUnit,
    NoInvolution,
    NotAMonoid,
    NotASemigroup,
    UnsupportedN,
    UnsupportedParameter,
)
from . import scalars as _scalars


# -- group and monoid algebras ------------------------------------------

@dataclass
class GroupAlgebraInfo:
    """A group algebra together with its group-derived structure."""

    algebra: Algebra
    group: object
    class_sums: list
    augmentation_ideal: object

    @property
    def dim(self):
        return self.algebra.dim


def group_algebra(ring, group):
    """The group algebra F[G] with basis labeled by group elements."""
    n = group.order
    zero = ring.zero
    one = ring.one
    table = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[i][j][group.op(i, j)] = one
    unit = [zero] * n
    unit[group.identity] = one
    alg = Algebra(ring, group.labels, table, unit=unit,
                  known_associative=True,
                  known_commutative=group.is_commutative(), check=False)
    sums = []
    for cls in group.conjugacy_classes():
        vec = [zero] * n
        for g in cls:
            vec[g] = one
        sums.append(tuple(vec))
    aug_rows = []
    for g in range(n):
        if g == group.identity:
            continue
        row = [zero] * n
        row[g] = one
        row[group.identity] = ring.neg(one)
        aug_rows.append(row)
    aug = linalg.Subspace(ring, n, aug_rows)
    return GroupAlgebraInfo(alg, group, sums, aug)


def monoid_algebra(ring, table, labels=None):
    """Monoid ring over a finite monoid given by its Cayley table."""
    table = [list(r) for r in table]
    n = len(table)
    if any(len(r) != n for r in table):
        raise NotAMonoid("monoid table must be square")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotASemigroup(
                        f"associativity fails at ({i}, {j}, {k})")
    identity = None
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAMonoid("no identity element")
    if labels is None:
        labels = [f"m{i}" for i in range(n)]
    zero, one = ring.zero, ring.one
    consts = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            consts[i][j][table[i][j]] = one
    unit = [zero] * n
    unit[identity] = one
    return Algebra(ring, labels, consts, unit=unit,
                   known_associative=True, check=False)


# -- exterior algebras --------------------------------------------------

def _subset_order(n):
    """All subsets of {0..n-1} as bitmasks, graded by size then value."""
    return sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))


def _wedge_sign(s, t):
    """Parity of the merge: count pairs (a in s, b in t) with a > b."""
    inversions = 0
    for a in range(s.bit_length()):
        if s >> a & 1:
            inversions += bin(t & ((1 << a) - 1)).count("1")
    return -1 if inversions % 2 else 1


def _mask_label(mask):
    if mask == 0:
        return "1"
    return "^".join(f"e{i + 1}" for i in range(mask.bit_length())
                    if mask >> i & 1)


def grassmann(ring, n):
    """Exterior algebra on n generators: dim 2^n, e_i e_j = -e_j e_i."""
    masks = _subset_order(n)
    pos = {m: i for i, m in enumerate(masks)}
    dim = 1 << n
    zero, one = ring.zero, ring.one
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i, s in enumerate(masks):
        for j, t in enumerate(masks):
            if s & t:
                continue
            sign = _wedge_sign(s, t)
            coeff = one if sign > 0 else ring.neg(one)
            table[i][j][pos[s | t]] = coeff
    unit = [zero] * dim
    unit[pos[0]] = one
    return Algebra(ring, [_mask_label(m) for m in masks], table, unit=unit,
                   known_associative=True, check=False)


def grassmann_over(base, n):
    """Exterior algebra with coefficients in a unital algebra.

    Basis pairs (a_i, S); the wedge generators commute with the base.
    """
    if base.unit is None and base.find_unit() is None:
        raise UnsupportedParameter("base algebra must be unital")
    ring = base.ring
    masks = _subset_order(n)
    pos = {m: i for i, m in enumerate(masks)}
    d = base.dim
    dim = d * (1 << n)
    zero = ring.zero

    def fuse(i, mi):
        return mi * d + i

    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for mi, s in enumerate(masks):
        for mj, t in enumerate(masks):
            if s & t:
                continue
            sign = _wedge_sign(s, t)
            mk = pos[s | t]
            for i in range(d):
                for j in range(d):
                    prod = base.table[i][j]
                    out = table[fuse(i, mi)][fuse(j, mj)]
                    for k, c in enumerate(prod):
                        if ring.is_zero(c):
                            continue
                        val = c if sign > 0 else ring.neg(c)
                        idx = fuse(k, mk)
                        out[idx] = ring.add(out[idx], val)
    labels = []
    for m in masks:
        for lab in base.labels:
            labels.append(lab if m == 0
                          else f"{lab}.{_mask_label(m)}")
    unit = [zero] * dim
    for k, c in enumerate(base.unit):
        unit[fuse(k, 0)] = c
    return Algebra(ring, labels, table, unit=unit, check=False)


# -- Cayley-Dickson doubling --------------------------------------------

def _doubled_labels(labels):
    """Names for the second copy: suffix chosen to avoid collisions."""
    candidates = ["v", "w", "s"] + [f"v{k}" for k in range(2, 10)]
    for suffix in candidates:
        new = [suffix if lab == "1" else f"{lab}{suffix}" for lab in labels]
        if len(set(new) | set(labels)) == 2 * len(labels):
            return new
    return [f"d.{lab}" for lab in labels]


def cayley_dickson(base, alpha):
    """Double a unital involutive algebra by the parameter alpha.

    Pairs multiply by (a1,a2)(a3,a4) = (a1 a3 + alpha a4 a2*, a1* a4 + a3 a2)
    and the new involution is (a,b)* = (a*, -b).
    """
    ring = base.ring
    if base.involution is None:
        raise NoInvolution("doubling needs an involution on the base")
    if base.unit is None:
        raise NoInvolution("doubling needs a unital base")
    if not ring.is_unit(alpha):
        raise AlphaNotUnit(f"alpha = {ring.format(alpha)} is not invertible")
    alpha_elem = tuple(ring.mul(alpha, c) for c in base.unit)
    if tuple(base.star_coords(alpha_elem)) != alpha_elem:
        raise AlphaNotSymmetric("alpha is moved by the involution")
    for i in range(base.dim):
        e = base.basis_coords(i)
        if (base.multiply_coords(alpha_elem, e)
                != base.multiply_coords(e, alpha_elem)):
            raise AlphaNotCentral("alpha does not commute with the base")

    d = base.dim
    dim = 2 * d
    zero = ring.zero
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]

    def put(block_row, i, block_col, j, vec, offset):
        row = table[block_row * d + i][block_col * d + j]
        for k, c in enumerate(vec):
            row[offset * d + k] = c

    star = base.star_coords
    mul = base.multiply_coords
    for i in range(d):
        ei = base.basis_coords(i)
        ei_star = star(ei)
        for j in range(d):
            ej = base.basis_coords(j)
            # (ei, 0)(ej, 0) = (ei ej, 0)
            put(0, i, 0, j, mul(ei, ej), 0)
            # (ei, 0)(0, ej) = (0, ei* ej)
            put(0, i, 1, j, mul(ei_star, ej), 1)
            # (0, ei)(ej, 0) = (0, ej ei)
            put(1, i, 0, j, mul(ej, ei), 1)
            # (0, ei)(0, ej) = (alpha ej ei*, 0)
            vec = mul(ej, ei_star)
            put(1, i, 1, j, [ring.mul(alpha, c) for c in vec], 0)
    labels = list(base.labels) + _doubled_labels(base.labels)
    unit = list(base.unit) + [zero] * d
    inv = [[zero] * dim for _ in range(dim)]
    minus_one = ring.neg(ring.one)
    for i in range(d):
        for k in range(d):
            inv[i][k] = base.involution[i][k]
        # the second component is negated as-is, without the base star
        inv[d + i][d + i] = minus_one
    return Algebra(ring, labels, table, unit=unit, involution=inv,
                   check=True)


def scalar_base_algebra(ring):
    """The ring itself as a one-dimensional algebra with trivial involution."""
    return Algebra(ring, ["1"], [[[ring.one]]], unit=[ring.one],
                   involution=[[ring.one]], known_associative=True,
                   known_commutative=True, check=False)


def _change_signs(alg, signs):
    """Rescale basis vectors by +-1, keeping unit and involution aligned."""
    ring = alg.ring
    svals = [ring.one if s > 0 else ring.neg(ring.one) for s in signs]
    dim = alg.dim
    table = [[[ring.mul(ring.mul(svals[i], svals[j]),
                        ring.mul(svals[k], alg.table[i][j][k]))
               for k in range(dim)]
              for j in range(dim)] for i in range(dim)]
    unit = [ring.mul(svals[k], c) for k, c in enumerate(alg.unit)] \
        if alg.unit is not None else None
    inv = None
    if alg.involution is not None:
        inv = [[ring.mul(ring.mul(svals[i], svals[k]),
                         alg.involution[i][k])
                for k in range(dim)] for i in range(dim)]
    return Algebra(ring, alg.labels, table, unit=unit, involution=inv,
                   check=True)


def quaternion_algebra(ring, a, b):
    """Generalized quaternions: i^2 = a, j^2 = b, ij = -ji = k."""
    one_dim = scalar_base_algebra(ring)
    step1 = cayley_dickson(one_dim, a)
    step2 = cayley_dickson(step1, b)
    # rename the doubled basis 1, i, v, iv to 1, i, j, k with k = ij
    flipped = _change_signs(step2, [1, 1, 1, -1])
    return Algebra(ring, ["1", "i", "j", "k"], flipped.table,
                   unit=flipped.unit, involution=flipped.involution,
                   check=False)


def octonion_algebra(ring, a, b, c):
    """One more doubling of the generalized quaternions."""
    return cayley_dickson(quaternion_algebra(ring, a, b), c)


# -- triangular matrix families -----------------------------------------

def ce_matrix_family(ring, n, adjoin_unit=True):
    """Strictly upper triangular family with one free first row.

    Coordinates v_2 .. v_n fill the first row; four positions repeat
    first-row entries ((2,4) carries v_3, (2,n) carries v_{n-2}, (3,n)
    carries v_{n-1}, (n-2,n) carries v_2, (n-1,n) carries v_3), which
    closes the span under matrix multiplication:
    product(v, w) = v_2 w_3 at position 4 plus
    (v_2 w_{n-2} + v_3 w_{n-1} + v_{n-2} w_2 + v_{n-1} w_3) at position n.
    A unit is adjoined by default so the algebra is local.
    """
    if n < 7:
        raise UnsupportedN(f"family needs n >= 7, got {n}")
    m = n - 1                     # coordinates v_2 .. v_n
    zero, one = ring.zero, ring.one

    def idx(j):
        # coordinate index of v_j
        return j - 2

    core = [[[zero] * m for _ in range(m)] for _ in range(m)]

    def add_at(i, j, k, coeff):
        core[i][j][k] = ring.add(core[i][j][k], coeff)

    add_at(idx(2), idx(3), idx(4), one)
    add_at(idx(2), idx(n - 2), idx(n), one)
    add_at(idx(3), idx(n - 1), idx(n), one)
    add_at(idx(n - 2), idx(2), idx(n), one)
    add_at(idx(n - 1), idx(3), idx(n), one)
    labels = [f"u{j}" for j in range(2, n + 1)]
    if not adjoin_unit:
        return Algebra(ring, labels, core, known_associative=True,
                       check=False)
    dim = m + 1
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                table[1 + i][1 + j][1 + k] = core[i][j][k]
    for i in range(dim):
        table[0][i][i] = one
        table[i][0][i] = one
    unit = [one] + [zero] * m
    return Algebra(ring, ["1"] + labels, table, unit=unit,
                   known_associative=True, check=False)


def ce_matrix_family_right_ideal(algebra):
    """The right-but-not-left ideal spanned by u3 and un."""
    labels = algebra.labels
    rows = []
    for lab in ("u3", labels[-1]):
        i = labels.index(lab)
        row = [algebra.ring.zero] * algebra.dim
        row[i] = algebra.ring.one
        rows.append(row)
    return linalg.Subspace(algebra.ring, algebra.dim, rows)


def _matrix_span_algebra(ring, labels, mats, unit_mat=None, **flags):
    """Algebra from explicit matrices; products resolved inside the span."""
    flat = [sum((list(r) for r in m), []) for m in mats]
    table = []
    for mi in mats:
        row = []
        for mj in mats:
            prod = linalg.mat_mul(ring, mi, mj)
            sol = linalg.solve(ring, flat,
                               sum((list(r) for r in prod), []))
            if sol is None:
                raise NotASemigroup("matrix span is not closed")
            row.append(sol)
        table.append(row)
    unit = None
    if unit_mat is not None:
        unit = linalg.solve(ring, flat, sum((list(r) for r in unit_mat), []))
    return Algebra(ring, labels, table, unit=unit, check=True, **flags)


def t_algebra(ring, variant, k=1):
    """Subalgebras of 3x3 upper triangular matrices over a field.

    Variants: "K" (unit and corner), "R" (unit, e12, corner), "S" (unit,
    e12 + k e23, corner), "T" (unit, e12, e23, corner).
    """
    z, o = ring.zero, ring.one
    if isinstance(k, int):
        k = ring.from_int(k)

    def mat(entries):
        out = [[z] * 3 for _ in range(3)]
        for (r, c), val in entries.items():
            out[r][c] = val
        return out

    ident = mat({(0, 0): o, (1, 1): o, (2, 2): o})
    e12 = mat({(0, 1): o})
    e23 = mat({(1, 2): o})
    e13 = mat({(0, 2): o})
    if variant == "K":
        return _matrix_span_algebra(ring, ["1", "e13"], [ident, e13],
                                    unit_mat=ident, known_associative=True)
    if variant == "R":
        return _matrix_span_algebra(ring, ["1", "e12", "e13"],
                                    [ident, e12, e13], unit_mat=ident,
                                    known_associative=True)
    if variant == "S":
        if ring.is_zero(k):
            raise UnsupportedParameter("parameter k must be nonzero")
        w = mat({(0, 1): o, (1, 2): k})
        return _matrix_span_algebra(ring, ["1", "w", "e13"],
                                    [ident, w, e13], unit_mat=ident,
                                    known_associative=True)
    if variant == "T":
        return _matrix_span_algebra(ring, ["1", "e12", "e23", "e13"],
                                    [ident, e12, e23, e13], unit_mat=ident,
                                    known_associative=True)
    raise UnsupportedParameter(f"unknown variant {variant!r}")


def t_algebra_minimal_right_ideal(algebra):
    """The span of e23 (minimal right ideal of the T variant)."""
    i = algebra.labels.index("e23")
    row = [algebra.ring.zero] * algebra.dim
    row[i] = algebra.ring.one
    return linalg.Subspace(algebra.ring, algebra.dim, [row])


# -- skew polynomial quotient -------------------------------------------

def skew_poly_quotient(q, k):
    """GF(q)[x; Frobenius] / (x^k) as an algebra over the prime field.

    Basis t^i x^j with x f = frobenius(f) x and x^k = 0; t is the field
    generator of GF(q) over F_p.
    """
    if k < 2:
        raise UnsupportedParameter("truncation exponent must be >= 2")
    if q < 2:
        raise UnsupportedParameter(f"{q} is not a prime power")
    p = None
    cand = 2
    while cand * cand <= q:
        if q % cand == 0:
            p = cand
            break
        cand += 1
    if p is None:
        p = q
    deg = 0
    qq = q
    while qq % p == 0:
        qq //= p
        deg += 1
    if qq != 1:
        raise UnsupportedParameter(f"{q} is not a prime power")
    field = _scalars.galois_field(p, deg) if deg > 1 else None
    prime = _scalars.prime_field(p)
    dim = deg * k
    zero, one = prime.zero, prime.one

    def pos(i, j):
        return j * deg + i

    labels = []
    for j in range(k):
        for i in range(deg):
            t_part = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            x_part = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            lab = t_part + ("*" if t_part and x_part else "") + x_part
            labels.append(lab or "1")
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    if field is None:
        # q = p: the commutative truncated polynomial ring F_p[x]/(x^k)
        for j1 in range(k):
            for j2 in range(k):
                if j1 + j2 < k:
                    table[pos(0, j1)][pos(0, j2)][pos(0, j1 + j2)] = one
        unit = [zero] * dim
        unit[pos(0, 0)] = one
        return Algebra(prime, labels, table, unit=unit,
                       known_associative=True, check=False)

    theta = field._pad((0, 1))
    powers = [field.one]
    for _ in range(deg - 1):
        powers.append(field.mul(powers[-1], theta))

    def field_coords(val):
        # GF(p^deg) payloads are coefficient tuples over the power basis
        return tuple(val)

    for i1 in range(deg):
        for j1 in range(k):
            for i2 in range(deg):
                for j2 in range(k):
                    if j1 + j2 >= k:
                        continue
                    # t^i1 x^j1 t^i2 x^j2 = t^i1 sigma^j1(t^i2) x^(j1+j2)
                    val = powers[i2]
                    for _ in range(j1):
                        val = field.frobenius(val)
                    val = field.mul(powers[i1], val)
                    coords = field_coords(val)
                    row = table[pos(i1, j1)][pos(i2, j2)]
                    for l, c in enumerate(coords):
                        row[pos(l, j1 + j2)] = c
    unit = [zero] * dim
    unit[pos(0, 0)] = one
    return Algebra(prime, labels, table, unit=unit,
                   known_associative=True, check=False)


# -- uniserial derivation quotient --------------------------------------

def uniserial_derivation_ring(p):
    """Dim-4p algebra over F_p(u) with x t = t x + x^3-type twisting.

    Basis t^i x^j (i < p, j < 4) over the rational function field
    F_p(u), with t^p = u, x^4 = 0, and x t = t x + x^3.
    """
    if p not in (2, 3):
        raise UnsupportedParameter("supported characteristics: 2 and 3")
    K = _scalars.rational_function_field(p, "u")
    u_val = K.generator("u")
    dim = 4 * p
    zero = K.zero

    def pos(i, j):
        return j * p + i

    labels = []
    for j in range(4):
        for i in range(p):
            t_part = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            x_part = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            lab = t_part + ("*" if t_part and x_part else "") + x_part
            labels.append(lab or "1")

    def add_term(row, t_exp, x_exp, coeff):
        # reduce t^e with e >= p via t^p = u; drop x^e with e >= 4
        if x_exp >= 4 or K.is_zero(coeff):
            return
        while t_exp >= p:
            t_exp -= p
            coeff = K.mul(coeff, u_val)
        row[pos(t_exp, x_exp)] = K.add(row[pos(t_exp, x_exp)], coeff)

    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i1 in range(p):
        for j1 in range(4):
            for i2 in range(p):
                for j2 in range(4):
                    row = table[pos(i1, j1)][pos(i2, j2)]
                    if j1 == 0 or j1 >= 2:
                        # x^j1 commutes with t for j1 = 0, 2, 3
                        add_term(row, i1 + i2, j1 + j2, K.one)
                    else:
                        # x t^i2 = t^i2 x + i2 t^(i2-1) x^3
                        add_term(row, i1 + i2, 1 + j2, K.one)
                        if i2:
                            add_term(row, i1 + i2 - 1, 3 + j2,
                                     K.from_int(i2))
    unit = [zero] * dim
    unit[pos(0, 0)] = K.one
    return Algebra(K, labels, table, unit=unit, known_associative=True,
                   known_commutative=False, check=False)


# -- derivation triangular pairs and truncation -------------------------

def jelonek_triangular(base):
    """Pairs over a two-variable polynomial ring with the twisted product."""
    ring = _scalars.polynomial_ring(base, ("x", "y"))
    return DerivationTriangularRing(ring, "d/dx", "d/dy")


def truncated_polynomial(base, k):
    """base[x]/(x^k): dim multiplies by k, x central and nilpotent."""
    if k < 1:
        raise UnsupportedParameter("truncation exponent must be >= 1")
    ring = base.ring
    d = base.dim
    dim = d * k
    zero = ring.zero

    def pos(i, j):
        return j * d + i

    labels = []
    for j in range(k):
        for lab in base.labels:
            if j == 0:
                labels.append(lab)
            else:
                x_part = "x" if j == 1 else f"x^{j}"
                labels.append(f"{lab}.{x_part}")
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for j1 in range(k):
        for j2 in range(k):
            if j1 + j2 >= k:
                continue
            for i1 in range(d):
                for i2 in range(d):
                    prod = base.table[i1][i2]
                    row = table[pos(i1, j1)][pos(i2, j2)]
                    for l, c in enumerate(prod):
                        row[pos(l, j1 + j2)] = c
    unit = None
    if base.unit is not None:
        unit = [zero] * dim
        for i, c in enumerate(base.unit):
            unit[pos(i, 0)] = c
    return Algebra(ring, labels, table, unit=unit,
                   known_associative=base._assoc,
                   known_commutative=base._comm, check=False)


def derivation_pair_algebra(p):
    """Finite model of the derivation-twisted pair ring over F_p.

    Pairs (f, g) with f, g in F_p[x, y]/(x^p, y^p) multiply as
    (f1, g1)(f2, g2) = (f1 f2, f1 g2 + g1 f2 + df1/dx * df2/dy).
    Truncating at the p-th powers keeps both partial derivatives
    well defined, so the infinite pair ring has this finite quotient.
    """
    if not _scalars.is_prime(p):
        raise UnsupportedParameter("the truncation exponent must be prime")
    ring = _scalars.prime_field(p)
    mono = [(a, b) for a in range(p) for b in range(p)]
    d = len(mono)
    dim = 2 * d

    def mono_label(a, b):
        parts = []
        if a:
            parts.append("x" if a == 1 else f"x^{a}")
        if b:
            parts.append("y" if b == 1 else f"y^{b}")
        return "*".join(parts) if parts else "1"

    labels = [mono_label(a, b) for a, b in mono]
    labels += [f"({mono_label(a, b)})'" for a, b in mono]
    pos = {m: i for i, m in enumerate(mono)}
    table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]

    def put(row, slot, a, b, coeff):
        if coeff % p and a < p and b < p:
            row[slot * d + pos[(a, b)]] = (row[slot * d + pos[(a, b)]] + coeff) % p

    for i1, (a1, b1) in enumerate(mono):
        for i2, (a2, b2) in enumerate(mono):
            # first coordinates multiply as plain truncated monomials
            put(table[i1][i2], 0, a1 + a2, b1 + b2, 1)
            # the derivation cross term lands in the second coordinate
            if a1 and b2:
                put(table[i1][i2], 1, a1 - 1 + a2, b1 + b2 - 1, a1 * b2)
            put(table[i1][d + i2], 1, a1 + a2, b1 + b2, 1)
            put(table[d + i1][i2], 1, a1 + a2, b1 + b2, 1)
    unit = [0] * dim
    unit[pos[(0, 0)]] = 1
    return Algebra(ring, labels, table, unit=unit, known_associative=True)
