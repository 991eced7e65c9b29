"""Finite groups as Cayley tables, with the invariants group-algebra
analysis consumes: centers, conjugacy classes, central series, and
Sylow-style direct decompositions.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import (
    NotAGroup,
    NotAnAutomorphism,
    NotAHomomorphism,
    UnsupportedParameter,
)

MAX_ORDER = 4096
# full n^3 associativity sweep only below this; larger tables use a
# generating set and Light's test
FULL_ASSOC_LIMIT = 64


class FiniteGroup:
    """Immutable Cayley-table group; elements are indices into labels."""

    __slots__ = ("order", "labels", "table", "identity", "inverses",
                 "_label_index")

    def __init__(self, labels, table, *, verify=True):
        labels = tuple(labels)
        table = np.asarray(table, dtype=np.int64)
        n = len(labels)
        if n == 0 or table.shape != (n, n):
            raise NotAGroup("table shape does not match label count")
        if n > MAX_ORDER:
            raise UnsupportedParameter(
                f"order {n} exceeds the supported maximum {MAX_ORDER}")
        if table.min() < 0 or table.max() >= n:
            raise NotAGroup("table entries out of range")
        self.order = n
        self.labels = labels
        self.table = table
        self.table.setflags(write=False)
        self._label_index = {lab: i for i, lab in enumerate(labels)}
        if len(self._label_index) != n:
            raise NotAGroup("labels are not distinct")
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        if verify:
            self._verify()

    # -- construction checks --------------------------------------------
    def _find_identity(self):
        n = self.order
        ar = np.arange(n)
        for e in range(n):
            if np.array_equal(self.table[e], ar) and \
                    np.array_equal(self.table[:, e], ar):
                return e
        raise NotAGroup("no identity element")

    def _find_inverses(self):
        inv = np.empty(self.order, dtype=np.int64)
        for i in range(self.order):
            hits = np.nonzero(self.table[i] == self.identity)[0]
            if hits.size != 1:
                raise NotAGroup(f"element {i} has no unique inverse")
            inv[i] = hits[0]
        inv.setflags(write=False)
        return inv

    def _verify(self):
        n = self.order
        T = self.table
        ar = np.arange(n)
        if not (np.array_equal(np.sort(T, axis=1), np.tile(ar, (n, 1)))
                and np.array_equal(np.sort(T, axis=0), np.tile(ar, (n, 1)).T)):
            raise NotAGroup("table is not a Latin square")
        if n <= FULL_ASSOC_LIMIT:
            if not np.array_equal(T[T], T[:, T].reshape(n, n, n)):
                raise NotAGroup("multiplication is not associative")
        else:
            for g in self._generating_set():
                if not np.array_equal(T[T[:, g], :], T[:, T[g, :]]):
                    raise NotAGroup("multiplication is not associative")

    def _generating_set(self):
        gens = []
        reached = {self.identity}
        for i in range(self.order):
            if i in reached:
                continue
            gens.append(i)
            reached = set(self.subgroup_closure(gens))
            if len(reached) == self.order:
                break
        return gens

    # -- basic operations -----------------------------------------------
    def op(self, i, j):
        return int(self.table[i, j])

    def inv(self, i):
        return int(self.inverses[i])

    def power(self, i, k):
        if k < 0:
            i = self.inv(i)
            k = -k
        out = self.identity
        while k:
            if k & 1:
                out = self.op(out, i)
            i = self.op(i, i)
            k >>= 1
        return out

    def element_order(self, i):
        k = 1
        x = i
        while x != self.identity:
            x = self.op(x, i)
            k += 1
        return k

    def index_of(self, label):
        return self._label_index[label]

    def is_commutative(self):
        return bool(np.array_equal(self.table, self.table.T))

    def conjugate(self, g, x):
        """g x g^{-1}."""
        return self.op(self.op(g, x), self.inv(g))

    # -- invariants ------------------------------------------------------
    def conjugacy_classes(self):
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = {self.conjugate(g, x) for g in range(self.order)}
            for y in orbit:
                seen[y] = True
            classes.append(tuple(sorted(orbit)))
        return classes

    def center(self):
        T = self.table
        mask = (T == T.T).all(axis=1)
        return tuple(int(i) for i in np.nonzero(mask)[0])

    def centralizer(self, subset):
        T = self.table
        mask = np.ones(self.order, dtype=bool)
        for x in subset:
            mask &= T[:, x] == T[x, :]
        return tuple(int(i) for i in np.nonzero(mask)[0])

    def subgroup_closure(self, gens):
        closed = {self.identity}
        closed.update(int(g) for g in gens)
        frontier = list(closed)
        while frontier:
            new = []
            for a in list(closed):
                for b in frontier:
                    c = self.op(a, b)
                    if c not in closed:
                        closed.add(c)
                        new.append(c)
                    c = self.op(b, a)
                    if c not in closed:
                        closed.add(c)
                        new.append(c)
            frontier = new
        return tuple(sorted(closed))

    def commutator_subgroup(self):
        comms = set()
        for a in range(self.order):
            for b in range(self.order):
                comms.add(self.op(self.op(a, b),
                                  self.op(self.inv(a), self.inv(b))))
        return self.subgroup_closure(comms)

    def upper_central_series(self):
        """Chain starting at the trivial subgroup, ending when stable."""
        T = self.table
        inv = self.inverses
        series = [(self.identity,)]
        current = {self.identity}
        while True:
            member = np.zeros(self.order, dtype=bool)
            for x in current:
                member[x] = True
            nxt = []
            for g in range(self.order):
                # g lifts to the next center iff every commutator with g
                # lands in the current term
                comm = T[T[g, :], T[inv[g], inv[:]]]
                if member[comm].all():
                    nxt.append(g)
            nxt_t = tuple(nxt)
            if set(nxt_t) == current:
                break
            series.append(nxt_t)
            current = set(nxt_t)
            if len(current) == self.order:
                break
        return series

    def nilpotence_class(self):
        series = self.upper_central_series()
        if len(series[-1]) == self.order:
            return len(series) - 1
        return None

    def is_subgroup(self, subset):
        s = set(subset)
        if self.identity not in s:
            return False
        for a in s:
            if self.inv(a) not in s:
                return False
            for b in s:
                if self.op(a, b) not in s:
                    return False
        return True

    def sylow_direct_decomposition(self, p):
        """(P, H) with G = P x H, P the p-part, or None.

        Succeeds exactly when the p-power-order elements and the
        coprime-order elements both form subgroups that commute with
        each other elementwise and jointly exhaust the group.
        """
        orders = [self.element_order(i) for i in range(self.order)]
        P = [i for i in range(self.order)
             if orders[i] == 1 or _is_p_power(orders[i], p)]
        H = [i for i in range(self.order) if orders[i] % p != 0]
        if len(P) * len(H) != self.order:
            return None
        if not self.is_subgroup(P) or not self.is_subgroup(H):
            return None
        for a in P:
            for b in H:
                if self.op(a, b) != self.op(b, a):
                    return None
        return tuple(sorted(P)), tuple(sorted(H))

    # -- serialization ---------------------------------------------------
    def to_json(self):
        return {"order": self.order, "labels": list(self.labels),
                "table": self.table.tolist()}

    @classmethod
    def from_json(cls, data):
        return cls(data["labels"], data["table"], verify=True)

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup)
                and self.labels == other.labels
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.labels, self.table.tobytes()))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def _is_p_power(k, p):
    while k % p == 0:
        k //= p
    return k == 1


def from_elements(elements, op, label_fn=str, *, verify=True):
    """Materialize a group from abstract elements and a product function."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    if n > MAX_ORDER:
        raise UnsupportedParameter(
            f"order {n} exceeds the supported maximum {MAX_ORDER}")
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[op(a, b)]
    return FiniteGroup([label_fn(e) for e in elements], table, verify=verify)


# -- constructors -------------------------------------------------------

def cyclic(n):
    if n < 1:
        raise UnsupportedParameter("cyclic group needs order >= 1")
    labels = ["e"] + [f"a{'' if k == 1 else '^' + str(k)}"
                      for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(labels, table, verify=False)


def direct_product(g, h):
    def op(x, y):
        return (g.op(x[0], y[0]), h.op(x[1], y[1]))

    elements = list(itertools.product(range(g.order), range(h.order)))

    def label(x):
        return f"({g.labels[x[0]]},{h.labels[x[1]]})"

    return from_elements(elements, op, label, verify=False)


def semidirect_product(n_group, h_group, action):
    """Pairs (n, h) with (n1,h1)(n2,h2) = (n1 * act_h1(n2), h1 h2).

    The action is a sequence (or callable) giving, for each h, a
    permutation of the normal factor; each permutation must be an
    automorphism and the assignment a homomorphism.
    """
    perms = []
    for h in range(h_group.order):
        perm = action(h) if callable(action) else action[h]
        perm = np.asarray(perm, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(n_group.order)):
            raise NotAnAutomorphism(
                f"action of element {h} is not a permutation")
        T = n_group.table
        if not np.array_equal(perm[T], T[perm][:, perm]):
            raise NotAnAutomorphism(
                f"action of element {h} does not respect the product")
        perms.append(perm)
    for h1 in range(h_group.order):
        for h2 in range(h_group.order):
            composed = perms[h1][perms[h2]]
            if not np.array_equal(perms[h_group.op(h1, h2)], composed):
                raise NotAHomomorphism(
                    "action is not a homomorphism into the automorphisms")

    def op(x, y):
        return (n_group.op(x[0], int(perms[x[1]][y[0]])),
                h_group.op(x[1], y[1]))

    elements = list(itertools.product(range(n_group.order),
                                      range(h_group.order)))

    def label(x):
        return f"({n_group.labels[x[0]]},{h_group.labels[x[1]]})"

    return from_elements(elements, op, label, verify=True)


def _two_generator_label(k, l, a="a", b="b"):
    if k == 0 and l == 0:
        return "e"
    part_a = "" if k == 0 else (a if k == 1 else f"{a}^{k}")
    part_b = "" if l == 0 else b
    return part_a + part_b


def quaternion_q8():
    """Order 8: a^4 = 1, b^2 = a^2, b a b^{-1} = a^{-1}."""
    elements = list(itertools.product(range(4), range(2)))

    def op(x, y):
        k1, l1 = x
        k2, l2 = y
        sign = -1 if l1 else 1
        return ((k1 + sign * k2 + 2 * (l1 & l2)) % 4, l1 ^ l2)

    return from_elements(elements,
                         op, lambda e: _two_generator_label(*e), verify=True)


def dihedral(order):
    """Dihedral group of the given (even) order: a^n = b^2 = (ab)^2 = 1."""
    if order < 4 or order % 2:
        raise UnsupportedParameter(
            f"dihedral group needs an even order >= 4, got {order}")
    n = order // 2
    elements = list(itertools.product(range(n), range(2)))

    def op(x, y):
        k1, l1 = x
        k2, l2 = y
        sign = -1 if l1 else 1
        return ((k1 + sign * k2) % n, l1 ^ l2)

    return from_elements(elements,
                         op, lambda e: _two_generator_label(*e), verify=True)


def generalized_quaternion(order):
    """Order 16 only: a^8 = 1, b^2 = a^4, b a b^{-1} = a^{-1}."""
    if order != 16:
        raise UnsupportedParameter(
            f"generalized quaternion supported for order 16, got {order}")
    elements = list(itertools.product(range(8), range(2)))

    def op(x, y):
        k1, l1 = x
        k2, l2 = y
        sign = -1 if l1 else 1
        return ((k1 + sign * k2 + 4 * (l1 & l2)) % 8, l1 ^ l2)

    return from_elements(elements,
                         op, lambda e: _two_generator_label(*e), verify=True)


def semidihedral(order):
    """Order 16 only: a^8 = b^2 = 1, b a b^{-1} = a^3."""
    if order != 16:
        raise UnsupportedParameter(
            f"semidihedral supported for order 16, got {order}")
    elements = list(itertools.product(range(8), range(2)))

    def op(x, y):
        k1, l1 = x
        k2, l2 = y
        mult = 3 if l1 else 1
        return ((k1 + mult * k2) % 8, l1 ^ l2)

    return from_elements(elements,
                         op, lambda e: _two_generator_label(*e), verify=True)


def heisenberg_g(p, n):
    """Triples (y, z, x) over Z_{p^n} in the normal form b^y c^z a^x.

    Product: (y,z,x)(y',z',x') = (y+y', z+z'+x*y', x+x'); the generators
    a=(0,0,1), b=(1,0,0), c=(0,1,0) satisfy a b a^{-1} = b c with c
    central.
    """
    q = p ** n
    if q ** 3 > MAX_ORDER:
        raise UnsupportedParameter(
            f"order {q ** 3} exceeds the supported maximum {MAX_ORDER}")
    elements = list(itertools.product(range(q), repeat=3))

    def op(u, v):
        y1, z1, x1 = u
        y2, z2, x2 = v
        return ((y1 + y2) % q, (z1 + z2 + x1 * y2) % q, (x1 + x2) % q)

    def label(u):
        y, z, x = u
        if (y, z, x) == (0, 0, 0):
            return "e"
        parts = []
        if y:
            parts.append("b" if y == 1 else f"b^{y}")
        if z:
            parts.append("c" if z == 1 else f"c^{z}")
        if x:
            parts.append("a" if x == 1 else f"a^{x}")
        return "".join(parts)

    return from_elements(elements, op, label, verify=q ** 3 <= 1000)


def order32_nc3_group():
    """A nilpotence-class-3 group of order 32.

    Built as (Q8 x C2) semidirect C2, where the involution swaps the two
    quaternion generators and multiplies by the sign carried in the C2
    coordinate.
    """
    q8 = quaternion_q8()
    c2 = cyclic(2)
    n = direct_product(q8, c2)

    # the swap a <-> b on Q8: a^k b^l -> b^k a^l rewritten in normal form
    def q8_swap(k, l):
        # images by multiplicativity of an automorphism: a -> b, b -> a
        x = (0, 1)  # b
        y = (1, 0)  # a
        out = (0, 0)

        def mul(u, v):
            k1, l1 = u
            k2, l2 = v
            sign = -1 if l1 else 1
            return ((k1 + sign * k2 + 2 * (l1 & l2)) % 4, l1 ^ l2)

        for _ in range(k):
            out = mul(out, x)
        for _ in range(l):
            out = mul(out, y)
        return out

    # sign twist: elements with c = 1 additionally pick up a^2
    minus_one = q8.index_of("a^2")
    perm = []
    for qi in range(q8.order):
        for c in range(2):
            k = qi // 2
            l = qi % 2
            # q8 element order in from_elements is product order (k, l)
            img = q8_swap(k, l)
            img_idx = img[0] * 2 + img[1]
            if c == 1:
                img_idx = q8.op(img_idx, minus_one)
            perm.append(img_idx * 2 + c)
    identity_perm = list(range(n.order))
    return semidirect_product(n, c2, [identity_perm, perm])


def order243_nc3_group():
    """A nilpotence-class-3 group of order 3^5.

    Base: 4-tuples (k,l,m,r) over Z_3 with
    (k,l,m,r)(k',l',m',r') = (k+k', l+l'+r m', m+m', r+r'); extended by
    the automorphism (k,l,m,r) -> (k+m+r, l + r(r+1)/2, m+r, r).
    """
    p = 3
    elements = list(itertools.product(range(p), repeat=4))

    def op(u, v):
        k1, l1, m1, r1 = u
        k2, l2, m2, r2 = v
        return ((k1 + k2) % p, (l1 + l2 + r1 * m2) % p,
                (m1 + m2) % p, (r1 + r2) % p)

    base = from_elements(elements, op, str, verify=False)
    index = {e: i for i, e in enumerate(elements)}

    def beta(u):
        k, l, m, r = u
        return ((k + m + r) % p, (l + r * (r + 1) // 2) % p,
                (m + r) % p, r)

    perm1 = [index[beta(e)] for e in elements]
    perm2 = [perm1[j] for j in perm1]
    c3 = cyclic(3)
    return semidirect_product(base, c3,
                              [list(range(len(elements))), perm1, perm2])


# functional aliases matching the operation names used elsewhere

def conjugacy_classes(g):
    return g.conjugacy_classes()


def group_center(g):
    return g.center()


def commutator_subgroup(g):
    return g.commutator_subgroup()


def upper_central_series(g):
    return g.upper_central_series()


def nilpotence_class(g):
    return g.nilpotence_class()


def sylow_direct_decomposition(g, p):
    return g.sylow_direct_decomposition(p)
