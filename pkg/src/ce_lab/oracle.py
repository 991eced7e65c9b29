"""Randomized cross-checks between the essentiality strategies.

Each batch builds seeded random unital algebras, runs the enumeration and
socle deciders side by side, and checks the structural consequences every
essential verdict must carry: central idempotents, and a nonzero nilpotent
part of the center whenever the algebra fails to commute.  Reports carry
no timing fields, so a fixed seed reproduces the bytes exactly.
"""

import json
import random

from .algebra import Algebra, is_commutative
from .analyzers import (
    all_idempotents_central,
    center_nilradical,
    is_centrally_essential,
)
from .errors import UnsupportedParameter

MAX_RANDOM_DIM = 4


def random_unital_algebra(ring, inner_dim, seed):
    """Adjoin an identity to a random structure-constant table."""
    rng = random.Random(seed)
    d = inner_dim + 1
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            if i == 0:
                e = [ring.zero] * d
                e[j] = ring.one
                row.append(e)
            elif j == 0:
                e = [ring.zero] * d
                e[i] = ring.one
                row.append(e)
            else:
                row.append([ring.random_element(rng) for _ in range(d)])
        table.append(row)
    unit = [ring.one] + [ring.zero] * inner_dim
    return Algebra(ring, [f"g{i}" for i in range(d)], table, unit=unit,
                   check=False)


def _strategy_verdicts(algebra):
    """Run both deciders; kept separate so tests can inject disagreements."""
    by_enum = is_centrally_essential(algebra, strategy="enumerate").verdict
    by_socle = is_centrally_essential(algebra, strategy="socle").verdict
    return by_enum, by_socle


def check_one(algebra):
    """Return None if all invariants hold, else a description of the break."""
    by_enum, by_socle = _strategy_verdicts(algebra)
    if by_enum is not by_socle:
        return {
            "kind": "strategy-disagreement",
            "enumerate": by_enum,
            "socle": by_socle,
        }
    if by_enum:
        if not all_idempotents_central(algebra):
            return {"kind": "noncentral-idempotent", "enumerate": by_enum}
        if not is_commutative(algebra) and center_nilradical(algebra).rank == 0:
            return {"kind": "semiprime-noncommutative", "enumerate": by_enum}
    return None


def _table_with(algebra, i, j, k, value):
    table = [[list(cell) for cell in row] for row in algebra.table]
    table[i][j][k] = value
    return Algebra(algebra.ring, algebra.labels, table, unit=algebra.unit,
                   check=False)


def shrink_failure(algebra):
    """Greedily zero structure constants while the invariant still breaks."""
    ring = algebra.ring
    current = algebra
    changed = True
    while changed:
        changed = False
        for i in range(current.dim):
            for j in range(current.dim):
                for k in range(current.dim):
                    c = current.table[i][j][k]
                    if ring.is_zero(c):
                        continue
                    candidate = _table_with(current, i, j, k, ring.zero)
                    if check_one(candidate) is not None:
                        current = candidate
                        changed = True
    return current


def run_batch(ring, ring_token, count, inner_dim, seed, dump_path=None):
    """Drive ``count`` seeded random algebras; returns (report, exit_code)."""
    if inner_dim > MAX_RANDOM_DIM:
        raise UnsupportedParameter(
            f"random tables support dimension up to {MAX_RANDOM_DIM}")
    ce_true = 0
    noncomm_ce = 0
    failures = []
    for index in range(count):
        algebra = random_unital_algebra(ring, inner_dim, f"{seed}:{index}")
        problem = check_one(algebra)
        if problem is None:
            verdict = is_centrally_essential(algebra, strategy="enumerate").verdict
            if verdict:
                ce_true += 1
                if not is_commutative(algebra):
                    noncomm_ce += 1
            continue
        problem["index"] = index
        small = shrink_failure(algebra)
        problem["algebra"] = small.to_json()
        failures.append(problem)
        if dump_path is not None:
            with open(dump_path, "w") as fh:
                json.dump(problem, fh, sort_keys=True, indent=2)
                fh.write("\n")
        break
    report = {
        "scalar": ring_token,
        "dim": inner_dim,
        "count": count,
        "seed": seed,
        "checked": (failures[0]["index"] + 1) if failures else count,
        "ce_true": ce_true,
        "noncommutative_ce": noncomm_ce,
        "failures": [
            {k: v for k, v in f.items() if k != "algebra"} for f in failures
        ],
    }
    return report, (1 if failures else 0)
