"""Partition combinatorics and exact symmetric-polynomial arithmetic.

Partitions are plain tuples of weakly decreasing positive integers; ``()`` is
the empty partition.  A symmetric polynomial in ``n`` variables is a dict
mapping length-``n`` exponent tuples to nonzero exact coefficients (int or
Fraction).  Characters of doubly-symmetric objects (one group acting on rows,
one on columns) use pairs ``(row_exponents, col_exponents)`` as keys.

Expansion into the Schur basis repeatedly subtracts the Schur polynomial of
the lexicographically leading exponent of top degree; Schur polynomials are
unitriangular against monomials (Kostka matrix), so the loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from .errors import NegativeMultiplicityError, NonSymmetricInputError

FLAVORS = ("symmetric", "antisymmetric", "generic")


def partition(parts) -> tuple:
    """Canonicalize an iterable of row lengths: drop zeros, check shape."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    p = tuple(x for x in p if x)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
    return p


def contains(lam, mu) -> bool:
    """True iff the diagram of ``lam`` fits inside the diagram of ``mu``."""
    if len(lam) > len(mu):
        return False
    return all(lam[i] <= mu[i] for i in range(len(lam)))


def transpose(lam) -> tuple:
    """Conjugate partition (reflect the diagram across the diagonal)."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > r) for r in range(lam[0]))


def partitions_of(size, max_rows=None, max_part=None):
    """Yield all partitions of ``size`` (descending-lex order)."""
    if max_part is None:
        max_part = size
    if max_rows is None:
        max_rows = size

    def gen(remaining, cap, rows_left):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    yield from gen(size, max_part, max_rows)


def partitions_upto(size, max_rows=None):
    """All partitions of every size ``0..size``, small sizes first."""
    out = []
    for d in range(size + 1):
        out.extend(partitions_of(d, max_rows=max_rows))
    return out


def hook_content_dim(lam, n) -> int:
    """Dimension of the rank-``n`` irreducible with highest weight ``lam``,
    by the hook content formula.  Independent of tableau enumeration."""
    lam = partition(lam)
    if len(lam) > n:
        return 0
    num = Fraction(1)
    tr = transpose(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j) + (tr[j] - i) - 1
            num *= Fraction(n + j - i, hook)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients by skew tableau enumeration.


@lru_cache(maxsize=None)
def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR skew tableaux of shape nu/lam and content mu.

    Cells are filled in reading order (rows top to bottom, right to left
    within a row); the running content prefix must stay a lattice word,
    rows weakly increase left to right, columns strictly increase.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(lam, nu):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    rows = len(nu)
    inner = tuple(lam[i] if i < len(lam) else 0 for i in range(rows))
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))

    grid = [[0] * nu[r] for r in range(rows)]
    counts = [0] * (len(mu) + 2)

    def fill(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = len(mu)
        if c + 1 < nu[r] and grid[r][c + 1]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and inner[r - 1] <= c < nu[r - 1]:
            # the cell directly above belongs to the filling and is set already
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue  # placing v would break the lattice condition
            counts[v] += 1
            grid[r][c] = v
            total += fill(k + 1)
            grid[r][c] = 0
            counts[v] -= 1
        return total

    return fill(0)


# ---------------------------------------------------------------------------
# Schur polynomials by semistandard tableau enumeration.


@lru_cache(maxsize=None)
def _schur_cached(lam, n):
    if len(lam) > n:
        return {}
    if not lam:
        return {(0,) * n: 1}
    rows = len(lam)
    cells = []
    for r in range(rows):
        for c in range(lam[r]):
            cells.append((r, c))
    grid = [[0] * lam[r] for r in range(rows)]
    weight = [0] * n
    out = {}

    def fill(k):
        if k == len(cells):
            key = tuple(weight)
            out[key] = out.get(key, 0) + 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]  # weakly increasing along the row
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)  # strictly increasing down columns
        for v in range(lo, n + 1):
            grid[r][c] = v
            weight[v - 1] += 1
            fill(k + 1)
            weight[v - 1] -= 1
        grid[r][c] = 0

    fill(0)
    return out


def schur_character(lam, n) -> dict:
    """Schur polynomial s_lam in n variables as an exponent->coefficient dict."""
    return dict(_schur_cached(partition(lam), n))


def schur_dim(lam, n) -> int:
    """Tableau-count dimension; cross-checkable against hook_content_dim."""
    return sum(_schur_cached(partition(lam), n).values())


# ---------------------------------------------------------------------------
# Generic symmetric-dict helpers.


def poly_add_into(acc, poly, scale=1):
    """acc += scale * poly, dropping zero entries.  Mutates and returns acc."""
    for k, v in poly.items():
        c = acc.get(k, 0) + scale * v
        if c:
            acc[k] = c
        else:
            acc.pop(k, None)
    return acc


def poly_product(p, q):
    """Product of two exponent-dict polynomials over the same variable set."""
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            c = out.get(key, 0) + c1 * c2
            if c:
                out[key] = c
            else:
                del out[key]
    return out


def symmetrize_counts(dominant, n):
    """Expand {sorted weight: value} to a full symmetric exponent dict."""
    out = {}
    for w, v in dominant.items():
        padded = tuple(w) + (0,) * (n - len(w))
        for perm in set(permutations(padded)):
            out[perm] = v
    return out


def symmetrize_pair_counts(dominant, n):
    """Bivariate version of symmetrize_counts, keys (row weight, col weight)."""
    out = {}
    for (wr, wc), v in dominant.items():
        pr = tuple(wr) + (0,) * (n - len(wr))
        pc = tuple(wc) + (0,) * (n - len(wc))
        rows = set(permutations(pr))
        cols = set(permutations(pc))
        for a in rows:
            for b in cols:
                out[(a, b)] = v
    return out


def _swap_slots(exp, i):
    e = list(exp)
    e[i], e[i + 1] = e[i + 1], e[i]
    return tuple(e)


def _check_symmetric(p, n, block=None):
    """Exact symmetry check: invariance under every adjacent transposition.

    Adjacent transpositions generate the full symmetric group, so this is a
    complete test, not a sampling heuristic.  ``block`` selects the row (0)
    or column (1) component of bivariate keys.
    """
    for i in range(n - 1):
        for key, coeff in p.items():
            if block is None:
                other = _swap_slots(key, i)
            elif block == 0:
                other = (_swap_slots(key[0], i), key[1])
            else:
                other = (key[0], _swap_slots(key[1], i))
            if p.get(other, 0) != coeff:
                raise NonSymmetricInputError(
                    f"coefficient mismatch between {key} and {other}"
                )


# ---------------------------------------------------------------------------
# Character tables and Schur-basis expansion.


@dataclass
class CharacterTable:
    """Multiset of irreducibles: partition (or partition pair) -> multiplicity."""

    entries: dict
    rank: int

    def multiplicity(self, key):
        return self.entries.get(key, 0)

    def is_multiplicity_free(self) -> bool:
        return all(v == 1 for v in self.entries.values())

    def sorted_items(self):
        return sorted(self.entries.items())

    def total_dim(self) -> int:
        total = 0
        for key, mult in self.entries.items():
            if key and isinstance(key[0], tuple):
                d = hook_content_dim(key[0], self.rank) * hook_content_dim(key[1], self.rank)
            else:
                d = hook_content_dim(key, self.rank)
            total += mult * d
        return total


def _as_exact(c):
    return c if isinstance(c, int) else Fraction(c)


def _as_plain(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def decompose_into_schur(p, n, allow_negative=False) -> CharacterTable:
    """Expand a symmetric polynomial in the Schur basis.

    Raises NonSymmetricInputError for non-symmetric input and
    NegativeMultiplicityError when a negative coefficient appears and
    ``allow_negative`` is false (virtual characters require opting in).
    """
    work = {k: _as_exact(v) for k, v in p.items() if v}
    _check_symmetric(work, n)
    entries = {}
    while work:
        lead = max(work, key=lambda k: (sum(k), k))
        lam = tuple(x for x in lead if x)
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise NonSymmetricInputError(f"leading exponent {lead} is not dominant")
        coeff = work[lead]
        if coeff < 0 and not allow_negative:
            raise NegativeMultiplicityError(f"multiplicity {coeff} at {lam}")
        entries[lam] = _as_plain(coeff)
        poly_add_into(work, schur_character(lam, n), -coeff)
    return CharacterTable(entries, n)


def decompose_pair_into_schur(p, n, allow_negative=False) -> CharacterTable:
    """Bivariate analogue: keys are (row exponent, col exponent) pairs and the
    basis consists of products s_lam(x) * s_mu(y)."""
    work = {k: _as_exact(v) for k, v in p.items() if v}
    _check_symmetric(work, n, block=0)
    _check_symmetric(work, n, block=1)
    entries = {}
    while work:
        lead = max(work, key=lambda k: (sum(k[0]) + sum(k[1]), k))
        lam = tuple(x for x in lead[0] if x)
        mu = tuple(x for x in lead[1] if x)
        for part in (lam, mu):
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise NonSymmetricInputError(f"leading exponent {lead} is not dominant")
        coeff = work[lead]
        if coeff < 0 and not allow_negative:
            raise NegativeMultiplicityError(f"multiplicity {coeff} at {(lam, mu)}")
        entries[(lam, mu)] = _as_plain(coeff)
        sx = schur_character(lam, n)
        sy = schur_character(mu, n)
        for ex, cx in sx.items():
            for ey, cy in sy.items():
                key = (ex, ey)
                c = work.get(key, 0) - coeff * cx * cy
                if c:
                    work[key] = c
                else:
                    work.pop(key, None)
    return CharacterTable(entries, n)


# ---------------------------------------------------------------------------
# Degree components of the three algebras.


def _flavor_variables(flavor, n):
    if flavor == "symmetric":
        return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    if flavor == "antisymmetric":
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if flavor == "generic":
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    raise ValueError(f"unknown flavor {flavor!r}")


def decompose_algebra(flavor, d, n) -> CharacterTable:
    """Schur expansion of the degree-``d`` component, computed by brute
    monomial weight counting (independent of the closed product formula)."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    variables = _flavor_variables(flavor, n)
    if flavor == "generic":
        char = {}
        for combo in combinations_with_replacement(variables, d):
            row = [0] * n
            col = [0] * n
            for (i, j) in combo:
                row[i - 1] += 1
                col[j - 1] += 1
            key = (tuple(row), tuple(col))
            char[key] = char.get(key, 0) + 1
        return decompose_pair_into_schur(char, n)
    char = {}
    for combo in combinations_with_replacement(variables, d):
        w = [0] * n
        for (i, j) in combo:
            w[i - 1] += 1
            w[j - 1] += 1
        key = tuple(w)
        char[key] = char.get(key, 0) + 1
    return decompose_into_schur(char, n)


def algebra_closed_formula(flavor, d, n) -> CharacterTable:
    """The predicted multiplicity-free table for the degree-``d`` component:
    doubled rows, doubled columns, or diagonal pairs, indexed by partitions
    of ``d`` and truncated to shapes with at most ``n`` rows."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    entries = {}
    for lam in partitions_of(d):
        if flavor == "symmetric":
            key = tuple(2 * x for x in lam)
            rows = len(key)
        elif flavor == "antisymmetric":
            key = transpose(tuple(2 * x for x in lam))
            rows = len(key)
        else:
            key = (lam, lam)
            rows = len(lam)
        if rows <= n:
            entries[key] = 1
    return CharacterTable(entries, n)


def fmt_partition(lam) -> str:
    if lam and isinstance(lam[0], tuple):
        return fmt_partition(lam[0]) + "*" + fmt_partition(lam[1])
    return "(" + ",".join(str(x) for x in lam) + ")"
