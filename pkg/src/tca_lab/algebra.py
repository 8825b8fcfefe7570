"""Polynomial models of quadratic-variable algebras with a derivation action.

Four variable systems share one implementation:

* ``symmetric``      x[i,j] = x[j,i]           (i <= j stored),
* ``antisymmetric``  x[i,j] = -x[j,i], x[i,i]=0 (i < j stored),
* ``generic``        independent x[i,j] with separate row and column actions,
* ``degree_one``     two families x[i], y[i] ("red"/"blue") moved in lockstep.

A polynomial is a dict mapping monomials to exact coefficients, where a
monomial is a sorted tuple of stored variables.  The rank-n derivation
action is ``act(a,b): x[b,...] -> x[a,...]`` extended by the Leibniz rule;
for the generic system the row and column copies act independently.

Ideals are generated by finite sets of polynomials together with everything
the derivation action produces from them.  Graded pieces are computed one
weight at a time, which keeps every matrix small: the weight-w slice of
degree d is spanned by (monomial of weight w-w') * (generator component of
weight w').  For ideals generated by a single highest-weight vector the
needed generator slices are produced on demand by applying ordered products
of lowering operators (a Poincare-Birkhoff-Witt spanning set), so the full
generating representation is never materialized.

Initial data: a vector of "admissible" weight (every coordinate 0 or 1) is
supported on squarefree monomials with all indices distinct, i.e. on
matchings of its support; its initial matching is the largest support
matching in the total order of :mod:`tca_lab.matchings`.  The initial set
of an ideal collects the leading matchings of every admissible slice, read
off as the pivots of an echelon form whose columns are sorted descending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .errors import DegreeOverflowError, ZeroVectorError
from .partitions import partitions_of
from .matchings import (
    Move,
    colored_key,
    colored_set,
    degree_one_moves,
    matching,
    matching_key,
    type1_moves,
    type2_moves,
)

FLAVORS = ("symmetric", "antisymmetric", "generic", "degree_one")
MATCHING_FLAVORS = ("symmetric", "antisymmetric")


@dataclass(frozen=True)
class VariableSystem:
    """A flavor plus a rank; all polynomial operations take one of these."""

    flavor: str
    rank: int

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def variables(self):
        n = self.rank
        if self.flavor == "symmetric":
            return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        if self.flavor == "antisymmetric":
            return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if self.flavor == "generic":
            return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        return [(c, i) for c in (0, 1) for i in range(1, n + 1)]

    def canonical(self, i, j):
        """Store an index pair, returning (variable, sign); sign 0 kills it."""
        if self.flavor == "symmetric":
            return ((i, j) if i <= j else (j, i)), 1
        if self.flavor == "antisymmetric":
            if i == j:
                return None, 0
            return ((i, j), 1) if i < j else ((j, i), -1)
        return (i, j), 1

    def weight(self, mono):
        """Weight of a monomial: a tuple, or a (row, col) pair of tuples."""
        n = self.rank
        if self.flavor == "generic":
            row = [0] * n
            col = [0] * n
            for i, j in mono:
                row[i - 1] += 1
                col[j - 1] += 1
            return (tuple(row), tuple(col))
        w = [0] * n
        if self.flavor == "degree_one":
            for _, i in mono:
                w[i - 1] += 1
        else:
            for i, j in mono:
                w[i - 1] += 1
                w[j - 1] += 1
        return tuple(w)

    def sides(self):
        return ("row", "col") if self.flavor == "generic" else (None,)


# ---------------------------------------------------------------------------
# Polynomial plumbing.


def term(system, coeff, pairs):
    """Build a one-term polynomial from raw index pairs, canonicalizing."""
    sign = 1
    out = []
    for i, j in pairs:
        if system.flavor == "degree_one":
            out.append((i, j))
            continue
        v, s = system.canonical(i, j)
        if s == 0:
            return {}
        sign *= s
        out.append(v)
    c = Fraction(coeff) * sign
    if not c:
        return {}
    return {tuple(sorted(out)): c}


def poly_add(acc, other, scale=1):
    """acc += scale*other in place; zero coefficients are dropped."""
    for m, c in other.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


def poly_scale(p, c):
    return {m: v * c for m, v in p.items()} if c else {}

def poly_degree(p):
    return max((len(m) for m in p), default=0)


def mono_mul_poly(mono, p):
    """Multiply every term of ``p`` by a fixed stored monomial."""
    return {tuple(sorted(mono + m)): c for m, c in p.items()}


def weight_split(system, p):
    """Split a polynomial into weight-homogeneous pieces."""
    out = {}
    for m, c in p.items():
        out.setdefault(system.weight(m), {})[m] = c
    return out


def lie_act(system, a, b, p, side=None):
    """Derivation act(a,b) applied to ``p``; ``side`` picks the row or column
    action of the generic system and must be None otherwise."""
    if system.flavor == "generic":
        if side not in ("row", "col"):
            raise ValueError("generic system needs side='row' or side='col'")
    elif side is not None:
        raise ValueError("side is only meaningful for the generic system")
    out = {}
    for mono, coeff in p.items():
        for t, v in enumerate(mono):
            repls = []
            if system.flavor == "degree_one":
                if v[1] == b:
                    repls.append(((v[0], a), 1))
            elif system.flavor == "generic":
                if side == "row" and v[0] == b:
                    repls.append(((a, v[1]), 1))
                elif side == "col" and v[1] == b:
                    repls.append(((v[0], a), 1))
            else:
                if v[0] == b:
                    repls.append(system.canonical(a, v[1]))
                if v[1] == b:
                    repls.append(system.canonical(v[0], a))
            for nv, sign in repls:
                if sign == 0:
                    continue
                nm = tuple(sorted(mono[:t] + (nv,) + mono[t + 1:]))
                c = out.get(nm, 0) + sign * coeff
                if c:
                    out[nm] = c
                else:
                    del out[nm]
    return out


def all_ops(system):
    """All off-diagonal derivation labels (a, b, side)."""
    n = system.rank
    return [
        (a, b, side)
        for side in system.sides()
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if a != b
    ]


# ---------------------------------------------------------------------------
# Exact incremental row reduction.


class Span:
    """Row space with echelon pivots under a configurable monomial key.

    Stored rows keep their largest monomial (under the key) as pivot with
    coefficient 1 and strictly smaller tails, so the pivot set equals the
    set of leading monomials of the whole row space, and ``reduce``
    computes the canonical normal form supported on non-pivot monomials.
    """

    def __init__(self, key=None):
        self._key = key if key is not None else (lambda m: m)
        self.rows = {}

    def reduce(self, vec):
        vec = dict(vec)
        while True:
            hits = [m for m in vec if m in self.rows]
            if not hits:
                return vec
            m = max(hits, key=self._key)
            c = vec[m]
            for k, v in self.rows[m].items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)

    def add(self, vec):
        """Reduce and insert; returns the stored row, or None if dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        piv = max(r, key=self._key)
        c = r[piv]
        row = {k: Fraction(v) / c for k, v in r.items()}
        self.rows[piv] = row
        return row

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return list(self.rows.keys())

    def vectors(self):
        return list(self.rows.values())


def rep_closure(system, gens):
    """Basis of the smallest derivation-stable subspace containing ``gens``.

    Generators are split into weight-homogeneous pieces first; the action
    preserves this, so every returned row is weight-homogeneous.
    """
    span = Span()
    queue = []
    for g in gens:
        for piece in weight_split(system, g).values():
            row = span.add(piece)
            if row is not None:
                queue.append(row)
    ops = all_ops(system)
    while queue:
        vec = queue.pop()
        for a, b, side in ops:
            img = lie_act(system, a, b, vec, side)
            if not img:
                continue
            row = span.add(img)
            if row is not None:
                queue.append(row)
    return span.vectors()


# ---------------------------------------------------------------------------
# Monomial enumeration by degree and weight.


def monomials_of_degree(system, d):
    return list(combinations_with_replacement(system.variables(), d))


def _var_weight(system, v):
    n = system.rank
    if system.flavor == "generic":
        row = [0] * n
        col = [0] * n
        row[v[0] - 1] += 1
        col[v[1] - 1] += 1
        return tuple(row) + tuple(col)
    w = [0] * n
    if system.flavor == "degree_one":
        w[v[1] - 1] += 1
    else:
        w[v[0] - 1] += 1
        w[v[1] - 1] += 1
    return tuple(w)


def monomials_of_weight(system, d, w):
    """All degree-``d`` monomials of exact weight ``w``."""
    if system.flavor == "generic":
        target = tuple(w[0]) + tuple(w[1])
    else:
        target = tuple(w)
    unit = 2 if system.flavor in MATCHING_FLAVORS else 1
    if system.flavor == "generic":
        if sum(w[0]) != d or sum(w[1]) != d:
            return []
    elif sum(target) != unit * d:
        return []
    variables = system.variables()
    vw = [_var_weight(system, v) for v in variables]
    out = []
    mono = []

    def rec(idx, d_left, left):
        if d_left == 0:
            if not any(left):
                out.append(tuple(mono))
            return
        if idx == len(variables):
            return
        rec(idx + 1, d_left, left)
        wv = vw[idx]
        cur = list(left)
        used = 0
        for _ in range(d_left):
            ok = True
            for t, u in enumerate(wv):
                if u:
                    cur[t] -= u
                    if cur[t] < 0:
                        ok = False
            if not ok:
                break
            used += 1
            mono.append(variables[idx])
            rec(idx + 1, d_left - used, tuple(cur))
        for _ in range(used):
            mono.pop()

    rec(0, d, target)
    return out


def subweights(system, w, d):
    """Weights of degree-``d`` monomials bounded above coordinatewise by ``w``.

    Over-generates slightly (not every vector of the right total is hit by
    a monomial in every flavor); callers pair this with an exact monomial
    enumeration, so spurious weights just contribute empty slices.
    """
    if system.flavor == "generic":
        rows = _bounded_vectors(w[0], d)
        cols = _bounded_vectors(w[1], d)
        return [(r, c) for r in rows for c in cols]
    unit = 2 if system.flavor in MATCHING_FLAVORS else 1
    return _bounded_vectors(w, unit * d)


def _bounded_vectors(bound, total):
    out = []
    vec = []

    def rec(idx, left):
        if idx == len(bound):
            if left == 0:
                out.append(tuple(vec))
            return
        hi = min(bound[idx], left)
        tail = sum(bound[idx + 1:])
        for k in range(max(0, left - tail), hi + 1):
            vec.append(k)
            rec(idx + 1, left - k)
            vec.pop()

    rec(0, total)
    return out


def weight_subtract(system, w, mw):
    if system.flavor == "generic":
        r = tuple(a - b for a, b in zip(w[0], mw[0]))
        c = tuple(a - b for a, b in zip(w[1], mw[1]))
        if min(r, default=0) < 0 or min(c, default=0) < 0:
            return None
        return (r, c)
    out = tuple(a - b for a, b in zip(w, mw))
    if min(out, default=0) < 0:
        return None
    return out


# ---------------------------------------------------------------------------
# Closed-form highest weight vectors.


def corner_minor(system, k):
    """Determinant of the leading k-by-k block, as a polynomial."""
    if k == 0:
        return {(): Fraction(1)}
    out = {}
    from itertools import permutations

    for perm in permutations(range(1, k + 1)):
        sign = 1
        seen = list(perm)
        for i in range(len(seen)):
            for j in range(i + 1, len(seen)):
                if seen[i] > seen[j]:
                    sign = -sign
        pairs = [(i + 1, perm[i]) for i in range(k)]
        poly_add(out, term(system, sign, pairs))
    return out


def corner_pfaffian(system, k):
    """Pfaffian of the leading k-by-k block of the antisymmetric system."""
    if k % 2:
        raise ValueError("pfaffian needs an even block size")
    if system.flavor != "antisymmetric":
        raise ValueError("pfaffian is defined for the antisymmetric system")

    def pf(labels):
        if not labels:
            return {(): Fraction(1)}
        a = labels[0]
        out = {}
        for t, b in enumerate(labels[1:], start=1):
            rest = labels[1:t] + labels[t + 1:]
            sub = pf(rest)
            sign = 1 if t % 2 else -1
            for m, c in sub.items():
                poly_add(out, term(system, sign * c, [(a, b)] + list(m)))
        return out

    return pf(tuple(range(1, k + 1)))


def highest_weight_vector(system, lam):
    """Canonical generator of the isotypic block labelled by ``lam``.

    Products of leading principal minors (symmetric and generic systems,
    one factor per column of ``lam``) or of leading Pfaffians (one factor
    of size ``2*part`` per row of ``lam``).  Raises on labels that need
    more rows than the rank affords.
    """
    if system.flavor == "degree_one":
        raise ValueError("degree_one system has no partition labels")
    n = system.rank
    out = {(): Fraction(1)}
    if system.flavor == "antisymmetric":
        if lam and 2 * lam[0] > n:
            raise ValueError(f"label {lam} needs rank >= {2 * lam[0]}")
        for part in lam:
            factor = corner_pfaffian(system, 2 * part)
            new = {}
            for m, c in out.items():
                for m2, c2 in factor.items():
                    poly_add(new, {tuple(sorted(m + m2)): c * c2})
            out = new
        return out
    if len(lam) > n:
        raise ValueError(f"label {lam} needs rank >= {len(lam)}")
    heights = []
    if lam:
        for j in range(lam[0]):
            heights.append(sum(1 for part in lam if part > j))
    for k in heights:
        factor = corner_minor(system, k)
        new = {}
        for m, c in out.items():
            for m2, c2 in factor.items():
                poly_add(new, {tuple(sorted(m + m2)): c * c2})
        out = new
    return out


def hw_weight(system, lam):
    """Weight of the isotypic block's highest vector."""
    hwv = highest_weight_vector(system, lam)
    mono = next(iter(hwv))
    return system.weight(mono)


# ---------------------------------------------------------------------------
# Lowering-operator spanning sets (used by lazily generated ideals).


def _root_multisets(delta):
    """All multisets of moves a->b (a<b) whose total transfer is ``delta``.

    ``delta[a]`` units must leave slot a toward strictly larger slots; a
    multiset is encoded as a sorted tuple of (a, b) pairs, 0-indexed.
    """
    n = len(delta)
    out = []
    acc = []

    def rec(a, rem):
        if a == n - 1:
            if rem[a] == 0:
                out.append(tuple(acc))
            return
        need = rem[a]
        if need < 0:
            return

        def give(b, left, rem2):
            if b == n:
                if left == 0:
                    rec(a + 1, rem2)
                return
            for k in range(left + 1):
                if k:
                    acc.extend([(a, b)] * k)
                nxt = list(rem2)
                nxt[b] += k
                give(b + 1, left - k, nxt)
                for _ in range(k):
                    acc.pop()

        give(a + 1, need, list(rem))

    rec(0, list(delta))
    return out


def lowerings_from(system, hwv, w_high, w_target):
    """Spanning vectors of the weight-``w_target`` slice of the cyclic
    subrepresentation generated by ``hwv`` of weight ``w_high``."""
    if system.flavor == "generic":
        dr = tuple(a - b for a, b in zip(w_high[0], w_target[0]))
        dc = tuple(a - b for a, b in zip(w_high[1], w_target[1]))
        if sum(dr) != 0 or sum(dc) != 0:
            return []
        vectors = []
        for rows in _root_multisets(dr):
            v1 = hwv
            for a, b in rows:
                v1 = lie_act(system, b + 1, a + 1, v1, side="row")
                if not v1:
                    break
            if not v1:
                continue
            for cols in _root_multisets(dc):
                v2 = v1
                for a, b in cols:
                    v2 = lie_act(system, b + 1, a + 1, v2, side="col")
                    if not v2:
                        break
                if v2:
                    vectors.append(v2)
        return vectors
    delta = tuple(a - b for a, b in zip(w_high, w_target))
    if sum(delta) != 0:
        return []
    vectors = []
    for moves in _root_multisets(delta):
        v = hwv
        for a, b in moves:
            v = lie_act(system, b + 1, a + 1, v)
            if not v:
                break
        if v:
            vectors.append(v)
    return vectors


# ---------------------------------------------------------------------------
# Squarefree slices of single isotypic blocks, via the transposition class
# sum.  On the span of squarefree monomials with a fixed even support, the
# sum T of all label transpositions acts with one eigenvalue per isotypic
# block (the content sum of the block's doubled label), so the slice of one
# block is an exact eigenspace ker(T - c).  This replaces chains of lowering
# operators, which blow up combinatorially on low weights like (1,...,1).


def _content_sum(shape):
    return sum(j - i for i, row in enumerate(shape) for j in range(row))


def _perfect_matchings(size):
    """All perfect matchings of {1..size} as sorted (min,max)-pair tuples."""

    def build(avail):
        if not avail:
            yield ()
            return
        a = avail[0]
        for pos in range(1, len(avail)):
            b = avail[pos]
            rest = avail[1:pos] + avail[pos + 1:]
            for sub in build(rest):
                yield ((a, b),) + sub

    return sorted(tuple(sorted(g)) for g in build(tuple(range(1, size + 1))))


@lru_cache(maxsize=None)
def _block_slice_cached(flavor, lam):
    """Squarefree slice of the isotypic block ``lam`` on support {1..2|lam|},
    as monomial-keyed vectors, or None when the eigenvalue is ambiguous."""
    m = sum(lam)
    doubled = {tuple(mu): _content_sum(tuple(2 * p for p in mu))
               for mu in partitions_of(m)}
    c = doubled[tuple(lam)]
    if sum(1 for v in doubled.values() if v == c) > 1:
        return None
    if flavor == "antisymmetric":
        c = -c
    size = 2 * m
    pms = _perfect_matchings(size)
    index = {g: i for i, g in enumerate(pms)}
    n = len(pms)
    mat = [[0] * n for _ in range(n)]
    for a in range(1, size + 1):
        for b in range(a + 1, size + 1):
            for col, g in enumerate(pms):
                sign = 1
                edges = []
                for i, j in g:
                    ii = b if i == a else (a if i == b else i)
                    jj = b if j == a else (a if j == b else j)
                    if ii > jj:
                        ii, jj = jj, ii
                        if flavor == "antisymmetric":
                            sign = -sign
                    edges.append((ii, jj))
                mat[index[tuple(sorted(edges))]][col] += sign
    for i in range(n):
        mat[i][i] -= c
    mat = [[Fraction(v) for v in row] for row in mat]
    return tuple(
        {pms[i]: x for i, x in enumerate(vec) if x}
        for vec in _nullspace(mat, n)
    )


def _relabel_support(vectors, support):
    """Push vectors on {1..2m} onto an arbitrary sorted support (monotone
    relabelling, so canonical edge forms are preserved sign-free)."""
    labels = sorted(support)
    out = []
    for v in vectors:
        out.append({
            tuple(sorted((labels[i - 1], labels[j - 1]) for i, j in mono)): c
            for mono, c in v.items()
        })
    return out


# ---------------------------------------------------------------------------
# Equivariant ideals.


class EquivariantIdeal:
    """Ideal generated by polynomials plus their derivation-action orbit.

    Two construction paths share this class: ``from_generators``
    materializes the stable span of the given generators once, while
    ``isotypic`` keeps a single highest weight vector and produces any
    required weight slice of its subrepresentation on demand.
    """

    def __init__(self, system, label=""):
        self.system = system
        self.label = label
        self._gen_slices = None      # degree -> weight -> list of vectors
        self._hw = None              # (hwv, degree, weight) when lazy
        self._lam = None             # isotypic label when lazy
        self._lazy_cache = {}
        self._component_cache = {}
        self.max_degree = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, system, gens, label=""):
        ideal = cls(system, label)
        slices = {}
        for row in rep_closure(system, gens):
            mono = next(iter(row))
            d = len(mono)
            slices.setdefault(d, {}).setdefault(system.weight(mono), []).append(row)
        ideal._gen_slices = slices
        return ideal

    @classmethod
    def isotypic(cls, system, lam, label=""):
        lam = tuple(lam)
        ideal = cls(system, label or f"I[{lam}]")
        hwv = highest_weight_vector(system, lam)
        mono = next(iter(hwv))
        ideal._hw = (hwv, len(mono), system.weight(mono))
        ideal._lam = lam
        return ideal

    # -- generator slices ---------------------------------------------------

    def gen_degrees(self):
        if self._hw is not None:
            return [self._hw[1]]
        return sorted(self._gen_slices)

    def gen_weight_slice(self, d, w):
        """Basis of the degree-d, weight-w piece of the generating subspace."""
        if self._hw is not None:
            hwv, hd, hwt = self._hw
            if d != hd:
                return []
            key = (d, w)
            if key not in self._lazy_cache:
                vectors = self._squarefree_gen_slice(d, w)
                if vectors is None:
                    span = Span()
                    for vec in lowerings_from(self.system, hwv, hwt, w):
                        span.add(vec)
                    vectors = span.vectors()
                self._lazy_cache[key] = vectors
            return self._lazy_cache[key]
        return self._gen_slices.get(d, {}).get(w, [])

    def _squarefree_gen_slice(self, d, w):
        """Fast path for 0/1 weights of lazy isotypic ideals; None = no path."""
        if self._lam is None or self.system.flavor not in MATCHING_FLAVORS:
            return None
        if any(x not in (0, 1) for x in w):
            return None
        support = tuple(i + 1 for i, x in enumerate(w) if x)
        if len(support) != 2 * d:
            return []
        block = _block_slice_cached(self.system.flavor, self._lam)
        if block is None:
            return None
        span = Span()
        for vec in _relabel_support(block, support):
            span.add(vec)
        return span.vectors()

    # -- graded pieces ------------------------------------------------------

    def component_span(self, d, w):
        """Echelonized degree-d, weight-w slice of the ideal."""
        if self.max_degree is not None and d > self.max_degree:
            raise DegreeOverflowError(
                f"degree {d} beyond configured bound {self.max_degree}")
        key = (d, w)
        if key in self._component_cache:
            return self._component_cache[key]
        span = Span()
        for e in self.gen_degrees():
            rem = d - e
            if rem < 0:
                continue
            if rem == 0:
                for g in self.gen_weight_slice(e, w):
                    span.add(g)
                continue
            for mw in subweights(self.system, w, rem):
                gw = weight_subtract(self.system, w, mw)
                if gw is None:
                    continue
                gens = self.gen_weight_slice(e, gw)
                if not gens:
                    continue
                for mono in monomials_of_weight(self.system, rem, mw):
                    for g in gens:
                        span.add(mono_mul_poly(mono, g))
        self._component_cache[key] = span
        return span

    def component(self, d):
        """Full degree-d slice, one weight at a time."""
        groups = {}
        for mono in monomials_of_degree(self.system, d):
            groups.setdefault(self.system.weight(mono), None)
        out = []
        for w in groups:
            out.extend(self.component_span(d, w).vectors())
        return out

    def contains(self, p):
        """Exact membership test for a polynomial."""
        for (w, piece) in weight_split(self.system, p).items():
            d = len(next(iter(piece)))
            if not self.component_span(d, w).contains(piece):
                return False
        return True


def ideal_contains_isotypic(ideal, mu, d_bound=None):
    """Whether the whole isotypic block labelled ``mu`` sits in the ideal.

    Graded pieces of the ideal are stable under the derivation action, so
    they contain the block iff they contain its highest vector: adding the
    vector to the slice leaves the weight-space dimension unchanged exactly
    when the block is inside.
    """
    system = ideal.system
    try:
        hwv = highest_weight_vector(system, tuple(mu))
    except ValueError:
        return True  # the block vanishes at this rank
    mono = next(iter(hwv))
    d = len(mono)
    if d_bound is not None and d > d_bound:
        raise DegreeOverflowError(
            f"block {tuple(mu)} lives in degree {d}, beyond bound {d_bound}")
    return ideal.component_span(d, system.weight(mono)).contains(hwv)


# ---------------------------------------------------------------------------
# Admissible slices, initial matchings, initial sets.


def indicator_weight(n, support):
    w = [0] * n
    for s in support:
        w[s - 1] = 1
    return tuple(w)


def monomial_to_matching(mono):
    return matching(mono)


def matching_to_monomial(g):
    return tuple(sorted(g))


def vector_to_matching_coords(vec):
    return {matching(m): c for m, c in vec.items()}


def initial_matching(coords):
    """Largest matching carrying a nonzero coefficient."""
    support = [g for g, c in coords.items() if c]
    if not support:
        raise ZeroVectorError("zero vector has no initial matching")
    return max(support, key=matching_key)


def admissible_component(system, vectors, support):
    """Weight slice of the span of ``vectors`` at the 0/1 indicator weight of
    ``support``, in matching coordinates.  Empty for odd supports.

    The span must be stable under the diagonal (torus) action — true of any
    graded ideal piece — so its indicator-weight subspace is spanned by the
    indicator-weight parts of the given vectors."""
    support = tuple(sorted(set(support)))
    if len(support) % 2:
        return []
    if system.flavor not in MATCHING_FLAVORS:
        raise ValueError("admissible slices need a symmetric or antisymmetric system")
    w = indicator_weight(system.rank, support)
    span = Span()
    for v in vectors:
        piece = weight_split(system, v).get(w)
        if piece:
            span.add(piece)
    return [vector_to_matching_coords(v) for v in span.vectors()]


def ideal_admissible_component(ideal, support):
    """Squarefree slice of an equivariant ideal, computed weight-first so
    only the one needed weight space is ever assembled."""
    support = tuple(sorted(set(support)))
    if len(support) % 2:
        return []
    if ideal.system.flavor not in MATCHING_FLAVORS:
        raise ValueError("admissible slices need a symmetric or antisymmetric system")
    d = len(support) // 2
    w = indicator_weight(ideal.system.rank, support)
    span = ideal.component_span(d, w)
    return [vector_to_matching_coords(v) for v in span.vectors()]


def _pivot_matchings(vectors):
    span = Span(key=matching_key)
    for v in vectors:
        span.add(v)
    return set(span.pivots())


def initial_set(ideal, degree_bound, support_bound):
    """All initial matchings of admissible vectors within the bounds.

    One echelon pass per support: the pivot set of a weight slice is
    exactly the set of leading matchings of its nonzero vectors.
    """
    out = set()
    for size in range(2, min(2 * degree_bound, support_bound) + 1, 2):
        for support in combinations(range(1, support_bound + 1), size):
            vectors = ideal_admissible_component(ideal, support)
            if vectors:
                out |= _pivot_matchings(vectors)
    return tuple(sorted(out, key=matching_key))


@dataclass
class MoveClosureReport:
    label: str
    degree_bound: int
    support_bound: int
    initial_size: int
    moves_checked: int
    violations: list
    flavor: str = ""

    @property
    def closed(self):
        return not self.violations


def verify_move_closure(ideal, degree_bound, support_bound):
    """Check that the initial set is stable under every growth and swap
    move that stays within the bounds; violations are returned, not raised."""
    inset = set(initial_set(ideal, degree_bound, support_bound))
    moves_checked = 0
    violations = []
    for g in sorted(inset, key=matching_key):
        candidates = []
        for mv, img in type1_moves(g, support_bound):
            if len(img) <= degree_bound:
                candidates.append((mv, img))
        candidates.extend(type2_moves(g))
        for mv, img in candidates:
            moves_checked += 1
            if img not in inset:
                violations.append((g, mv, img))
    return MoveClosureReport(
        label=ideal.label,
        degree_bound=degree_bound,
        support_bound=support_bound,
        initial_size=len(inset),
        moves_checked=moves_checked,
        violations=violations,
        flavor=ideal.system.flavor,
    )


# ---------------------------------------------------------------------------
# The degree-one sandbox: same pipeline on colored sets.


def colored_coords(vec):
    out = {}
    for m, c in vec.items():
        elems = tuple((i, "R" if col == 0 else "B") for col, i in m)
        out[colored_set(elems)] = c
    return out


def degree_one_component(ideal, support):
    support = tuple(sorted(set(support)))
    if ideal.system.flavor != "degree_one":
        raise ValueError("expected a degree_one system")
    d = len(support)
    if d == 0:
        return []
    w = indicator_weight(ideal.system.rank, support)
    span = ideal.component_span(d, w)
    return [colored_coords(v) for v in span.vectors()]


def degree_one_initial_set(ideal, degree_bound, support_bound):
    out = set()
    for size in range(1, min(degree_bound, support_bound) + 1):
        for support in combinations(range(1, support_bound + 1), size):
            vectors = degree_one_component(ideal, support)
            if not vectors:
                continue
            span = Span(key=colored_key)
            for v in vectors:
                span.add(v)
            out |= set(span.pivots())
    return tuple(sorted(out, key=colored_key))


def degree_one_verify_move_closure(ideal, degree_bound, support_bound):
    inset = set(degree_one_initial_set(ideal, degree_bound, support_bound))
    moves_checked = 0
    violations = []
    for s in sorted(inset, key=colored_key):
        for mv, img in degree_one_moves(s, support_bound):
            if len(img) > degree_bound:
                continue
            moves_checked += 1
            if img not in inset:
                violations.append((s, mv, img))
    return MoveClosureReport(
        label=ideal.label,
        degree_bound=degree_bound,
        support_bound=support_bound,
        initial_size=len(inset),
        moves_checked=moves_checked,
        violations=violations,
        flavor="degree_one",
    )


# ---------------------------------------------------------------------------
# Small exact kernel solver, used to cross-check highest weight vectors.


def raising_kernel(system, d, w):
    """Basis of the degree-d weight-w vectors killed by every raising
    operator act(a, a+1) (both sides for the generic system)."""
    monos = monomials_of_weight(system, d, w)
    if not monos:
        return []
    ops = []
    for side in system.sides():
        for a in range(1, system.rank):
            ops.append((a, a + 1, side))
    rows = []   # one row per (op, target monomial): constraint on coefficients
    images = []
    for m in monos:
        per_op = []
        for a, b, side in ops:
            per_op.append(lie_act(system, a, b, {m: Fraction(1)}, side))
        images.append(per_op)
    targets = {}
    for per_op in images:
        for k, img in enumerate(per_op):
            for t in img:
                targets.setdefault((k, t), len(targets))
    mat = [[Fraction(0)] * len(monos) for _ in range(len(targets))]
    for j, per_op in enumerate(images):
        for k, img in enumerate(per_op):
            for t, c in img.items():
                mat[targets[(k, t)]][j] += c
    basis = _nullspace(mat, len(monos))
    return [
        {m: c for m, c in zip(monos, vec) if c}
        for vec in basis
    ]


def _nullspace(mat, ncols):
    rows = [row[:] for row in mat]
    pivot_of_col = {}
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_of_col[c] = r
        r += 1
    free = [c for c in range(ncols) if c not in pivot_of_col]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for c, pr in pivot_of_col.items():
            vec[c] = -rows[pr][fc]
        basis.append(vec)
    return basis
