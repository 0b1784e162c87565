"""Explicit rank tables on small grounds, a construction algebra, and brute oracles.

A RankTable stores the full rank function of a matroid, indexed by bitmask
over a fixed ground order.  Everything downstream (circuits, flats,
connectivity, isomorphism, minors) is computed from it by exhaustive scan;
these serve as reference oracles for the closed-form path operations.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import (DomainError, InvalidPavingError, InvalidRelaxationError,
                     ResourceError)

DEFAULT_CAP = 16


@dataclass(frozen=True)
class RankTable:
    ground: tuple
    ranks: tuple  # ranks[mask] for every subset bitmask

    def __post_init__(self):
        n = len(self.ground)
        if len(set(self.ground)) != n:
            raise DomainError("ground has repeated labels")
        if n > 24:
            raise ResourceError(f"{n} elements is past the hard table limit")
        if len(self.ranks) != 1 << n:
            raise DomainError("rank list length must be 2**|ground|")

    @property
    def size(self):
        return len(self.ground)

    @property
    def rank_total(self):
        return self.ranks[-1]

    @property
    def corank(self):
        return self.size - self.rank_total

    def mask_of(self, X):
        idx = {e: i for i, e in enumerate(self.ground)}
        m = 0
        for e in X:
            if e not in idx:
                raise DomainError(f"{e!r} not in ground")
            m |= 1 << idx[e]
        return m

    def set_of(self, mask):
        return frozenset(e for i, e in enumerate(self.ground) if mask >> i & 1)

    def rank(self, X):
        return self.ranks[self.mask_of(X)]

    def validate(self):
        """Check the rank axioms exhaustively (test helper; O(2^n * n^2))."""
        r = self.ranks
        n = self.size
        assert r[0] == 0
        for m in range(1 << n):
            for i in range(n):
                if m >> i & 1:
                    continue
                step = r[m | 1 << i] - r[m]
                assert step in (0, 1)
                for j in range(i + 1, n):
                    if m >> j & 1:
                        continue
                    assert (r[m | 1 << i] + r[m | 1 << j]
                            >= r[m | 1 << i | 1 << j] + r[m])
        return True


# construction expressions

class Uniform:
    def __init__(self, rank, size):
        self.rank, self.size = rank, size


class DirectSum:
    def __init__(self, *parts):
        if len(parts) < 2:
            raise DomainError("direct sum needs at least two parts")
        self.parts = parts


class Truncate:
    def __init__(self, expr, rank):
        self.expr, self.rank = expr, rank


class FreeExt:
    def __init__(self, expr):
        self.expr = expr


class ParallelExt:
    def __init__(self, expr, of):
        self.expr, self.of = expr, of


class Dual:
    def __init__(self, expr):
        self.expr = expr


class Relax:
    def __init__(self, expr, hyperplane):
        self.expr, self.hyperplane = expr, frozenset(hyperplane)


class Paving:
    def __init__(self, rank, ground, hyperplanes):
        self.rank = rank
        self.ground = tuple(ground)
        self.hyperplanes = tuple(frozenset(h) for h in hyperplanes)


def _relabel(table):
    return RankTable(tuple(range(1, table.size + 1)), table.ranks)


def _pair_sum(a, b):
    na = a.size
    low = (1 << na) - 1
    ranks = tuple(a.ranks[m & low] + b.ranks[m >> na]
                  for m in range(1 << (na + b.size)))
    return RankTable(tuple(range(1, na + b.size + 1)), ranks)


def dual_table(table):
    full = (1 << table.size) - 1
    r = table.rank_total
    ranks = tuple(m.bit_count() + table.ranks[full ^ m] - r
                  for m in range(full + 1))
    return RankTable(table.ground, ranks)


def relax_table(table, hyperplane):
    """Turn a circuit-hyperplane into a basis; validates the target."""
    h = table.mask_of(hyperplane)
    r = table.rank_total
    if h.bit_count() != r or table.ranks[h] != r - 1:
        raise InvalidRelaxationError("target is not a rank-(r-1) set of size r")
    for i in range(table.size):
        if h >> i & 1:
            if table.ranks[h ^ (1 << i)] != r - 1:
                raise InvalidRelaxationError("target is not a circuit")
        elif table.ranks[h | 1 << i] != r:
            raise InvalidRelaxationError("target is not closed")
    ranks = list(table.ranks)
    ranks[h] = r
    return RankTable(table.ground, tuple(ranks))


def paving_table(rank, ground, hyperplanes):
    ground = tuple(ground)
    n = len(ground)
    if not 1 <= rank <= n:
        raise InvalidPavingError("rank out of range")
    probe = RankTable(ground, (0,) * (1 << n))  # label bookkeeping only
    masks = []
    for h in hyperplanes:
        m = probe.mask_of(h)
        if not rank <= m.bit_count() <= n - 1:
            raise InvalidPavingError("hyperplane size must be in [rank, n-1]")
        masks.append(m)
    for a, b in combinations(masks, 2):
        if (a & b).bit_count() > rank - 2:
            raise InvalidPavingError("two hyperplanes share a (rank-1)-subset")
    ranks = []
    for m in range(1 << n):
        if any(m & ~h == 0 for h in masks):
            ranks.append(min(m.bit_count(), rank - 1))
        else:
            ranks.append(min(m.bit_count(), rank))
    return RankTable(ground, tuple(ranks))


def construct(expr, cap=DEFAULT_CAP):
    """Evaluate a construction expression to a RankTable.

    Sums relabel the ground to 1..n (left part in the low positions); the
    other constructors keep their argument's labels.
    """
    if isinstance(expr, Uniform):
        r, n = expr.rank, expr.size
        if not 0 <= r <= n:
            raise DomainError("uniform rank out of range")
        if n > cap:
            raise ResourceError(f"{n} elements exceeds cap {cap}")
        ranks = tuple(min(m.bit_count(), r) for m in range(1 << n))
        return RankTable(tuple(range(1, n + 1)), ranks)
    if isinstance(expr, DirectSum):
        tables = [_relabel(construct(p, cap)) for p in expr.parts]
        if sum(t.size for t in tables) > cap:
            raise ResourceError("sum exceeds cap")
        acc = tables[0]
        for t in tables[1:]:
            acc = _pair_sum(acc, t)
        return acc
    if isinstance(expr, Truncate):
        t = construct(expr.expr, cap)
        if not 0 <= expr.rank <= t.rank_total:
            raise DomainError("truncation rank out of range")
        return RankTable(t.ground, tuple(min(r, expr.rank) for r in t.ranks))
    if isinstance(expr, FreeExt):
        t = construct(expr.expr, cap)
        if t.size + 1 > cap:
            raise ResourceError("extension exceeds cap")
        label = _fresh_label(t.ground)
        r = t.rank_total
        ranks = list(t.ranks) + [min(t.ranks[m] + 1, r) for m in range(1 << t.size)]
        return RankTable(t.ground + (label,), tuple(ranks))
    if isinstance(expr, ParallelExt):
        t = construct(expr.expr, cap)
        if t.size + 1 > cap:
            raise ResourceError("extension exceeds cap")
        x = t.mask_of([expr.of])
        label = _fresh_label(t.ground)
        ranks = list(t.ranks) + [t.ranks[m | x] for m in range(1 << t.size)]
        return RankTable(t.ground + (label,), tuple(ranks))
    if isinstance(expr, Dual):
        return dual_table(construct(expr.expr, cap))
    if isinstance(expr, Relax):
        return relax_table(construct(expr.expr, cap), expr.hyperplane)
    if isinstance(expr, Paving):
        if len(expr.ground) > cap:
            raise ResourceError("paving exceeds cap")
        return paving_table(expr.rank, expr.ground, expr.hyperplanes)
    raise DomainError(f"not a construction expression: {expr!r}")


def _fresh_label(ground):
    if all(isinstance(e, int) for e in ground):
        return max(ground, default=0) + 1
    i = 1
    while f"y{i}" in ground:
        i += 1
    return f"y{i}"


def minor(table, deleted, contracted):
    """Delete and contract label sets; kept elements stay in ground order."""
    dmask = table.mask_of(deleted)
    cmask = table.mask_of(contracted)
    if dmask & cmask:
        raise DomainError("deleted and contracted sets overlap")
    keep = [i for i in range(table.size) if not (dmask | cmask) >> i & 1]
    base = table.ranks[cmask]
    ranks = []
    for m in range(1 << len(keep)):
        lifted = cmask
        for bit, i in enumerate(keep):
            if m >> bit & 1:
                lifted |= 1 << i
        ranks.append(table.ranks[lifted] - base)
    return RankTable(tuple(table.ground[i] for i in keep), tuple(ranks))


# brute-force oracles

def _sort_key(table):
    pos = {e: i for i, e in enumerate(table.ground)}
    return lambda s: tuple(sorted(pos[e] for e in s))


def brute_circuits(table):
    """All circuits: dependent sets whose proper subsets are independent."""
    r = table.ranks
    out = []
    for m in range(1, 1 << table.size):
        k = m.bit_count()
        if r[m] >= k:
            continue
        if all(r[m ^ (1 << i)] == k - 1 for i in range(table.size) if m >> i & 1):
            out.append(table.set_of(m))
    key = _sort_key(table)
    return sorted(out, key=lambda c: (len(c), key(c)))


def _is_flat(table, m):
    r = table.ranks
    return all(r[m | 1 << i] > r[m]
               for i in range(table.size) if not m >> i & 1)


def _is_connected_mask(table, m):
    """No bipartition of the restriction into rank-additive halves."""
    if m.bit_count() <= 1:
        return True
    r = table.ranks
    low = m & -m
    sub = (m - 1) & m
    while sub:
        if sub & low and sub != m and r[sub] + r[m ^ sub] == r[m]:
            return False
        sub = (sub - 1) & m
    return True


def brute_connected_flats(table):
    """Nontrivial (dependent) connected flats, with ranks."""
    out = []
    for m in range(1, 1 << table.size):
        if table.ranks[m] >= m.bit_count():
            continue
        if _is_flat(table, m) and _is_connected_mask(table, m):
            out.append((table.set_of(m), table.ranks[m]))
    key = _sort_key(table)
    return sorted(out, key=lambda fr: (len(fr[0]), key(fr[0])))


def brute_fundamental_flats(table):
    """Proper nontrivial connected flats met by some spanning circuit in a basis of the flat."""
    full = (1 << table.size) - 1
    if not _is_connected_mask(table, full):
        raise DomainError("table is not connected")
    r = table.rank_total
    spanning = [table.mask_of(c) for c in brute_circuits(table) if len(c) == r + 1]
    out = []
    for flat, frank in brute_connected_flats(table):
        fmask = table.mask_of(flat)
        if fmask == full:
            continue
        for c in spanning:
            meet = fmask & c
            if meet.bit_count() == frank and table.ranks[meet] == frank:
                out.append((flat, frank))
                break
    return out


def brute_connectivity(table):
    """Smallest k admitting a k-separation; math.inf when none exists."""
    n = table.size
    r = table.ranks
    total = r[-1]
    best = math.inf
    full = (1 << n) - 1
    for m in range(1, full):
        if not m & 1:
            continue  # fix lowest element on one side
        lam = r[m] + r[full ^ m] - total + 1
        if lam <= min(m.bit_count(), n - m.bit_count()):
            best = min(best, lam)
    return best


def _flat_counts(table):
    counts = {}
    for m in range(1 << table.size):
        if _is_flat(table, m):
            counts[table.ranks[m]] = counts.get(table.ranks[m], 0) + 1
    return tuple(sorted(counts.items()))


def _iso_invariants(table):
    sizes = tuple(sorted(len(c) for c in brute_circuits(table)))
    return (table.size, table.rank_total, sizes, _flat_counts(table))


def _element_profiles(table):
    circ = [table.mask_of(c) for c in brute_circuits(table)]
    prof = []
    for i in range(table.size):
        through = tuple(sorted(c.bit_count() for c in circ if c >> i & 1))
        prof.append((table.ranks[1 << i], through))
    return prof


def is_isomorphic(a, b):
    """A rank-preserving ground bijection as a label dict, or None."""
    if _iso_invariants(a) != _iso_invariants(b):
        return None
    n = a.size
    pa, pb = _element_profiles(a), _element_profiles(b)
    cands = [[q for q in range(n) if pb[q] == pa[p]] for p in range(n)]
    if any(not c for c in cands):
        return None
    image = [None] * n
    used = [False] * n

    def consistent(depth):
        m = (1 << (depth + 1)) - 1
        bit = 1 << depth
        sub = m
        while sub:
            if sub & bit:
                mapped = 0
                for i in range(depth + 1):
                    if sub >> i & 1:
                        mapped |= 1 << image[i]
                if a.ranks[sub] != b.ranks[mapped]:
                    return False
            sub = (sub - 1) & m
        return True

    def bt(depth):
        if depth == n:
            return True
        for q in cands[depth]:
            if used[q]:
                continue
            image[depth] = q
            used[q] = True
            if consistent(depth) and bt(depth + 1):
                return True
            used[q] = False
        image[depth] = None
        return False

    if not bt(0):
        return None
    return {a.ground[p]: b.ground[image[p]] for p in range(n)}


def has_minor(host, pattern):
    """Whether some delete/contract of host is isomorphic to pattern.

    Contractions range over independent sets only, which loses no minors.
    """
    nh, np_ = host.size, pattern.size
    rh, rp = host.rank_total, pattern.rank_total
    c, d = rh - rp, (nh - np_) - (rh - rp)
    if np_ > nh or c < 0 or d < 0:
        return False
    pinv = _iso_invariants(pattern)
    full = (1 << nh) - 1
    for cset in combinations(range(nh), c):
        cmask = 0
        for i in cset:
            cmask |= 1 << i
        if host.ranks[cmask] != c:
            continue
        rest = [i for i in range(nh) if not cmask >> i & 1]
        for dset in combinations(rest, d):
            dmask = 0
            for i in dset:
                dmask |= 1 << i
            if host.ranks[full ^ dmask] - c != rp:
                continue
            m = minor(host, host.set_of(dmask), host.set_of(cmask))
            if _iso_invariants(m) == pinv and is_isomorphic(m, pattern):
                return True
    return False
