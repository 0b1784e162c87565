"""Finite set systems and the transversal matroids they present.

A system is an ordered list of subsets of a ground sequence.  The rank of X is
the size of a maximum matching between the elements of X and the sets that
contain them; all structure here (loops, isthmuses, components, the Bondy
maximal presentation) is computed through such matchings.
"""

from dataclasses import dataclass

from .errors import DomainError, MalformedPresentationError


@dataclass(frozen=True)
class SetSystem:
    ground: tuple
    sets: tuple  # tuple of frozensets

    def __post_init__(self):
        if len(set(self.ground)) != len(self.ground):
            raise DomainError("ground has repeated labels")
        g = set(self.ground)
        for i, s in enumerate(self.sets):
            if not s <= g:
                bad = sorted(s - g, key=repr)[0]
                raise DomainError(f"set {i} contains {bad!r} not in ground")

    @property
    def size(self):
        return len(self.ground)


def make_system(ground, sets):
    return SetSystem(tuple(ground), tuple(frozenset(s) for s in sets))


def _max_matching(system, elements):
    """Maximum matching of `elements` into the sets containing them.

    Returns (match_set, match_elt): set index -> element and element -> set
    index.  Deterministic: elements in the given order, sets in index order.
    """
    sets = system.sets
    adj = {}
    for e in elements:
        adj[e] = [j for j, s in enumerate(sets) if e in s]
    match_set = {}
    match_elt = {}

    def augment(e, seen):
        for j in adj[e]:
            if j in seen:
                continue
            seen.add(j)
            if j not in match_set or augment(match_set[j], seen):
                match_set[j] = e
                match_elt[e] = j
                return True
        return False

    for e in elements:
        augment(e, set())
    return match_set, match_elt


def matching_rank(system, X=None):
    """Rank of X: size of a maximum matching of X into the sets."""
    if X is None:
        elements = list(system.ground)
    else:
        g = set(system.ground)
        X = set(X)
        if not X <= g:
            raise DomainError("rank query outside the ground set")
        elements = [e for e in system.ground if e in X]
    match_set, _ = _max_matching(system, elements)
    return len(match_set)


def _rematch_avoiding(system, match_set, match_elt, j, banned):
    """Try to re-saturate set j without using element `banned`.

    Mutates the two matching dicts on success.  Success means the matching
    size is preserved after dropping `banned`, i.e. `banned` is not an
    isthmus-style forced element for this matching.
    """
    sets = system.sets
    order = {e: i for i, e in enumerate(system.ground)}

    def search(jj, used):
        members = sorted((e for e in sets[jj] if e != banned), key=order.__getitem__)
        for e in members:
            if e not in match_elt:
                match_set[jj] = e
                match_elt[e] = jj
                return True
        for e in members:
            j2 = match_elt[e]
            if j2 == jj or j2 in used:
                continue
            used.add(j2)
            if search(j2, used):
                match_set[jj] = e
                match_elt[e] = jj
                return True
        return False

    return search(j, {j})


def special_elements(system):
    """(loops, isthmuses) of the presented matroid.

    A loop lies in no set.  An isthmus is an element whose removal drops the
    rank; detected by one maximum matching plus one augmenting search per
    matched element.
    """
    loops = [e for e in system.ground if not any(e in s for s in system.sets)]
    match_set, match_elt = _max_matching(system, list(system.ground))
    isthmuses = []
    for x in system.ground:
        j = match_elt.get(x)
        if j is None:
            continue
        ms, me = dict(match_set), dict(match_elt)
        del ms[j]
        del me[x]
        if not _rematch_avoiding(system, ms, me, j, x):
            isthmuses.append(x)
    return tuple(loops), tuple(isthmuses)


def maximal_presentation(system):
    """Largest presentation of the same matroid.

    First reduce to the rank-many sets saturated by one maximum matching,
    then grow each set A by the isthmuses of the matroid with A's elements
    deleted.  Idempotent; the output has exactly rank-many sets.
    """
    match_set, _ = _max_matching(system, list(system.ground))
    reduced = [system.sets[j] for j in sorted(match_set)]
    if len(reduced) != matching_rank(system):
        raise MalformedPresentationError("reduction lost rank")
    grown = []
    for a in reduced:
        rest = tuple(e for e in system.ground if e not in a)
        sub = SetSystem(rest, tuple(s - a for s in reduced))
        _, isth = special_elements(sub)
        grown.append(a | set(isth))
    return make_system(system.ground, grown)


def components(system):
    """Connected blocks of the element/set incidence graph.

    Requires an isthmus-free system (strip isthmuses first); loops come out
    as singleton blocks.  Blocks and their members follow ground order.
    """
    _, isth = special_elements(system)
    if isth:
        raise DomainError(f"system has isthmuses {sorted(isth, key=repr)}; strip them first")
    parent = {e: e for e in system.ground}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s in system.sets:
        members = [e for e in system.ground if e in s]
        for a, b in zip(members, members[1:]):
            parent[find(a)] = find(b)
    blocks = {}
    for e in system.ground:
        blocks.setdefault(find(e), []).append(e)
    order = {e: i for i, e in enumerate(system.ground)}
    out = sorted(blocks.values(), key=lambda b: order[b[0]])
    return tuple(tuple(b) for b in out)
