import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from sympy import catalan

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class InvolutionError(ValueError):
    """Raised when an involution does not fit its support or admissibility is violated."""


def _normalize_pairs(pairs: Iterable[Sequence[int]]) -> Tuple[Pair, ...]:
    normalized = []
    for pair in pairs:
        b, c = sorted(int(v) for v in pair)
        normalized.append((b, c))
    return tuple(sorted(normalized))


@dataclass(frozen=True)
class AdmissibleInvolution:
    """
    An involution of a totally ordered finite set, given by its 2-cycles
    and its fixed points.

    Construction checks that pairs and fixed points partition the support;
    `admissible_involution` additionally checks r-admissibility.
    """
    support: Tuple[int, ...]
    pairs: Tuple[Pair, ...]
    fixed: Tuple[int, ...]

    def __post_init__(self):
        support = tuple(sorted(int(z) for z in self.support))
        pairs = _normalize_pairs(self.pairs)
        fixed = tuple(sorted(int(z) for z in self.fixed))
        covered = [z for pair in pairs for z in pair] + list(fixed)
        if sorted(covered) != list(support) or len(set(support)) != len(support):
            raise InvolutionError(
                f"Pairs {pairs} and fixed points {fixed} do not partition support {support}"
            )
        if any(b == c for b, c in pairs):
            raise InvolutionError(f"Degenerate pair in {pairs}")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "fixed", fixed)

    @property
    def r(self) -> int:
        return len(self.fixed)

    @property
    def l(self) -> int:
        return len(self.pairs)

    def image(self, z: int) -> int:
        for b, c in self.pairs:
            if z == b:
                return c
            if z == c:
                return b
        if z in self.fixed:
            return z
        raise InvolutionError(f"{z} is not in the support {self.support}")

    def as_mapping(self) -> Dict[int, int]:
        mapping = {z: z for z in self.fixed}
        for b, c in self.pairs:
            mapping[b] = c
            mapping[c] = b
        return mapping

    def to_dict(self) -> Dict[str, list]:
        return {"pairs": [[b, c] for b, c in self.pairs], "fixed": list(self.fixed)}

    def __str__(self) -> str:
        arcs = ", ".join(f"{{{b},{c}}}" for b, c in self.pairs)
        fixed = ",".join(str(z) for z in self.fixed)
        return f"[{arcs}; fix {fixed or '∅'}]"


@lru_cache(maxsize=None)
def _admissible(support: Tuple[int, ...], pairs: FrozenSet[Pair]) -> bool:
    if not pairs:
        return True
    # Peel off any pair of neighbours and recurse on what is left
    for b, c in zip(support, support[1:]):
        if (b, c) in pairs:
            rest = tuple(z for z in support if z not in (b, c))
            if _admissible(rest, pairs - {(b, c)}):
                return True
    return False


def is_r_admissible(support: Iterable[int], pairs: Iterable[Sequence[int]], fixed: Iterable[int]) -> bool:
    """
    Checks the recursive admissibility condition: either there are no pairs,
    or some pair consists of consecutive elements of the support and the
    restriction to the remaining elements is again admissible.

    Args:
        support (Iterable[int]): The totally ordered set
        pairs (Iterable[Sequence[int]]): The 2-cycles
        fixed (Iterable[int]): The fixed points

    Returns:
        bool: True if the involution is admissible (with r = number of fixed points)
    """
    support = tuple(sorted(support))
    normalized = _normalize_pairs(pairs)
    fixed = tuple(sorted(fixed))
    covered = sorted([z for pair in normalized for z in pair] + list(fixed))
    if covered != list(support):
        return False
    return _admissible(support, frozenset(normalized))


def admissible_involution(support: Iterable[int], pairs: Iterable[Sequence[int]],
                          fixed: Iterable[int] = ()) -> AdmissibleInvolution:
    inv = AdmissibleInvolution(tuple(support), tuple(pairs), tuple(fixed))
    if not is_r_admissible(inv.support, inv.pairs, inv.fixed):
        raise InvolutionError(f"Involution {inv} is not {inv.r}-admissible")
    return inv


@lru_cache(maxsize=None)
def _bindings(remaining: Tuple[int, ...], r: int) -> FrozenSet[Tuple[Pair, ...]]:
    # every way to bind adjacent pairs until r points remain
    if len(remaining) == r:
        return frozenset({()})
    found = set()
    for b, c in zip(remaining, remaining[1:]):
        rest = tuple(z for z in remaining if z not in (b, c))
        for tail in _bindings(rest, r):
            found.add(tuple(sorted(tail + ((b, c),))))
    return frozenset(found)


def enumerate_admissible(support: Iterable[int], r: int) -> List[AdmissibleInvolution]:
    """
    Generates every r-admissible involution of the support by repeatedly
    binding two consecutive remaining elements.

    Args:
        support (Iterable[int]): The totally ordered set
        r (int): Number of fixed points

    Returns:
        list: The involutions ordered lexicographically by their sorted pairs
    """
    support = tuple(sorted(support))
    if r < 0 or len(support) < r or (len(support) - r) % 2:
        raise InvolutionError(f"Cannot have {r} fixed points on a support of size {len(support)}")
    involutions = []
    for pairs in sorted(_bindings(support, r)):
        bound = {z for pair in pairs for z in pair}
        fixed = tuple(z for z in support if z not in bound)
        involutions.append(AdmissibleInvolution(support, pairs, fixed))
    logger.debug("Found %d %d-admissible involutions of %s", len(involutions), r, support)
    return involutions


def all_pairings(items: Sequence[int]) -> Iterator[List[Pair]]:
    """
    Yields the 2-cycles of every fixed-point-free involution of the items,
    crossing or not: (2m - 1)!! lists for 2m items.
    """
    rest = list(items)
    if not rest:
        yield []
        return

    # The first item is matched with each of the others in turn
    head = rest.pop(0)
    for i, mate in enumerate(rest):
        for cycles in all_pairings(rest[:i] + rest[i + 1:]):
            yield [(head, mate)] + cycles


def all_involutions(support: Iterable[int], r: int) -> Iterator[Tuple[Tuple[Pair, ...], Tuple[int, ...]]]:
    """Every involution of the support with exactly r fixed points, as (pairs, fixed)."""
    support = tuple(sorted(support))
    if r < 0 or len(support) < r or (len(support) - r) % 2:
        return
    # Choose the fixed points, then pair the rest in every way
    for fixed in combinations(support, r):
        rest = [z for z in support if z not in fixed]
        for pairing in all_pairings(rest):
            yield _normalize_pairs(pairing), fixed


def admissible_by_filter(support: Iterable[int], r: int) -> List[AdmissibleInvolution]:
    """Brute-force filter of all involutions through is_r_admissible."""
    support = tuple(sorted(support))
    kept = [
        AdmissibleInvolution(support, pairs, fixed)
        for pairs, fixed in all_involutions(support, r)
        if is_r_admissible(support, pairs, fixed)
    ]
    return sorted(kept, key=lambda inv: inv.pairs)


def orbits(inv: AdmissibleInvolution) -> List[FrozenSet[int]]:
    found = [frozenset(pair) for pair in inv.pairs] + [frozenset({z}) for z in inv.fixed]
    return sorted(found, key=min)


def restrict_involution(inv: AdmissibleInvolution, subset: Iterable[int]) -> AdmissibleInvolution:
    keep = set(subset)
    if any((b in keep) != (c in keep) for b, c in inv.pairs):
        raise InvolutionError(f"Subset {sorted(keep)} is not stable under {inv}")
    return AdmissibleInvolution(
        tuple(z for z in inv.support if z in keep),
        tuple(pair for pair in inv.pairs if pair[0] in keep),
        tuple(z for z in inv.fixed if z in keep),
    )


def catalan_count(l: int) -> int:
    return int(catalan(l))
