import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from services.constructible_service import ConstructibleCharacter, Ratio, all_constructible
from services.family_service import (
    FamilyKey,
    family_bipartitions,
    family_key,
    special_symbol,
)
from services.symbol_service import (
    Bipartition,
    b_of_bipartition,
    bipartition_of_symbol,
    enumerate_bipartitions,
    symbol_of_bipartition,
)

logger = logging.getLogger(__name__)


class LusztigConsistencyError(RuntimeError):
    """Raised when graph components disagree with families of symbols."""


@dataclass(frozen=True)
class LusztigFamily:
    members: Tuple[Bipartition, ...]
    minimal: Bipartition
    key: Optional[FamilyKey] = None

    def to_dict(self, r: Ratio) -> Dict:
        return {
            "members": [bip.to_dict() for bip in self.members],
            "minimal": self.minimal.to_dict(),
            "special": _special_bipartition(self.key).to_dict() if self.key else None,
            "b": {bip.label: _b(bip, r) for bip in self.members},
            "key": self.key.to_dict() if self.key else None,
        }


def _b(bip: Bipartition, r: Ratio) -> int:
    return b_of_bipartition(bip, r if isinstance(r, int) else 1)


def _special_bipartition(key: FamilyKey) -> Bipartition:
    return bipartition_of_symbol(special_symbol(key))


def _unique_argmin(members: Iterable[Bipartition], r: Ratio) -> Tuple[Optional[Bipartition], List[Bipartition]]:
    """Returns (argmin or None on a tie, all members attaining the minimum)."""
    values = {bip: _b(bip, r) for bip in members}
    lowest = min(values.values())
    winners = sorted(bip for bip, value in values.items() if value == lowest)
    return (winners[0] if len(winners) == 1 else None), winners


def family_graph(n: int, r: Ratio, characters: Optional[List[ConstructibleCharacter]] = None) -> nx.Graph:
    """
    Joins two characters whenever some constructible character contains both.

    Args:
        n (int): Rank
        r: Integral ratio, or the non-integral marker
        characters (list, optional): Precomputed all_constructible(n, r)

    Returns:
        nx.Graph: Graph over the bipartitions of n
    """
    if characters is None:
        characters = all_constructible(n, r)
    graph = nx.Graph()
    graph.add_nodes_from(enumerate_bipartitions(n))
    for character in characters:
        # Chain the constituents of each character
        constituents = character.constituents
        graph.add_edges_from(zip(constituents, constituents[1:]))
    return graph


def lusztig_families(n: int, r: Ratio, characters: Optional[List[ConstructibleCharacter]] = None) -> List[LusztigFamily]:
    """
    Computes the Lusztig families as connected components of the family graph
    and checks them against the families of symbols.

    Args:
        n (int): Rank
        r: Integral ratio, or the non-integral marker
        characters (list, optional): Precomputed all_constructible(n, r)

    Returns:
        list: Families ordered by minimal member
    """
    graph = family_graph(n, r, characters)
    families = []
    for component in nx.connected_components(graph):
        members = tuple(sorted(component))
        minimal, _ = _unique_argmin(members, r)
        key = None
        # Check the component against the family of symbols
        if isinstance(r, int):
            keys = {family_key(symbol_of_bipartition(bip, n, r)) for bip in members}
            if len(keys) != 1:
                raise LusztigConsistencyError(f"Component {[str(b) for b in members]} spans {len(keys)} families")
            key = keys.pop()
            if list(members) != family_bipartitions(key):
                raise LusztigConsistencyError(f"Component {[str(b) for b in members]} differs from its family {key}")
        families.append(LusztigFamily(members, minimal if minimal else members[0], key))
    families.sort(key=lambda family: (family.minimal, family.members))
    return families


def check_theorem_L(n: int, r: Ratio) -> Dict:
    """
    Checks uniqueness of the b-minimal member in every Lusztig family and
    among the constituents of every constructible character. For r = 1 it
    also checks that the special character of each family is a constituent
    of every constructible character of that family.

    Args:
        n (int): Rank
        r: Integral ratio, or the non-integral marker

    Returns:
        dict: Report with per-family and per-character entries and pass flags
    """
    characters = all_constructible(n, r)
    failures = []

    family_entries = []
    for family in lusztig_families(n, r, characters):
        minimal, winners = _unique_argmin(family.members, r)
        if minimal is None:
            failures.append(f"family tie among {[str(b) for b in winners]}")
        entry = family.to_dict(r)
        entry["unique"] = minimal is not None
        family_entries.append(entry)

    character_entries = []
    for character in characters:
        minimal, winners = _unique_argmin(character.constituents, r)
        if minimal is None:
            failures.append(f"constructible tie among {[str(b) for b in winners]}")
        elif minimal != character.minimal:
            failures.append(f"constructed minimum {character.minimal} is not the b-argmin {minimal}")
        character_entries.append({
            "constituents": [bip.to_dict() for bip in character.constituents],
            "minimal": character.minimal.to_dict(),
            "b": {bip.label: _b(bip, r) for bip in character.constituents},
            "unique": minimal is not None,
        })

    # Equal parameters: the special character must lie in every constructible character of its family
    special_common = None
    if r == 1:
        special_common = True
        for character in characters:
            special = _special_bipartition(character.family)
            if special not in character.constituents:
                special_common = False
                failures.append(f"special {special} missing from {[str(b) for b in character.constituents]}")

    passed = not failures
    if not passed:
        logger.warning("Theorem L check failed for n=%d, r=%s: %s", n, r, failures)
    return {
        "n": n,
        "r": r,
        "families": family_entries,
        "constructible": character_entries,
        "special_common": special_common,
        "failures": failures,
        "passed": passed,
    }


def find_noncommon_family(n: int, r_range: Iterable[int]) -> Optional[Dict]:
    """
    Searches for a family with at least two constructible characters and
    no constituent common to all of them.

    Args:
        n (int): Rank
        r_range (Iterable[int]): Ratios to scan, in ascending order

    Returns:
        dict: The first witness, or None
    """
    for r in sorted(r_range):
        by_family: Dict[FamilyKey, List[ConstructibleCharacter]] = {}
        for character in all_constructible(n, r):
            by_family.setdefault(character.family, []).append(character)
        for key in sorted(by_family):
            characters = by_family[key]
            if len(characters) < 2:
                continue
            # Intersect the constituents of every constructible character in the family
            common = set(characters[0].constituents)
            for character in characters[1:]:
                common &= set(character.constituents)
            if not common:
                logger.info("Family %s at n=%d, r=%d has no common constituent", key, n, r)
                return {
                    "n": n,
                    "r": r,
                    "family": key.to_dict(),
                    "members": [bip.to_dict() for bip in family_bipartitions(key)],
                    "constructible": [character.to_dict() for character in characters],
                }
    return None


def special_characters(n: int, r: int) -> List[Bipartition]:
    keys = {family_key(symbol_of_bipartition(bip, n, r)) for bip in enumerate_bipartitions(n)}
    return sorted(_special_bipartition(key) for key in keys)


def get_family_data(n: int, r: Ratio) -> Dict:
    """
    Builds the Lusztig family listing with special and minimal members.

    Args:
        n (int): Rank
        r: Integral ratio, or the non-integral marker

    Returns:
        dict: Listing data or an error dictionary
    """
    try:
        families = [family.to_dict(r) for family in lusztig_families(n, r)]
        return {"command": "families", "n": n, "r": r, "families": families}
    except Exception as e:
        return {"error": f"Failed to build Lusztig families: {str(e)}"}


def get_counterexample_data(n: int, r_range: Iterable[int]) -> Dict:
    try:
        r_range = sorted(r_range)
        witness = find_noncommon_family(n, r_range)
        return {"command": "counterexample", "n": n, "r_range": r_range, "witness": witness}
    except Exception as e:
        return {"error": f"Failed to search for a family without common constituent: {str(e)}"}

