import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple, Union

from services.family_service import (
    FamilyError,
    FamilyKey,
    block_decomposition,
    families_of_rank,
    split_at_first_arc,
    stripped_key,
)
from services.involution_service import (
    AdmissibleInvolution,
    InvolutionError,
    enumerate_admissible,
    is_r_admissible,
)
from services.symbol_service import (
    Bipartition,
    Symbol,
    b_of_bipartition,
    bipartition_of_symbol,
    enumerate_bipartitions,
)
from utils.parameter_validator import NON_INTEGRAL

logger = logging.getLogger(__name__)

Ratio = Union[int, str]


@dataclass(frozen=True)
class ConstructibleCharacter:
    """
    A constructible character: the sum of the characters of the members
    of F_iota, with its distinguished constituent of minimal b-invariant.
    """
    n: int
    r: Ratio
    constituents: Tuple[Bipartition, ...]
    minimal: Bipartition
    family: Optional[FamilyKey] = None
    involutions: Tuple[AdmissibleInvolution, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "r": self.r,
            "constituents": [bip.to_dict() for bip in self.constituents],
            "minimal": self.minimal.to_dict(),
            "family": self.family.to_dict() if self.family else None,
            "involutions": [inv.to_dict() for inv in self.involutions],
        }


def _check_support(key: FamilyKey, inv: AdmissibleInvolution):
    if inv.support != key.z or inv.r != key.r:
        raise FamilyError(f"Involution {inv} does not fit family key {key}")


def f_iota_members(key: FamilyKey, inv: AdmissibleInvolution) -> List[Symbol]:
    """
    Lists the family members whose beta-row meets every orbit of the
    involution exactly once: every fixed point and one element of each
    2-cycle go to beta.

    Args:
        key (FamilyKey): The family
        inv (AdmissibleInvolution): An involution of key.z with key.r fixed points

    Returns:
        list: 2^l symbols
    """
    _check_support(key, inv)
    members = []
    for choice in product(*inv.pairs):
        chosen = set(choice) | set(inv.fixed)
        beta = tuple(sorted(key.x + tuple(chosen)))
        gamma = tuple(sorted(key.x + tuple(v for v in key.z if v not in chosen)))
        members.append(Symbol(beta, gamma))
    return sorted(members)


def g_iota_members(support: Tuple[int, ...], inv: AdmissibleInvolution) -> List[Symbol]:
    """The r = 0 symbols on a fixed-point-free block meeting every 2-cycle once in beta."""
    if inv.support != tuple(support) or inv.r:
        raise InvolutionError(f"{inv} is not a fixed-point-free involution of {support}")
    members = []
    for choice in product(*inv.pairs):
        members.append(Symbol(tuple(sorted(choice)), tuple(v for v in support if v not in choice)))
    return sorted(members)


def _build_block(points: Tuple[int, ...], inv: AdmissibleInvolution, d: int) -> Tuple[List[int], List[int]]:
    if not points:
        return [], []
    head, tail = split_at_first_arc(points, inv)
    first, mate = head[0], head[-1]
    # the inner arcs see d - 1, or 1 once d has reached 0
    inner_d = d - 1 if d >= 1 else 1
    inner_beta, inner_gamma = _build_block(head[1:-1], inv, inner_d)
    # everything after the partner of z_1 keeps the same d
    outer_beta, outer_gamma = _build_block(tail, inv, d)
    if d >= 1:
        beta, gamma = [first], [mate]
    else:
        beta, gamma = [mate], [first]
    return beta + inner_beta + outer_beta, gamma + inner_gamma + outer_gamma


def minimal_symbol_block(support: Tuple[int, ...], inv: AdmissibleInvolution, d: int) -> Symbol:
    """
    Builds the symbol of minimal b_d-invariant among the members of G_iota.

    The least element z_1 goes to beta when d >= 1 and to gamma when d = 0;
    its partner goes to the other row. The elements strictly between them
    are placed recursively with d - 1 (or 1 when d = 0); the elements
    after the partner are placed recursively with the same d.

    Args:
        support (tuple): The block Z
        inv (AdmissibleInvolution): A 0-admissible involution of Z
        d (int): Index of the b_d-invariant

    Returns:
        Symbol: An r = 0 symbol on Z
    """
    support = tuple(sorted(support))
    if d < 0:
        raise InvolutionError(f"d must be nonnegative, got {d}")
    if inv.support != support or inv.r or not is_r_admissible(support, inv.pairs, inv.fixed):
        raise InvolutionError(f"{inv} is not a 0-admissible involution of {support}")
    beta, gamma = _build_block(support, inv, d)
    return Symbol(tuple(sorted(beta)), tuple(sorted(gamma)))


def minimal_symbol(key: FamilyKey, inv: AdmissibleInvolution) -> Symbol:
    """
    Assembles the unique member of F_iota with minimal b-invariant from
    the fixed points and the block-wise minimal symbols.

    Args:
        key (FamilyKey): The family
        inv (AdmissibleInvolution): An r-admissible involution of key.z

    Returns:
        Symbol: The minimal member of F_iota
    """
    _check_support(key, inv)
    decomposition = block_decomposition(stripped_key(key), inv)
    # Shared entries go to both rows, fixed points to beta
    beta = list(key.x) + list(inv.fixed)
    gamma = list(key.x)
    for block in decomposition.blocks:
        # Block d is minimised for b_d
        part = minimal_symbol_block(block.support, block.involution, block.d)
        beta.extend(part.beta)
        gamma.extend(part.gamma)
    return Symbol(tuple(sorted(beta)), tuple(sorted(gamma)))


def constructible_character(key: FamilyKey, inv: AdmissibleInvolution, n: Optional[int] = None) -> ConstructibleCharacter:
    members = f_iota_members(key, inv)
    constituents = tuple(sorted(bipartition_of_symbol(s) for s in members))
    minimal = bipartition_of_symbol(minimal_symbol(key, inv))
    n = constituents[0].n if n is None else n
    return ConstructibleCharacter(n, key.r, constituents, minimal, key, (inv,))


def all_constructible(n: int, r: Ratio) -> List[ConstructibleCharacter]:
    """
    Lists the constructible characters of B_n for the weight ratio r.

    Args:
        n (int): Rank
        r: Positive integral ratio, or NON_INTEGRAL

    Returns:
        list: Characters ordered by minimal constituent then constituents;
        identical constituent sets are merged and keep every source involution
    """
    # Non-integral ratio: every irreducible character is constructible
    if r == NON_INTEGRAL:
        return [
            ConstructibleCharacter(n, NON_INTEGRAL, (bip,), bip)
            for bip in enumerate_bipartitions(n)
        ]

    merged: Dict[Tuple[Bipartition, ...], ConstructibleCharacter] = {}
    for key in families_of_rank(n, r):
        for inv in enumerate_admissible(key.z, key.r):
            character = constructible_character(key, inv, n)
            # Merge identical constituent sets, keeping every involution
            existing = merged.get(character.constituents)
            if existing is None:
                merged[character.constituents] = character
                continue
            logger.info("Involutions %s and %s give the same constituents", existing.involutions[0], inv)
            merged[character.constituents] = ConstructibleCharacter(
                n, r, existing.constituents, existing.minimal, existing.family,
                existing.involutions + (inv,),
            )
    characters = sorted(merged.values(), key=lambda c: (c.minimal, c.constituents))
    logger.info("Rank %d, r=%s: %d constructible characters", n, r, len(characters))
    return characters


def get_constructible_data(n: int, r: Ratio) -> Dict:
    """
    Builds the constructible character listing with minimal constituents and
    their b-invariants.

    Args:
        n (int): Rank
        r: Integral ratio, or the non-integral marker

    Returns:
        dict: Listing data or an error dictionary
    """
    try:
        characters = []
        for character in all_constructible(n, r):
            entry = character.to_dict()
            symbol_r = r if isinstance(r, int) else 1
            entry["b"] = {
                bip.label: b_of_bipartition(bip, symbol_r) for bip in character.constituents
            }
            characters.append(entry)
        return {"command": "constructible", "n": n, "r": r, "characters": characters}
    except Exception as e:
        return {"error": f"Failed to build constructible characters: {str(e)}"}
