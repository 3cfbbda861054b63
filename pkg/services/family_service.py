import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from services.involution_service import (
    AdmissibleInvolution,
    InvolutionError,
    restrict_involution,
)
from services.symbol_service import (
    Bipartition,
    Symbol,
    SymbolError,
    b_d_invariant,
    b_invariant,
    bipartition_of_symbol,
    enumerate_bipartitions,
    is_special,
    nabla,
    restrict,
    symbol_of_bipartition,
    z_sequence,
)

logger = logging.getLogger(__name__)


class FamilyError(ValueError):
    """Raised when a family key is malformed or does not fit an involution."""


@dataclass(frozen=True, order=True)
class FamilyKey:
    """
    Invariant of a family of symbols: the shared entries x = beta ∩ gamma
    and the support z of the symmetric difference.
    """
    x: Tuple[int, ...]
    z: Tuple[int, ...]
    k: int
    r: int

    def __post_init__(self):
        x = tuple(sorted(int(v) for v in self.x))
        z = tuple(sorted(int(v) for v in self.z))
        if len(set(x)) != len(x) or len(set(z)) != len(z):
            raise FamilyError(f"Repeated entries in family key x={x}, z={z}")
        if set(x) & set(z):
            raise FamilyError(f"x={x} and z={z} must be disjoint")
        if any(v < 1 for v in x + z):
            raise FamilyError(f"Family key entries must be positive: x={x}, z={z}")
        if self.k < len(x) or self.r < 0 or len(z) != 2 * (self.k - len(x)) + self.r:
            raise FamilyError(f"|z|={len(z)} does not match k={self.k}, r={self.r}, |x|={len(x)}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)

    @property
    def l(self) -> int:
        return self.k - len(self.x)

    def to_dict(self) -> Dict:
        return {"x": list(self.x), "z": list(self.z), "k": self.k, "r": self.r}


@dataclass(frozen=True)
class Block:
    d: int
    support: Tuple[int, ...]
    involution: AdmissibleInvolution

    @property
    def k_d(self) -> int:
        return len(self.support) // 2


@dataclass(frozen=True)
class BlockDecomposition:
    """
    Fixed points f_1 > ... > f_r of an involution and the blocks
    Z^(d) = {z : f_{d+1} < z < f_d} for d = 0..r.
    """
    fixed: Tuple[int, ...]
    blocks: Tuple[Block, ...]

    def block(self, d: int) -> Block:
        return self.blocks[d]


def family_key(s: Symbol) -> FamilyKey:
    shared = set(s.beta) & set(s.gamma)
    union = set(s.beta) | set(s.gamma)
    return FamilyKey(tuple(sorted(shared)), tuple(sorted(union - shared)), s.k, s.r)


def enumerate_family(key: FamilyKey) -> List[Symbol]:
    """
    Lists every symbol with the given family key.

    Args:
        key (FamilyKey): The family key

    Returns:
        list: C(|z|, l+r) symbols, ordered by the beta-part chosen from z
    """
    members = []
    for chosen in combinations(key.z, key.l + key.r):
        rest = tuple(v for v in key.z if v not in chosen)
        members.append(Symbol(tuple(sorted(key.x + chosen)), tuple(sorted(key.x + rest))))
    return members


def special_symbol(key: FamilyKey) -> Symbol:
    z, r = key.z, key.r
    # The r smallest entries of z go to beta, the rest alternate gamma, beta, ...
    beta = z[:r] + z[r + 1::2]
    gamma = z[r::2]
    return Symbol(tuple(sorted(key.x + beta)), tuple(sorted(key.x + gamma)))


def strip_x(s: Symbol, b: int) -> Tuple[Symbol, int]:
    """
    Removes a shared entry b from both rows.

    Args:
        s (Symbol): The symbol
        b (int): An entry of beta ∩ gamma

    Returns:
        tuple: (stripped symbol, b_invariant(s) - b_invariant(stripped))
    """
    if b not in s.beta or b not in s.gamma:
        raise SymbolError(f"{b} is not a shared entry of {s}")
    stripped = Symbol(tuple(v for v in s.beta if v != b), tuple(v for v in s.gamma if v != b))
    return stripped, b_invariant(s) - b_invariant(stripped)


def strip_offset_formula(s: Symbol, b: int) -> int:
    """Closed form of the strip_x offset (with the nabla difference subtracted)."""
    k, r = s.k, s.r
    z = z_sequence(s)
    # Entries of z up to b, and the sum of those strictly below it
    at_most = sum(1 for v in z if v <= b)
    below = sum(v for v in z if v < b)
    return -(nabla(k, r) - nabla(k - 1, r)) + b * (4 * k + 2 * r + 1 - 2 * at_most) + 2 * below


def stripped_key(key: FamilyKey) -> FamilyKey:
    return FamilyKey((), key.z, key.l, key.r)


def block_decomposition(key: FamilyKey, inv: AdmissibleInvolution) -> BlockDecomposition:
    if key.x:
        raise FamilyError(f"Strip the shared entries {key.x} before decomposing")
    if inv.support != key.z or inv.r != key.r:
        raise FamilyError(f"Involution {inv} does not fit family key {key}")
    # Fixed points in decreasing order, with sentinels above the largest and below the smallest entry
    fixed = tuple(sorted(inv.fixed, reverse=True))
    bounds = (float("inf"),) + fixed + (0,)
    blocks = []
    for d in range(key.r + 1):
        # Block d holds the entries strictly between f_{d+1} and f_d
        upper, lower = bounds[d], bounds[d + 1]
        support = tuple(v for v in key.z if lower < v < upper)
        try:
            restricted = restrict_involution(inv, support)
        except InvolutionError as exc:
            raise FamilyError(f"Block {d} of {inv} is not stable: {exc}") from exc
        blocks.append(Block(d, support, restricted))
    return BlockDecomposition(fixed, tuple(blocks))


def block_restrictions(s: Symbol, decomposition: BlockDecomposition) -> List[Symbol]:
    return [restrict(s, block.support) for block in decomposition.blocks]


def b_via_blocks(s: Symbol, decomposition: BlockDecomposition) -> int:
    """
    Evaluates b(s) from the b_d-invariants of its block restrictions, for
    a symbol with no shared entries whose restrictions all have r = 0.
    """
    k, r = s.k, s.r
    # Sum of the block invariants, block d weighted with its own d
    total = sum(
        b_d_invariant(part, d) for d, part in enumerate(block_restrictions(s, decomposition))
    ) - nabla(k, r)
    # Cross terms between f_d, block d and the blocks above f_d
    below = 0
    for d in range(1, r + 1):
        below += decomposition.block(d - 1).k_d
        f_d = decomposition.fixed[d - 1]
        # plus 2(d - 1) f_d for the fixed point
        total += 2 * below * (f_d + sum(decomposition.block(d).support)) + 2 * (d - 1) * f_d
    return total


def split_at_first_arc(support: Tuple[int, ...], inv: AdmissibleInvolution) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Splits Z into {z_1, ..., iota(z_1)} and the elements after iota(z_1)."""
    if not support:
        return (), ()
    partner = inv.image(support[0])
    # Cut just after the partner of z_1
    cut = support.index(partner) + 1
    return support[:cut], support[cut:]


def families_of_rank(n: int, r: int, k: Optional[int] = None) -> Dict[FamilyKey, List[Tuple[Bipartition, Symbol]]]:
    """
    Groups the bipartitions of n into families of their symbols in Sym_k(r).

    Args:
        n (int): Rank
        r (int): Integral weight ratio
        k (int, optional): Length of the gamma-row; defaults to n

    Returns:
        dict: FamilyKey -> [(bipartition, symbol), ...], in bipartition order
    """
    k = n if k is None else k
    grouped: Dict[FamilyKey, List[Tuple[Bipartition, Symbol]]] = {}
    for bip in enumerate_bipartitions(n):
        symbol = symbol_of_bipartition(bip, k, r)
        grouped.setdefault(family_key(symbol), []).append((bip, symbol))
    logger.info("Rank %d, r=%d: %d bipartitions in %d families", n, r, len(enumerate_bipartitions(n)), len(grouped))
    return grouped


def family_bipartitions(key: FamilyKey) -> List[Bipartition]:
    return sorted(bipartition_of_symbol(s) for s in enumerate_family(key))


def special_members(key: FamilyKey) -> List[Symbol]:
    return [s for s in enumerate_family(key) if is_special(s)]


def get_irreducible_data(n: int, r) -> Dict:
    """
    Builds the irreducible character table: every bipartition of n with its
    symbol (k = n), b-invariant and family index.

    Args:
        n (int): Rank
        r: Integral ratio, or the non-integral marker

    Returns:
        dict: Table data or an error dictionary
    """
    try:
        if not isinstance(r, int):
            characters = []
            for index, bip in enumerate(enumerate_bipartitions(n)):
                characters.append({
                    "bipartition": bip.to_dict(),
                    "label": bip.label,
                    "symbol": None,
                    "b": b_invariant(symbol_of_bipartition(bip, n, 1)),
                    "family": index,
                })
            return {"command": "irr", "n": n, "r": str(r), "characters": characters}

        families = families_of_rank(n, r)
        family_index = {}
        for index, members in enumerate(families.values()):
            for bip, _ in members:
                family_index[bip] = index
        characters = []
        for bip in enumerate_bipartitions(n):
            symbol = symbol_of_bipartition(bip, n, r)
            characters.append({
                "bipartition": bip.to_dict(),
                "label": bip.label,
                "symbol": symbol.to_dict(),
                "b": b_invariant(symbol),
                "family": family_index[bip],
            })
        return {"command": "irr", "n": n, "r": r, "characters": characters}
    except Exception as e:
        return {"error": f"Failed to build irreducible characters: {str(e)}"}
