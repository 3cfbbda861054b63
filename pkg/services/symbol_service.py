import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions

logger = logging.getLogger(__name__)


class SymbolError(ValueError):
    """Raised for malformed symbols, partitions and rejected preconditions."""


def _is_strictly_increasing(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


@dataclass(frozen=True, order=True)
class Partition:
    """
    An integer partition stored as a weakly decreasing tuple of positive parts.
    The empty partition has no parts.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise SymbolError(f"Partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise SymbolError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_differences(cls, values: Iterable[int]) -> "Partition":
        # zero parts are implicit
        return cls(tuple(v for v in values if v != 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True, order=True)
class Bipartition:
    """Ordered pair of partitions labelling an irreducible character of B_n."""
    first: Partition
    second: Partition

    @property
    def n(self) -> int:
        return self.first.size + self.second.size

    @property
    def label(self) -> str:
        return f"({self.first},{self.second})"

    def __str__(self) -> str:
        return self.label

    def to_dict(self) -> Dict[str, List[int]]:
        return {"first": list(self.first.parts), "second": list(self.second.parts)}

    @classmethod
    def from_dict(cls, data: Dict[str, Sequence[int]]) -> "Bipartition":
        return cls(Partition(tuple(data.get("first", ()))), Partition(tuple(data.get("second", ()))))

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        """
        Parses labels such as "((2,1),(1))", "(∅,(2))" or "((),(1,1))".

        Args:
            text (str): The label to parse

        Returns:
            Bipartition: The parsed bipartition
        """
        cleaned = text.replace(" ", "").replace("∅", "()")
        match = re.match(r'^\(\(([0-9,]*)\),\(([0-9,]*)\)\)$', cleaned)
        if not match:
            raise SymbolError(f"Cannot parse bipartition label: {text!r}")

        def _parts(group: str) -> Tuple[int, ...]:
            return tuple(int(p) for p in group.split(",") if p)

        return cls(Partition(_parts(match.group(1))), Partition(_parts(match.group(2))))


@dataclass(frozen=True, order=True)
class Symbol:
    """
    A symbol with beta-row of length k+r and gamma-row of length k.
    Both rows are strictly increasing sequences of positive integers.
    """
    beta: Tuple[int, ...]
    gamma: Tuple[int, ...]

    def __post_init__(self):
        beta = tuple(int(v) for v in self.beta)
        gamma = tuple(int(v) for v in self.gamma)
        if any(v < 1 for v in beta + gamma):
            raise SymbolError(f"Symbol entries must be positive: {beta} / {gamma}")
        if not _is_strictly_increasing(beta) or not _is_strictly_increasing(gamma):
            raise SymbolError(f"Symbol rows must be strictly increasing: {beta} / {gamma}")
        if len(beta) < len(gamma):
            raise SymbolError(f"Beta-row shorter than gamma-row: {beta} / {gamma}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    @property
    def k(self) -> int:
        return len(self.gamma)

    @property
    def r(self) -> int:
        return len(self.beta) - len(self.gamma)

    def to_dict(self) -> Dict[str, List[int]]:
        return {"beta": list(self.beta), "gamma": list(self.gamma)}

    @classmethod
    def from_dict(cls, data: Dict[str, Sequence[int]]) -> "Symbol":
        return cls(tuple(data["beta"]), tuple(data["gamma"]))

    def __str__(self) -> str:
        top = ",".join(str(v) for v in self.beta)
        bottom = ",".join(str(v) for v in self.gamma)
        return f"({top} | {bottom})"


def identity_symbol(k: int, r: int) -> Symbol:
    """The symbol of the empty bipartition: beta = (1..k+r), gamma = (1..k)."""
    return Symbol(tuple(range(1, k + r + 1)), tuple(range(1, k + 1)))


def rank(s: Symbol) -> int:
    return sum(b - i for i, b in enumerate(s.beta, start=1)) + sum(c - j for j, c in enumerate(s.gamma, start=1))


def b_invariant(s: Symbol) -> int:
    """
    Computes the b-invariant of a symbol by its defining weighted sum.

    Args:
        s (Symbol): The symbol

    Returns:
        int: The exact b-invariant
    """
    k, r = s.k, s.r
    # Weight the i-th beta entry by 2k+2r-2i and the j-th gamma entry by 2k+1-2j
    beta_part = sum((2 * k + 2 * r - 2 * i) * (b - i) for i, b in enumerate(s.beta, start=1))
    gamma_part = sum((2 * k + 1 - 2 * j) * (c - j) for j, c in enumerate(s.gamma, start=1))
    return beta_part + gamma_part


@lru_cache(maxsize=None)
def nabla(k: int, r: int) -> int:
    if k < 0 or r < 0:
        raise SymbolError(f"nabla needs nonnegative k and r, got k={k}, r={r}")
    beta_part = sum((2 * k + 2 * r - 2 * i) * i for i in range(1, k + r + 1))
    gamma_part = sum((2 * k + 1 - 2 * j) * j for j in range(1, k + 1))
    return beta_part + gamma_part


def z_sequence(s: Symbol) -> Tuple[int, ...]:
    return tuple(sorted(s.beta + s.gamma))


def z_prime_sequence(s: Symbol) -> Tuple[int, ...]:
    """Interleaving (beta_1..beta_r, gamma_1, beta_{r+1}, ..., gamma_k, beta_{r+k})."""
    r = s.r
    sequence = list(s.beta[:r])
    for gamma_j, beta_j in zip(s.gamma, s.beta[r:]):
        sequence.extend((gamma_j, beta_j))
    return tuple(sequence)


def symbol_of_zprime(sequence: Sequence[int], r: int) -> Symbol:
    """
    Rebuilds the unique symbol whose interleaved sequence is the given one.

    Args:
        sequence (Sequence[int]): An interleaved sequence of length 2k+r
        r (int): The row-length difference

    Returns:
        Symbol: The symbol with z_prime_sequence(symbol) == sequence
    """
    sequence = tuple(sequence)
    if r < 0 or len(sequence) < r or (len(sequence) - r) % 2:
        raise SymbolError(f"Sequence of length {len(sequence)} cannot interleave a symbol with r={r}")
    # Past the first r entries, even positions belong to gamma
    tail = sequence[r:]
    return Symbol(sequence[:r] + tail[1::2], tail[0::2])


def b_via_zprime(s: Symbol) -> int:
    """b-invariant evaluated through partial sums of the interleaved sequence."""
    partial_sums = list(accumulate(z_prime_sequence(s)))
    k, r = s.k, s.r
    # The first r - 1 partial sums count twice
    return sum(partial_sums[:max(r - 1, 0)]) + sum(partial_sums[:max(2 * k + r - 1, 0)]) - nabla(k, r)


def b_d_invariant(s: Symbol, d: int) -> int:
    if s.r != 0:
        raise SymbolError(f"b_d-invariant needs a symbol with r = 0, got r = {s.r}")
    if d < 0:
        raise SymbolError(f"d must be nonnegative, got {d}")
    k = s.k
    beta_part = sum((2 * k + 2 * d - 2 * i) * b for i, b in enumerate(s.beta, start=1))
    gamma_part = sum((2 * k + 1 - 2 * j) * c for j, c in enumerate(s.gamma, start=1))
    return beta_part + gamma_part


def sharp(s: Symbol) -> Symbol:
    shared = set(s.beta) & set(s.gamma)
    return Symbol(tuple(b for b in s.beta if b not in shared), tuple(c for c in s.gamma if c not in shared))


def is_special(s: Symbol) -> bool:
    stripped = sharp(s)
    return z_sequence(stripped) == z_prime_sequence(stripped)


def op_symbol(s: Symbol) -> Symbol:
    if s.r != 0:
        raise SymbolError(f"Row swap is only defined for r = 0, got r = {s.r}")
    return Symbol(s.gamma, s.beta)


def shift(s: Symbol) -> Symbol:
    return Symbol((1,) + tuple(b + 1 for b in s.beta), (1,) + tuple(c + 1 for c in s.gamma))


def tilde(s: Symbol, top: Optional[int] = None) -> Symbol:
    """
    Appends an entry larger than every entry of an r = 0 symbol to its beta-row.

    Args:
        s (Symbol): A symbol with r = 0
        top (int, optional): The appended entry; defaults to one more than the largest entry

    Returns:
        Symbol: A symbol with r = 1
    """
    if s.r != 0:
        raise SymbolError(f"tilde needs a symbol with r = 0, got r = {s.r}")
    largest = max(s.beta + s.gamma, default=0)
    if top is None:
        top = largest + 1
    if top <= largest:
        raise SymbolError(f"Appended entry {top} must exceed every entry (max {largest})")
    return Symbol(s.beta + (top,), s.gamma)


def restrict(s: Symbol, subset: Iterable[int]) -> Symbol:
    keep = set(subset)
    return Symbol(tuple(b for b in s.beta if b in keep), tuple(c for c in s.gamma if c in keep))


def bipartition_of_symbol(s: Symbol) -> Bipartition:
    k_plus_r = len(s.beta)
    first = Partition.from_differences(s.beta[i - 1] - i for i in range(k_plus_r, 0, -1))
    second = Partition.from_differences(s.gamma[j - 1] - j for j in range(s.k, 0, -1))
    return Bipartition(first, second)


def symbol_of_bipartition(bip: Bipartition, k: int, r: int) -> Symbol:
    """
    Builds the symbol in Sym_k(r) whose bipartition is `bip`.

    Args:
        bip (Bipartition): The bipartition
        k (int): Length of the gamma-row
        r (int): Row-length difference

    Returns:
        Symbol: The symbol, left inverse of bipartition_of_symbol
    """
    if k < 0 or r < 0:
        raise SymbolError(f"k and r must be nonnegative, got k={k}, r={r}")
    if len(bip.second) > k or len(bip.first) > k + r:
        raise SymbolError(f"k={k}, r={r} too small for bipartition {bip}")
    first = bip.first.parts + (0,) * (k + r - len(bip.first))
    second = bip.second.parts + (0,) * (k - len(bip.second))
    beta = tuple(i + first[k + r - i] for i in range(1, k + r + 1))
    gamma = tuple(j + second[k - j] for j in range(1, k + 1))
    return Symbol(beta, gamma)


def b_of_bipartition(bip: Bipartition, r: int = 1) -> int:
    """b-invariant of a character, read off its symbol with k = n."""
    return b_invariant(symbol_of_bipartition(bip, bip.n, r))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    if n < 0:
        raise SymbolError(f"n must be nonnegative, got {n}")
    found = []
    for multiplicities in partitions(n):
        parts = []
        for part, count in multiplicities.items():
            parts.extend([part] * count)
        found.append(Partition(tuple(sorted(parts, reverse=True))))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def enumerate_bipartitions(n: int) -> Tuple[Bipartition, ...]:
    """
    All bipartitions of n, ordered lexicographically by first then second
    component (partitions compare as tuples of parts).
    """
    if n < 0:
        raise SymbolError(f"n must be nonnegative, got {n}")
    result = [
        Bipartition(first, second)
        for size in range(n + 1)
        for first in enumerate_partitions(size)
        for second in enumerate_partitions(n - size)
    ]
    result.sort()
    logger.debug("Enumerated %d bipartitions of %d", len(result), n)
    return tuple(result)


def trivial_bipartition(n: int) -> Bipartition:
    return Bipartition(Partition((n,) if n else ()), Partition())


def sign_bipartition(n: int) -> Bipartition:
    return Bipartition(Partition(), Partition((1,) * n))
