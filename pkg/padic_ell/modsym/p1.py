"""
The projective line P^1(Z/NZ).

Pairs (c, d) with gcd(c, d, N) = 1 are identified up to multiplication by units mod N.
Each orbit is represented by its lexicographically smallest member, and the sorted
list of representatives fixes the index of every Manin symbol.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from padic_ell.utils.log import log

Pair = Tuple[int, int]


@dataclass(frozen=True)
class P1Element:
    c: int
    d: int
    index: int

    @property
    def pair(self) -> Pair:
        return self.c, self.d

    def __str__(self):
        return f"({self.c}:{self.d})"


@dataclass
class P1List:
    """All elements of P^1(Z/NZ) with an O(1) normalisation table."""

    N: int
    elements: List[P1Element] = field(init=False)
    _table: Dict[Pair, int] = field(init=False, repr=False)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")
        N = self.N
        units = [u for u in range(1, N + 1) if math.gcd(u, N) == 1]
        orbits: Dict[Pair, Pair] = {}
        for c in range(N):
            for d in range(N):
                if (c, d) in orbits or math.gcd(math.gcd(c, d), N) != 1:
                    continue
                orbit = {((u * c) % N, (u * d) % N) for u in units}
                rep = min(orbit)
                for member in orbit:
                    orbits[member] = rep
        reps = sorted(set(orbits.values()))
        position = {rep: i for i, rep in enumerate(reps)}
        self.elements = [P1Element(c, d, i) for i, (c, d) in enumerate(reps)]
        self._table = {pair: position[rep] for pair, rep in orbits.items()}
        log.debug(f"P1(Z/{N}) has {len(self.elements)} elements")

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i: int) -> P1Element:
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    def index(self, c: int, d: int) -> int:
        """Index of the orbit of (c : d); raises KeyError when gcd(c, d, N) > 1."""
        return self._table[(c % self.N, d % self.N)]

    def normalize(self, c: int, d: int) -> P1Element:
        return self.elements[self.index(c, d)]

    def contains(self, c: int, d: int) -> bool:
        return (c % self.N, d % self.N) in self._table


def p1_enumerate(N: int) -> List[P1Element]:
    """Representatives of P^1(Z/NZ), one per orbit, in index order."""
    return list(P1List(N))
