"""
Abelian fields K given by their groups of tame Dirichlet characters.
"""

import math
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from padic_ell.charset import DirichletCharacter, char_bar, parse_character
from padic_ell.curve import CurveData
from padic_ell.errors import ConductorClash, NonRealGroup, NotClosed
from padic_ell.utils.log import log

FIELD_PATTERN = re.compile(r"^\s*(K\s*=\s*)?\[(?P<body>.*)\]\s*$")


@dataclass(frozen=True)
class AbelianFieldSpec:
    """
    The character group of K, trivial character first. K is disjoint from the cyclotomic
    Z_p-extension because every conductor is prime to p. A character set that is not
    closed under conjugation raises NonRealGroup.
    """

    p: int
    characters: Tuple[DirichletCharacter, ...]

    def __post_init__(self):
        if not self.is_conjugation_closed():
            missing = [psi.to_text() for psi in self.characters if char_bar(psi) not in set(self.characters)]
            raise NonRealGroup(f"{self.to_text()} lacks the conjugates of {missing}")

    @property
    def degree(self) -> int:
        return len(self.characters)

    def is_conjugation_closed(self) -> bool:
        chars = set(self.characters)
        return all(char_bar(psi) in chars for psi in chars)

    def to_text(self) -> str:
        return "[" + ", ".join(psi.to_text() for psi in self.characters) + "]"

    def __str__(self):
        return self.to_text()


def _closure(generators: Iterable[DirichletCharacter], p: int) -> List[DirichletCharacter]:
    trivial = DirichletCharacter.trivial(p)
    group = [trivial]
    seen = {trivial}
    frontier = list(dict.fromkeys(generators))
    while frontier:
        gen = frontier.pop(0)
        for psi in list(group):
            product = psi * gen
            if product not in seen:
                seen.add(product)
                group.append(product)
                frontier.append(product)
    return group


def build_group(generators: Iterable[DirichletCharacter], p: int, E: Optional[CurveData] = None) -> AbelianFieldSpec:
    """
    Close the generators under multiplication.

    Raises:
        WildCharacter, ConductorClash: from the characters themselves (p | D).
        ConductorClash: if a conductor meets an additive prime of E.
        NotClosed: if the closure fails to be a group.
    """
    generators = list(generators)
    for psi in generators:
        if psi.p != p:
            raise ValueError(f"character {psi} is defined at {psi.p}, not {p}")
    group = _closure(generators, p)

    members = set(group)
    for a in group:
        for b in group:
            if a * b not in members:
                raise NotClosed(f"{a} * {b} = {a * b} is missing from the group")
        if char_bar(a) not in members:
            raise NotClosed(f"the inverse of {a} is missing from the group")

    if E is not None:
        additive = E.additive_primes()
        for psi in group:
            shared = [q for q in additive if psi.M % q == 0]
            if shared:
                raise ConductorClash(f"{psi} is ramified at the additive prime(s) {shared} of {E.name}")

    log.debug(f"Character group at p={p}: {[psi.to_text() for psi in group]}")
    return AbelianFieldSpec(p, tuple(group))


def parse_field(text: str, p: int, E: Optional[CurveData] = None) -> AbelianFieldSpec:
    """
    "K=[kron:-4]", "[kron:5, kron:-4]" or a bare comma-separated generator list; "Q" or
    "[]" is the trivial group.
    """
    text = text.strip()
    match = FIELD_PATTERN.match(text)
    body = match.group("body") if match else text
    if body.strip() in ("", "Q"):
        return build_group([], p, E)
    generators = [parse_character(part.strip(), p) for part in body.split(",") if part.strip()]
    return build_group(generators, p, E)


def conductor_lcm(spec: AbelianFieldSpec) -> int:
    lcm = 1
    for psi in spec.characters:
        lcm = math.lcm(lcm, psi.conductor)
    return lcm
