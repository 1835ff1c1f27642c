"""
Weierstrass models and local reduction data.

A curve is given by its a-invariants together with the conductor N, which is an input:
we validate it against the discriminant but never run Tate's algorithm.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from sympy import factorint, multiplicity

from padic_ell.errors import CurveInputError


class ReductionKind(Enum):
    """Reduction type of E at a prime"""

    GOOD_ORDINARY = "good_ordinary"
    GOOD_SUPERSINGULAR = "good_supersingular"
    SPLIT_MULT = "split_mult"
    NONSPLIT_MULT = "nonsplit_mult"
    ADDITIVE = "additive"

    @property
    def is_good(self) -> bool:
        return self in (ReductionKind.GOOD_ORDINARY, ReductionKind.GOOD_SUPERSINGULAR)

    @property
    def is_multiplicative(self) -> bool:
        return self in (ReductionKind.SPLIT_MULT, ReductionKind.NONSPLIT_MULT)


@dataclass(frozen=True)
class ReductionInfo:
    p: int
    kind: ReductionKind
    a_p: int
    delta: int

    @property
    def semistable(self) -> bool:
        return self.kind is not ReductionKind.ADDITIVE


@dataclass(frozen=True)
class CurveData:
    """
    Global minimal Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    The standard b- and c-invariants and the discriminant are derived on construction.

    Raises:
        CurveInputError: for a singular model, a conductor with a prime not dividing the
            discriminant, or a model that is visibly non-minimal at a prime >= 5.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    N: int
    label: Optional[str] = None
    b2: int = field(init=False, repr=False)
    b4: int = field(init=False, repr=False)
    b6: int = field(init=False, repr=False)
    b8: int = field(init=False, repr=False)
    c4: int = field(init=False, repr=False)
    c6: int = field(init=False, repr=False)
    discriminant: int = field(init=False, repr=False)

    def __post_init__(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        for name, value in (("b2", b2), ("b4", b4), ("b6", b6), ("b8", b8),
                            ("c4", c4), ("c6", c6), ("discriminant", disc)):
            object.__setattr__(self, name, value)
        self._validate()

    def _validate(self):
        name = self.label or str(list(self.ainvs))
        if self.discriminant == 0:
            raise CurveInputError(f"{name}: singular model (discriminant 0)")
        if self.N < 1:
            raise CurveInputError(f"{name}: conductor must be positive, got {self.N}")
        for ell in factorint(self.N):
            if self.discriminant % ell:
                raise CurveInputError(f"{name}: conductor prime {ell} does not divide the discriminant {self.discriminant}")
        for ell in factorint(abs(self.discriminant)):
            if ell < 5:
                continue
            v_disc = multiplicity(ell, self.discriminant)
            v_c4 = multiplicity(ell, self.c4) if self.c4 else v_disc
            if v_disc >= 12 and v_c4 >= 4:
                raise CurveInputError(f"{name}: model is not minimal at {ell}")

    @property
    def ainvs(self) -> Tuple[int, int, int, int, int]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    @property
    def name(self) -> str:
        return self.label or f"[{','.join(str(a) for a in self.ainvs)}];{self.N}"

    def bad_primes(self):
        return sorted(factorint(self.N))

    def additive_primes(self):
        return [ell for ell, e in sorted(factorint(self.N).items()) if e >= 2]

    def to_text(self) -> str:
        """The "a1,a2,a3,a4,a6;N" form accepted by `parse_curve_text`."""
        return f"{','.join(str(a) for a in self.ainvs)};{self.N}"

    def to_json(self) -> dict:
        return {"label": self.label, "ainvs": list(self.ainvs), "conductor": self.N}


def parse_curve_text(text: str, label: Optional[str] = None) -> CurveData:
    """Parse "a1,a2,a3,a4,a6;N"."""
    try:
        coeffs, conductor = text.split(";")
        ainvs = [int(a) for a in coeffs.strip().strip("[]").split(",")]
        N = int(conductor)
    except ValueError as e:
        raise CurveInputError(f"cannot parse curve {text!r}; expected 'a1,a2,a3,a4,a6;N'") from e
    if len(ainvs) != 5:
        raise CurveInputError(f"{text!r}: expected five a-invariants, got {len(ainvs)}")
    return CurveData(*ainvs, N=N, label=label)
