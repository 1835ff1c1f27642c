"""Base change to abelian fields disjoint from the cyclotomic Z_p-extension."""

from .group import AbelianFieldSpec, build_group, conductor_lcm, parse_field
from .product import BaseChangeSeries, lp_basechange, sign_of, verify_generalisations

__all__ = [
    # Classes
    "AbelianFieldSpec",
    "BaseChangeSeries",

    # Functions
    "build_group",
    "conductor_lcm",
    "lp_basechange",
    "parse_field",
    "sign_of",
    "verify_generalisations",
]
