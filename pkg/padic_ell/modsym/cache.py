"""
On-disk cache of normalised symbol maps.

One JSON document per (curve, sign) under `Paths().get_cache_dir()`, named
`{key}_{plus|minus}.json`. Rationals are stored as decimal "num/den" text and the body
is guarded by a sha256 checksum over its canonical serialisation.
"""

import glob
import hashlib
import json
import os
from fractions import Fraction
from typing import List, Optional

from padic_ell.curve import CurveData
from padic_ell.errors import CacheCorrupt
from padic_ell.modsym.p1 import P1List
from padic_ell.modsym.symbols import ModularSymbolMap
from padic_ell.utils.const import SCHEMA_VERSION
from padic_ell.utils.decorators.singleton import singleton
from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths


def _checksum(body: dict) -> str:
    canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def curve_key(E: CurveData) -> str:
    """File-name stem for a curve: its label, or the conductor plus a digest of the model."""
    if E.label:
        return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in E.label)
    digest = hashlib.sha256(E.to_text().encode("utf-8")).hexdigest()[:12]
    return f"N{E.N}_{digest}"


def map_to_json(m: ModularSymbolMap, E: CurveData) -> dict:
    body = {
        "schema": SCHEMA_VERSION,
        "curve": E.to_json(),
        "sign": m.sign,
        "N": m.N,
        "p1": [[x.c, x.d] for x in m.p1],
        "values": [str(v) for v in m.values],
        "scale": str(m.scale),
        "discriminant": m.discriminant,
        "check_discriminant": m.check_discriminant,
        "consistent": m.consistent,
    }
    return {"body": body, "checksum": _checksum(body)}


def map_from_json(document: dict, E: CurveData) -> ModularSymbolMap:
    """
    Raises:
        CacheCorrupt: on a checksum mismatch or a document for another curve.
    """
    body = document.get("body")
    if not isinstance(body, dict) or document.get("checksum") != _checksum(body):
        raise CacheCorrupt(f"checksum mismatch in cached symbols for {E.name}")
    if body.get("curve") != E.to_json() or body.get("N") != E.N:
        raise CacheCorrupt(f"cached symbols belong to {body.get('curve')}, not {E.name}")
    p1 = P1List(E.N)
    if [[x.c, x.d] for x in p1] != body["p1"]:
        raise CacheCorrupt(f"cached P^1 table for {E.name} does not match level {E.N}")
    return ModularSymbolMap(
        sign=body["sign"],
        N=body["N"],
        label=E.name,
        values=tuple(Fraction(v) for v in body["values"]),
        p1=p1,
        scale=Fraction(body["scale"]),
        discriminant=body["discriminant"],
        check_discriminant=body["check_discriminant"],
        consistent=body["consistent"],
    )


@singleton
class SymbolCache:
    """Load, store and list cached symbol maps."""

    def path_for(self, E: CurveData, sign: int) -> str:
        name = "plus" if sign == 1 else "minus"
        return os.path.join(Paths().get_cache_dir(), f"{curve_key(E)}_{name}.json")

    def load(self, E: CurveData, sign: int) -> Optional[ModularSymbolMap]:
        """The cached map, or None on a miss."""
        path = self.path_for(E, sign)
        if not os.path.isfile(path):
            log.debug(f"Cache miss: {path}")
            return None
        try:
            with open(path, "r", encoding="utf-8") as json_file:
                document = json.load(json_file)
        except json.JSONDecodeError as e:
            log.error(f"Unreadable cache file {path}: {e}")
            raise CacheCorrupt(f"{path} is not valid JSON") from e
        try:
            m = map_from_json(document, E)
        except CacheCorrupt:
            log.error(f"Checksum or content mismatch in {path}")
            raise
        log.debug(f"Cache hit: {path}")
        return m

    def save(self, m: ModularSymbolMap, E: CurveData) -> str:
        path = self.path_for(E, m.sign)
        with open(path, "w", encoding="utf-8") as json_file:
            json.dump(map_to_json(m, E), json_file, indent=2)
        log.info(f"Cached {m.sign_name} symbols of {E.name} at {path}")
        return path

    def entries(self) -> List[str]:
        return sorted(glob.glob(os.path.join(Paths().get_cache_dir(), "*.json")))

    def clear(self) -> int:
        removed = 0
        for path in self.entries():
            os.remove(path)
            removed += 1
        log.info(f"Removed {removed} cached symbol file(s)")
        return removed
