"""
The bundled curve table.

`CurveTable` reads `data/curves.yaml` once into a pandas DataFrame indexed by label.
Extra YAML files with the same layout can be merged in with `extend`.
"""

import os
from typing import List, Optional

import pandas as pd
import yaml

from padic_ell.curve.model import CurveData, parse_curve_text
from padic_ell.errors import CurveInputError
from padic_ell.utils.decorators.singleton import singleton
from padic_ell.utils.log import log
from padic_ell.utils.paths import Paths

COLUMNS = ["label", "ainvs", "conductor", "rank"]


def _read_yaml(path: str) -> pd.DataFrame:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    entries = data.get("curves", [])
    for entry in entries:
        missing = {"label", "ainvs", "conductor"} - set(entry)
        if missing:
            raise CurveInputError(f"{path}: entry {entry} lacks {sorted(missing)}")
    frame = pd.DataFrame(entries, columns=COLUMNS)
    return frame.set_index("label", drop=False)


@singleton
class CurveTable:
    """Label lookup for named curves."""

    def __init__(self):
        path = Paths().get_curve_table_path()
        self.df = _read_yaml(path)
        log.debug(f"Loaded {len(self.df)} curves from {path}")

    def extend(self, path: str) -> None:
        """Merge another curve file; later entries win on duplicate labels."""
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Curve table not found: {path}")
        extra = _read_yaml(path)
        merged = pd.concat([self.df, extra])
        self.df = merged[~merged.index.duplicated(keep="last")]
        log.info(f"Curve table now has {len(self.df)} entries")

    def labels(self) -> List[str]:
        return list(self.df.index)

    def get(self, label: str) -> CurveData:
        if label not in self.df.index:
            raise CurveInputError(f"unknown curve label {label!r}; known: {', '.join(self.labels())}")
        row = self.df.loc[label]
        ainvs = [int(a) for a in row["ainvs"]]
        return CurveData(*ainvs, N=int(row["conductor"]), label=label)

    def as_frame(self) -> pd.DataFrame:
        return self.df.reset_index(drop=True)


def get_curve(spec: str, label: Optional[str] = None) -> CurveData:
    """A curve from either a table label or the text form "a1,a2,a3,a4,a6;N"."""
    spec = spec.strip()
    if ";" in spec:
        return parse_curve_text(spec, label=label)
    return CurveTable().get(spec)
