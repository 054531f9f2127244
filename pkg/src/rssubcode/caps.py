"""Enumeration and size caps.

Defaults can be raised through the ``CODE_DESIGNER_CAPS`` environment
variable, e.g. ``CODE_DESIGNER_CAPS="subset_k=28,distance_log2=30"``.
"""

import os
from dataclasses import dataclass, fields, replace


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    max_prime: int = 2**20
    max_degree: int = 16
    subset_k: int = 24          # brute-force subset enumeration over [k]
    distance_log2: int = 26     # q**k limit for brute-force minimum distance
    enum_k: int = 4             # exhaustive GeneralInstance enumeration
    enum_n: int = 4


def load_caps(spec=None):
    spec = os.environ.get("CODE_DESIGNER_CAPS", "") if spec is None else spec
    caps = Caps()
    names = {f.name for f in fields(Caps)}
    for item in filter(None, (s.strip() for s in spec.split(","))):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in names:
            raise ValueError(f"unknown cap {key!r} in CODE_DESIGNER_CAPS")
        caps = replace(caps, **{key: int(value)})
    return caps


CAPS = load_caps()
