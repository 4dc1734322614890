from __future__ import annotations

import re
from typing import Optional

from ..algebra.field import PrimeField
from ..algebra.polymat import IndexTuple
from ..core.errors import InvalidIndexTuple, ValidationError

def validate_modulus(p: int) -> PrimeField:
    """PrimeField for p; NotPrime propagates."""
    return PrimeField(p)

def parse_indices(text: str) -> IndexTuple:
    """``0,2,5`` or ``0 2 5`` to an IndexTuple."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise InvalidIndexTuple("empty index list")
    try:
        return IndexTuple(tuple(int(t) for t in tokens))
    except ValueError:
        raise InvalidIndexTuple("indices must be integers", details={"text": text})

def resolve_indices(n: int, m: Optional[int] = None, indices: Optional[str] = None) -> IndexTuple:
    """J from either --m (leading tuple) or --indices, checked against n."""
    if m is not None and indices is not None:
        raise ValidationError("give either m or indices, not both", details={"m": m, "indices": indices})
    if indices is not None:
        J = parse_indices(indices)
    else:
        J = IndexTuple.leading(1 if m is None else m)
    J.validate_for(n)
    return J

def validate_bounds(D: int, Da: int) -> None:
    if D < 0 or Da < 0:
        raise ValidationError("degree bounds must be nonnegative", details={"D": D, "Da": Da})
