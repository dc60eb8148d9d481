"""Reduction of operations of higher arity to binary projections.

An operation U of arity a yields one binary operation for each way of keeping
two argument slots free and filling the other a - 2 with the constant ``c``:
``U(c^i, x, c^j, x, c^k)`` with i + j + k = a - 2, C(a, 2) of them in all.
"""
from __future__ import annotations

import json
import string
from dataclasses import dataclass
from typing import Iterable, Optional

from .terms import CONSTANT, RESERVED, VARIABLE, Signature, SignatureError, compositions, make_signature

DEFAULT_SYMBOL_POOL = "".join(ch for ch in string.ascii_lowercase if ch not in RESERVED) + string.digits


@dataclass(frozen=True)
class ProjectionSpec:
    source: int
    prefix: int
    middle: int
    suffix: int
    derived_symbol: Optional[str] = None

    @property
    def ijk(self) -> tuple[int, int, int]:
        return (self.prefix, self.middle, self.suffix)


def binary_projections(sig: Signature, op: int) -> list[ProjectionSpec]:
    """All (i, j, k) with i + j + k = arity - 2, prefix length i descending, then j descending."""
    arity = sig.ops[op].arity
    if arity < 2:
        raise SignatureError(f"operation {sig.ops[op].symbol!r} has arity {arity} < 2; no binary projection")
    return [ProjectionSpec(op, i, j, k) for i, j, k in sorted(compositions(arity - 2, 3), reverse=True)]


def render_projection(spec: ProjectionSpec, sig: Signature) -> str:
    """Word of the projection, e.g. ``"Ucxx"`` for (1, 0, 0) of a ternary U."""
    return (
        sig.ops[spec.source].symbol
        + CONSTANT * spec.prefix
        + VARIABLE
        + CONSTANT * spec.middle
        + VARIABLE
        + CONSTANT * spec.suffix
    )


def project_signature(sig: Signature, pool: Iterable[str] = DEFAULT_SYMBOL_POOL) -> tuple[Signature, dict]:
    """Binary signature made of every projection of every operation.

    Binary operations project to themselves and keep their symbol; every
    other projection takes the next unused symbol from ``pool``.  Returns the
    projected signature and a mapping derived symbol -> :class:`ProjectionSpec`.
    """
    taken = set(sig.symbols)
    fresh = (s for s in pool if s not in taken and s not in RESERVED)
    specs: list[tuple[str, int]] = []
    provenance: dict[str, ProjectionSpec] = {}
    for index, op in enumerate(sig.ops):
        for spec in binary_projections(sig, index):
            if op.arity == 2:
                symbol = op.symbol
            else:
                try:
                    symbol = next(fresh)
                except StopIteration:
                    raise SignatureError("ran out of fresh symbols for projected operations") from None
            provenance[symbol] = ProjectionSpec(index, *spec.ijk, derived_symbol=symbol)
            specs.append((symbol, 2))
    return make_signature(specs), provenance


def provenance_to_list(provenance: dict, sig: Signature) -> list[dict]:
    return [
        {
            "derived": symbol,
            "source": sig.ops[spec.source].symbol,
            "ijk": list(spec.ijk),
            "definition": render_projection(spec, sig),
        }
        for symbol, spec in provenance.items()
    ]


def provenance_to_json(provenance: dict, sig: Signature) -> str:
    return json.dumps(provenance_to_list(provenance, sig))
