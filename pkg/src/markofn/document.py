"""JSON input documents describing a system to evaluate.

A document is one JSON object with integer fields ``n``, ``k1``, ``k2``
and exactly one component description:

  ``components``   list of n 3x3 row-major matrices
  ``homogeneous``  one 3x3 matrix shared by every component
  ``segments``     list of {"from": int, "to": int, "matrix": 3x3}
                   covering 1..n exactly once

Structural problems (wrong types, missing or duplicate fields) raise
DocumentError; probabilistic validity problems (bad rows, bad
thresholds) raise the model's own error types.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Tuple

from .model import ComponentChain, ModelError, SystemSpec, TransitionMatrix

VARIANTS = ("components", "homogeneous", "segments")


class DocumentError(ValueError):
    """The input document is structurally malformed."""


def _require_int(obj: dict, field: str) -> int:
    if field not in obj:
        raise DocumentError(f"field '{field}' is missing")
    value = obj[field]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field '{field}' must be an integer, got {value!r}")
    return value


def _matrix_at(value, where: str) -> TransitionMatrix:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: matrix must be a list of three rows")
    try:
        return TransitionMatrix(value)
    except ModelError as exc:
        raise type(exc)(f"{where}: {exc}") from None


@dataclass(frozen=True)
class SpecDocument:
    """A parsed input document, resolved to a chain and a spec."""

    chain: ComponentChain
    spec: SystemSpec

    @classmethod
    def from_dict(cls, obj) -> "SpecDocument":
        if not isinstance(obj, dict):
            raise DocumentError("document root must be a JSON object")
        n = _require_int(obj, "n")
        k1 = _require_int(obj, "k1")
        k2 = _require_int(obj, "k2")
        present = [v for v in VARIANTS if v in obj]
        if len(present) != 1:
            raise DocumentError(
                f"exactly one of {', '.join(VARIANTS)} must be present, found {present or 'none'}"
            )
        unknown = set(obj) - {"n", "k1", "k2", *VARIANTS}
        if unknown:
            raise DocumentError(f"unknown field(s): {', '.join(sorted(unknown))}")
        variant = present[0]
        body = obj[variant]

        if variant == "components":
            if not isinstance(body, list):
                raise DocumentError("field 'components' must be a list of matrices")
            if len(body) != n:
                raise DocumentError(
                    f"field 'components' has {len(body)} matrices but n={n}"
                )
            chain = ComponentChain(
                _matrix_at(m, f"component {i + 1}") for i, m in enumerate(body)
            )
        elif variant == "homogeneous":
            chain = ComponentChain.homogeneous(_matrix_at(body, "field 'homogeneous'"), n)
        else:
            if not isinstance(body, list):
                raise DocumentError("field 'segments' must be a list of objects")
            triples = []
            for i, seg in enumerate(body):
                if not isinstance(seg, dict) or not {"from", "to", "matrix"} <= set(seg):
                    raise DocumentError(
                        f"segment {i + 1} must be an object with 'from', 'to' and 'matrix'"
                    )
                first = seg["from"]
                last = seg["to"]
                if isinstance(first, bool) or isinstance(last, bool) \
                        or not isinstance(first, int) or not isinstance(last, int):
                    raise DocumentError(f"segment {i + 1}: 'from' and 'to' must be integers")
                triples.append((first, last, _matrix_at(seg["matrix"], f"segment {i + 1}")))
            chain = ComponentChain.from_segments(triples, n)

        return cls(chain=chain, spec=SystemSpec(n=n, k1=k1, k2=k2))

    @classmethod
    def from_path(cls, path: str) -> "SpecDocument":
        try:
            with open(path, "r", encoding="utf-8") as handle:
                obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}: not valid JSON ({exc})") from None
        return cls.from_dict(obj)


def document_dict(n: int, k1: int, k2: int, chain: ComponentChain) -> dict:
    """Serializable document for a chain (explicit component list)."""
    return {
        "n": n,
        "k1": k1,
        "k2": k2,
        "components": [m.rows.tolist() for m in chain],
    }


def resolve(path: str) -> Tuple[ComponentChain, SystemSpec]:
    doc = SpecDocument.from_path(path)
    return doc.chain, doc.spec
