"""JSON formats for groups, pairs and structure constants.

Rationals are written as ``"num/den"`` strings.  Every writer sorts its
entries, so equal structures serialize to identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .double_groupoid import DoubleGroupoid
from .groups import (MAX_ORDER, FiniteGroup, Subgroup, group_from_generators, group_from_table,
                     perm_from_cycles, subgroup_generated)
from .linalg import fmt, q
from .matched_pair import RelativeMatchedPair
from .quantum_groupoid.duality import DualityPairing
from .quantum_groupoid.weak_hopf import WeakHopfAlgebra
from .star_algebra import StarAlgebra


class InputError(ValueError):
    """Malformed or inconsistent input data."""


# -- groups and pairs ------------------------------------------------------------

class GroupInput:
    """A parsed group plus the means to read element references.

    An element reference is an id (int) or, for permutation groups, a list
    of 1-based cycles.
    """

    def __init__(self, group: FiniteGroup, perm=None, source: Mapping | None = None):
        self.group = group
        self.perm = perm
        self.source = dict(source) if source is not None else {}

    def element(self, ref) -> int:
        if isinstance(ref, bool):
            raise InputError(f"bad element reference {ref!r}")
        if isinstance(ref, int):
            if not 0 <= ref < self.group.order:
                raise InputError(f"element id {ref} out of range")
            return ref
        if isinstance(ref, list) and self.perm is not None:
            try:
                return self.perm.id_of(perm_from_cycles(ref, self.perm.degree))
            except (KeyError, ValueError) as exc:
                raise InputError(f"cycles {ref!r} are not in the group") from exc
        raise InputError(f"bad element reference {ref!r}")

    def subgroup(self, gens: Sequence) -> Subgroup:
        return subgroup_generated(self.group, [self.element(g) for g in gens])


def parse_group(obj: Mapping, max_order: int | None = None) -> GroupInput:
    """``{"order": n, "table": [[...]]}`` or ``{"degree": d, "generators": [cycles, ...]}``."""
    limit = MAX_ORDER if max_order is None else max_order
    if not isinstance(obj, Mapping):
        raise InputError("group must be a JSON object")
    if "table" in obj:
        table = obj["table"]
        if "order" in obj and obj["order"] != len(table):
            raise InputError(f"order {obj['order']} does not match the table size {len(table)}")
        if not all(isinstance(r, list) and all(isinstance(x, int) and 0 <= x < len(table) for x in r)
                   for r in table):
            raise InputError("table entries must be ids in range")
        return GroupInput(group_from_table(table, obj.get("names", ()), max_order=limit), None, obj)
    if "generators" in obj:
        degree = obj.get("degree")
        if not isinstance(degree, int) or degree < 1:
            raise InputError("permutation input needs a positive integer degree")
        try:
            P = group_from_generators(obj["generators"], degree, max_order=limit)
        except (TypeError, IndexError) as exc:
            raise InputError(f"bad generators: {exc}") from exc
        return GroupInput(P.group, P, obj)
    raise InputError("group needs either 'table' or 'generators'")


def parse_pair(obj: Mapping, max_order: int | None = None,
               I: Sequence | None = None, J: Sequence | None = None) -> tuple[GroupInput, RelativeMatchedPair]:
    """``{"group": ..., "H_gens": [...], "K_gens": [...], "I": [...], "J": [...]}``.

    ``I`` and ``J`` passed here override those in the file."""
    if not isinstance(obj, Mapping) or "group" not in obj:
        raise InputError("pair descriptor needs a 'group'")
    g = parse_group(obj["group"], max_order)
    H = g.subgroup(obj.get("H_gens", []))
    K = g.subgroup(obj.get("K_gens", []))
    I = I if I is not None else obj.get("I")
    J = J if J is not None else obj.get("J")
    I = None if I is None else [g.element(x) for x in I]
    J = None if J is None else [g.element(x) for x in J]
    return g, RelativeMatchedPair(g.group, H, K, I, J)


def pair_descriptor(g: GroupInput, H: Subgroup, K: Subgroup,
                    I: Sequence[int] | None = None, J: Sequence[int] | None = None) -> dict:
    """Descriptor naming ``H`` and ``K`` by their full element lists."""
    d: dict[str, Any] = {"group": g.source or group_json(g.group),
                         "H_gens": list(H.elements), "K_gens": list(K.elements)}
    if I is not None:
        d["I"] = list(I)
    if J is not None:
        d["J"] = list(J)
    return d


def group_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": [list(r) for r in G.table]}


# -- structure constants -----------------------------------------------------------

def _dense(v: Mapping, n: int) -> list[str]:
    return [fmt(v.get(i, 0)) for i in range(n)]


def _rows(vs: Sequence[Mapping]) -> list[list]:
    return [[i, j, fmt(c)] for i, v in enumerate(vs) for j, c in sorted(v.items())]


def algebra_json(A: StarAlgebra) -> dict:
    mult = [[i, j, k, fmt(c)] for i, j, v in A.nonzero_pairs() for k, c in sorted(v.items())]
    mult.sort(key=lambda r: r[:3])
    return {"dim": A.dim, "labels": list(A.labels), "unit": _dense(A.unit, A.dim),
            "mult": mult, "star": _rows(A.star)}


def weak_hopf_json(W: WeakHopfAlgebra) -> dict:
    d = algebra_json(W.algebra)
    d["coproduct"] = [[i, j, k, fmt(c)] for i, cop in enumerate(W.coproduct)
                      for (j, k), c in sorted(cop.items())]
    d["counit"] = [fmt(c) for c in W.counit]
    d["antipode"] = _rows(W.antipode)
    return d


def pairing_json(P: DualityPairing) -> dict:
    return {"rows": P.left.dim, "cols": P.right.dim, "entries": _rows(P.matrix)}


def squares_json(D: DoubleGroupoid) -> dict:
    return {"variant": D.variant, "squares": [list(s) for s in D.squares]}


def _scalar(x) -> int | Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise InputError(f"bad rational {x!r}")
    try:
        return q(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {x!r}") from exc


def _index(i, n: int) -> int:
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n:
        raise InputError(f"basis index {i!r} out of range")
    return i


def parse_algebra(obj: Mapping) -> StarAlgebra:
    try:
        n = obj["dim"]
        mult: dict = {}
        for i, j, k, c in obj["mult"]:
            mult.setdefault((_index(i, n), _index(j, n)), {})[_index(k, n)] = _scalar(c)
        star: list[dict] = [dict() for _ in range(n)]
        for i, j, c in obj["star"]:
            star[_index(i, n)][_index(j, n)] = _scalar(c)
        unit = {i: _scalar(c) for i, c in enumerate(obj["unit"])}
        if len(obj["unit"]) != n:
            raise InputError("unit has the wrong length")
        return StarAlgebra(n, mult, unit, star, obj.get("labels"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed algebra: {exc}") from exc


def parse_weak_hopf(obj: Mapping) -> WeakHopfAlgebra:
    A = parse_algebra(obj)
    n = A.dim
    try:
        cop: list[dict] = [dict() for _ in range(n)]
        for i, j, k, c in obj["coproduct"]:
            cop[_index(i, n)][_index(j, n), _index(k, n)] = _scalar(c)
        counit = [_scalar(c) for c in obj["counit"]]
        if len(counit) != n:
            raise InputError("counit has the wrong length")
        anti: list[dict] = [dict() for _ in range(n)]
        for i, j, c in obj["antipode"]:
            anti[_index(i, n)][_index(j, n)] = _scalar(c)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed weak Hopf algebra: {exc}") from exc
    return WeakHopfAlgebra(A, cop, counit, anti)


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc

