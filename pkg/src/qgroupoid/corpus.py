"""Named pairs used throughout the tests, demos and CLI examples.

Each pair is stored as a JSON-ready descriptor so that the library and the
command line build it the same way.
"""
from __future__ import annotations

from .groups import symmetric_group
from .io import GroupInput, pair_descriptor, parse_group, parse_pair
from .matched_pair import RelativeMatchedPair, frattini_pair

S3 = {"degree": 3, "generators": [[[1, 2]], [[1, 2, 3]]]}
S4 = {"degree": 4, "generators": [[[1, 2]], [[1, 2, 3, 4]]]}
Z2 = {"order": 2, "table": [[0, 1], [1, 0]]}
# S3 x S3 acting on {1,2,3} and {4,5,6}
S3xS3 = {"degree": 6, "generators": [[[1, 2]], [[1, 2, 3]], [[4, 5]], [[4, 5, 6]]]}
A4_GENS = [[[1, 2, 3]], [[1, 2], [3, 4]]]


def _frattini(p: int) -> dict:
    g = parse_group(S4)
    N = g.subgroup(A4_GENS)
    pair = frattini_pair(g.group, N, p)
    return pair_descriptor(g, pair.H, pair.K)


DESCRIPTORS: dict[str, dict] = {
    "a": {"group": S3, "H_gens": [[[1, 2]]], "K_gens": [[[1, 2, 3]]]},
    "b": {"group": S3, "H_gens": S3["generators"], "K_gens": [[[1, 2]]]},
    "d-e-Z2": {"group": Z2, "H_gens": [], "K_gens": [1]},
    "d-Z2-e": {"group": Z2, "H_gens": [1], "K_gens": []},
    "d-e-S3": {"group": S3, "H_gens": [], "K_gens": S3["generators"]},
    "d-S3-e": {"group": S3, "H_gens": S3["generators"], "K_gens": []},
    "e": {"group": S3xS3, "H_gens": [[[1, 2]], [[1, 2, 3]], [[4, 5]]],
          "K_gens": [[[1, 2]], [[1, 2, 3]], [[4, 5, 6]]]},
}

#: pairs whose structures have dimension above a few hundred
LARGE = ("c-p2", "e")

NAMES = ("a", "b", "c-p2", "c-p3", "d-e-Z2", "d-Z2-e", "d-e-S3", "d-S3-e", "e")
SMALL = tuple(n for n in NAMES if n not in LARGE)
DEGENERATE = ("d-e-Z2", "d-Z2-e", "d-e-S3", "d-S3-e")


def descriptor(name: str) -> dict:
    if name in DESCRIPTORS:
        return DESCRIPTORS[name]
    if name in ("c-p2", "c-p3"):
        return _frattini(int(name[-1]))
    raise KeyError(f"unknown corpus pair {name!r}; known: {', '.join(NAMES)}")


def load(name: str, I=None, J=None) -> tuple[GroupInput, RelativeMatchedPair]:
    return parse_pair(descriptor(name), I=I, J=J)


def pair(name: str, I=None, J=None) -> RelativeMatchedPair:
    return load(name, I, J)[1]


def alternative_I(name: str) -> list[int]:
    """A second representative set for ``K``: the largest id in each coset
    ``kS``.  When ``K = S`` this moves the representative of ``S`` itself
    off the identity."""
    P = pair(name)
    return sorted(max(b) for b in P.K_cosets.blocks)


def s3() -> GroupInput:
    """``S_3`` as a permutation group, with ids in sorted tuple order."""
    P = symmetric_group(3)
    return GroupInput(P.group, P, S3)
