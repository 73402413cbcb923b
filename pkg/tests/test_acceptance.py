"""The eleven acceptance criteria, one result per criterion and corpus pair.

Run under pytest for the per-pair tests and a closing summary, or directly
(``python tests/test_acceptance.py [--quick]``) for the summary lines alone.
"""
from __future__ import annotations

import sys
import time
from collections import Counter
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from acceptance_log import record, summary_lines  # noqa: E402

from qgroupoid import corpus  # noqa: E402
from qgroupoid.cli import main as cli_main  # noqa: E402
from qgroupoid.double_groupoid import DoubleGroupoid  # noqa: E402
from qgroupoid.io import dumps  # noqa: E402
from qgroupoid.matched_pair import (verify_action_conjugacy, verify_action_tables,  # noqa: E402
                                    verify_cocycles)
from qgroupoid.presentation import build_presented, verify_sigma, verify_sigma_conjugacy  # noqa: E402
from qgroupoid.quantum_groupoid.duality import (build_pairing, verify_duality,  # noqa: E402
                                                verify_pairing_matrix)
from qgroupoid.quantum_groupoid.groupoid_examples import (degeneration_report,  # noqa: E402
                                                          groupoid_function_wha,
                                                          groupoid_of_squares,
                                                          groupoid_regular_wha)
from qgroupoid.quantum_groupoid.weak_hopf import (verify_cartan, verify_weak_hopf,  # noqa: E402
                                                  verify_weak_kac)
from qgroupoid.report import Report  # noqa: E402
from qgroupoid.suite import build_all, crossed_product_report, presented_report  # noqa: E402

ALL = corpus.NAMES
WITH_ALTERNATIVES = ("b", "e")
CROSSED = ("a", "b") + corpus.DEGENERATE + ("e",)
FIXTURES = ("a", "b")


@lru_cache(maxsize=None)
def built(name: str):
    return build_all(corpus.pair(name))


def _failed(rep: Report) -> str:
    return "; ".join(c.name for c in rep.failures()[:3])


# -- one function per criterion, each returning (passed, note) -------------------

def counts(name: str):
    t0 = time.perf_counter()
    P = corpus.pair(name)
    notes = []
    ok = True
    for variant in ("T", "T'"):
        D = DoubleGroupoid(P, variant)
        corner = Counter((s.a, s.b) for s in D.squares)
        ok &= len(D) == P.H.order * P.K.order * P.S.order
        ok &= set(corner.values()) == {P.S.order} and len(corner) == D.X.order * D.Y.order
        notes.append(f"|{variant}|={len(D)}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    return ok, " ".join(notes) + f", {elapsed:.2f}s"


def weak_hopf(name: str):
    B = built(name)
    rep = Report()
    rep.extend(verify_weak_hopf(B.CT), "CT: ")
    rep.extend(verify_weak_hopf(B.CTp), "CT': ")
    return rep.ok, _failed(rep) or f"dim {B.CT.dim}"


def involutive(name: str):
    B = built(name)
    rep = verify_weak_kac(B.CT)
    return rep.ok, _failed(rep)


def cartan(name: str):
    B = built(name)
    S = B.pair.S
    rep = verify_cartan(B.CT, S.order, S.is_abelian())
    note = rep["A_t commutative iff S abelian"].detail
    return rep.ok, _failed(rep) or note


def duality(name: str):
    B = built(name)
    D = build_pairing(B.pair, B.CT, B.CTp, B.T)
    rep = verify_duality(D)
    rep.extend(verify_pairing_matrix(B.pair, D, B.T))
    return rep.ok, _failed(rep)


def isomorphisms(name: str):
    B = built(name)
    rep = Report()
    rep.extend(presented_report(B, "HK"), "HK: ")
    rep.extend(presented_report(B, "KH"), "KH: ")
    return rep.ok, _failed(rep)


def cocycles_and_actions(name: str):
    P = corpus.pair(name)
    rep = verify_action_tables(P)
    rep.extend(verify_cocycles(P))
    rep.extend(verify_sigma(build_presented(P)))
    note = ""
    if name in WITH_ALTERNATIVES:
        alt = corpus.alternative_I(name)
        ok_distinct = tuple(sorted(alt)) != tuple(sorted(P.I))
        rep.add("two distinct representative sets", ok_distinct, (P.I, alt))
        rep.extend(verify_action_conjugacy(P, P.I, alt))
        rep.extend(verify_sigma_conjugacy(P, P.I, alt))
        note = "with a second representative set"
    return rep.ok, _failed(rep) or note


def crossed(name: str):
    t0 = time.perf_counter()
    rep = crossed_product_report(built(name))
    elapsed = time.perf_counter() - t0
    ok = rep.ok and (name != "b" or elapsed < 300)
    if all(c.diagnostic for c in rep.checks):
        return ok, rep.checks[0].detail
    return ok, _failed(rep) or f"{rep['dimension |S|(|H||K|)^2'].detail}, {elapsed:.1f}s"


def degeneration(name: str):
    B = built(name)
    rep = degeneration_report(B.T, B.CT)
    return rep.ok, _failed(rep)


def fixtures(name: str):
    g = groupoid_of_squares(built(name).T, "h")
    rep = Report()
    rep.extend(verify_weak_hopf(groupoid_function_wha(g)), "functions: ")
    rep.extend(verify_weak_hopf(groupoid_regular_wha(g)), "groupoid algebra: ")
    return rep.ok, _failed(rep)


def determinism(name: str, workdir: Path):
    src = workdir / f"{name}.json"
    src.write_text(dumps(corpus.descriptor(name)))
    runs = []
    for k in (1, 2):
        out = workdir / f"{name}-{k}"
        code = cli_main(["build", "--input", str(src), "--out", str(out)])
        runs.append((code, {p.name: p.read_bytes() for p in sorted(out.iterdir())}))
    ok = runs[0][0] == runs[1][0] == 0 and runs[0][1] == runs[1][1] and len(runs[0][1]) == 4
    return ok, ""


CRITERIA = {
    1: (counts, ALL),
    2: (weak_hopf, ALL),
    3: (involutive, ALL),
    4: (cartan, ALL),
    5: (duality, ALL),
    6: (isomorphisms, ALL),
    7: (cocycles_and_actions, ALL),
    8: (crossed, CROSSED),
    9: (degeneration, corpus.DEGENERATE),
    10: (fixtures, FIXTURES),
    11: (determinism, ALL),
}


def _params(criterion: int):
    _, names = CRITERIA[criterion]
    return [pytest.param(criterion, n, id=f"{criterion}-{n}",
                         marks=[pytest.mark.slow] if n in corpus.LARGE else [])
            for n in names]


def _check(criterion: int, name: str, *args):
    fn, _ = CRITERIA[criterion]
    ok, note = fn(name, *args)
    record(criterion, name, ok, note)
    assert ok, f"criterion {criterion} on {name}: {note}"


@pytest.mark.parametrize("criterion,name", [p for c in range(1, 11) for p in _params(c)])
def test_criterion(criterion, name):
    _check(criterion, name)


@pytest.mark.parametrize("criterion,name", _params(11))
def test_build_is_deterministic(criterion, name, tmp_path, capsys):
    _check(criterion, name, tmp_path)


def run_all(names=None) -> int:
    import io
    import tempfile
    from contextlib import redirect_stdout

    with tempfile.TemporaryDirectory() as tmp:
        for c, (fn, pairs) in CRITERIA.items():
            for n in pairs:
                if names is not None and n not in names:
                    continue
                args = (Path(tmp),) if c == 11 else ()
                try:
                    with redirect_stdout(io.StringIO()):
                        ok, note = fn(n, *args)
                except Exception as exc:  # a crash counts as a failure
                    ok, note = False, f"{type(exc).__name__}: {exc}"
                record(c, n, ok, note)
            print(summary_lines()[c - 1], flush=True)
    return 0 if all("PASS" in line.split()[2] for line in summary_lines()) else 1


if __name__ == "__main__":
    quick = "--quick" in sys.argv
    sys.exit(run_all([n for n in ALL if n not in corpus.LARGE] if quick else None))
