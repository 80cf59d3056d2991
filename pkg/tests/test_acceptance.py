"""Acceptance suite: every criterion runs exactly as stated, at exact
arithmetic (no tolerances anywhere), and prints one pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

from contextlib import contextmanager
from fractions import Fraction
from math import gcd
from time import perf_counter

import pytest

from twincover.arith import DoubledForm, constrained_cf, eval_cf, solve_bezout_neg1
from twincover.census import (
    coprime_torus_grid,
    montesinos_census,
    montesinos_oracle_check,
    tn1_montesinos_grid,
    torus_census,
    two_bridge_lift_census,
)
from twincover.classify import (
    TwinClass,
    Verdict,
    brute_force_twin_search,
    classify_montesinos,
    classify_satellite,
    classify_torus,
    decide,
    verify_twin,
)
from twincover.covers import (
    TorusExteriorDoubleCover,
    TorusKnotExterior,
    TwoBridgeExterior,
    cover_of_montesinos,
    cover_of_torus_knot,
    lift_two_bridge,
    torus_cover_from_bezout,
)
from twincover.knots import (
    MontesinosKnot,
    SatelliteTn1,
    TorusKnot,
    TwoBridge,
    canonical_torus,
    mirror,
    normalize_montesinos,
    normalize_torus,
    normalize_two_bridge,
)
from twincover.seifert import SfsInvariants, integer_part, normalize_sfs
from twincover.textio import parse_presentation, serialize_presentation


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number:>2} ({title}): FAIL")
        raise
    print(f"[acceptance] criterion {number:>2} ({title}): PASS")


@pytest.fixture(scope="module")
def torus_results():
    return [(k, classify_torus(k)) for k in coprime_torus_grid(25)]


@pytest.fixture(scope="module")
def montesinos_grid():
    return list(tn1_montesinos_grid(20, 3))


def test_criterion_01_torus_classification():
    with criterion(1, "torus classification grid p<q<=25"):
        start = perf_counter()
        results = [(k, classify_torus(k)) for k in coprime_torus_grid(25)]
        elapsed = perf_counter() - start
        expected_determined = {
            (p, q)
            for p in range(2, 25)
            for q in range(p + 1, 26)
            if gcd(p, q) == 1 and (p == 2 or (p, q) in ((3, 4), (3, 5)))
        }
        determined = {
            (k.p, k.q) for k, det in results if det.verdict is Verdict.DETERMINED
        }
        assert determined == expected_determined
        assert all(
            det.verdict in (Verdict.DETERMINED, Verdict.NOT_DETERMINED)
            for _, det in results
        )
        assert elapsed < 1.0, f"grid took {elapsed:.3f}s"


def test_criterion_02_cover_values():
    with criterion(2, "exact torus cover values"):
        cover = cover_of_torus_knot(TorusKnot(3, 5))[0]
        assert cover.fibers == ((2, 1), (3, 2), (5, 4))
        assert cover.euler == Fraction(1, 30)
        cover = cover_of_torus_knot(TorusKnot(4, 5))[0]
        assert cover.fibers == ((2, 1), (5, 1), (5, 1))
        assert cover.euler == Fraction(1, 10)
        cover = cover_of_torus_knot(TorusKnot(3, 4))[0]
        assert cover.euler == Fraction(1, 6)


def test_criterion_03_d_and_bezout_independence():
    with criterion(3, "d-independence and Bezout-representative independence"):
        for p in range(3, 25, 2):
            for q in range(p + 2, 26, 2):
                if gcd(p, q) != 1:
                    continue
                base = cover_of_torus_knot(TorusKnot(p, q))[0]
                for d in (1, 3, 5, 7):
                    assert cover_of_torus_knot(TorusKnot(p, q), d=d)[0] == base
                x, y = solve_bezout_neg1(p, q)
                for shift in (-2, -1, 1, 2):
                    fibers, euler, _ = torus_cover_from_bezout(
                        p, q, x + shift * p, y - shift * q
                    )
                    assert normalize_sfs(SfsInvariants(fibers, euler)) == base


def test_criterion_04_twin_soundness(torus_results):
    with criterion(4, "emitted torus twins share the cover"):
        checked = 0
        for k, det in torus_results:
            if det.verdict is Verdict.NOT_DETERMINED:
                assert det.twin is not None
                assert verify_twin(k, det.twin), (k, det.twin)
                checked += 1
        assert checked > 0


def test_criterion_05_iff_completeness(montesinos_grid):
    with criterion(5, "Montesinos iff-completeness vs brute force"):
        start = perf_counter()
        not_determined = determined = identified = 0
        for k in montesinos_grid:
            det = classify_montesinos(k)
            ok, found = montesinos_oracle_check(k, det)
            assert ok, (k, det.verdict, det.twin, found)
            if det.verdict is Verdict.NOT_DETERMINED:
                not_determined += 1
            elif det.evidence.identified_as is not None:
                identified += 1
            else:
                determined += 1
        elapsed = perf_counter() - start
        assert not_determined > 0 and determined > 0 and identified > 0
        assert elapsed < 60.0, f"grid of {len(montesinos_grid)} took {elapsed:.1f}s"


def test_criterion_06_specific_twin_triples():
    with criterion(6, "specific twin triples"):
        triples = [
            (MontesinosKnot(1, ((2, 1), (3, 1), (7, 1))), TorusKnot(3, 7)),
            (MontesinosKnot(1, ((2, 1), (5, 1), (5, 1))), TorusKnot(4, 5)),
            (MontesinosKnot(1, ((3, 1), (3, 1), (4, 1))), TorusKnot(3, 8)),
        ]
        for k, twin in triples:
            det = classify_montesinos(k)
            assert det.verdict is Verdict.NOT_DETERMINED
            assert canonical_torus(det.twin) == twin
            assert verify_twin(k, twin)
            found = brute_force_twin_search(k, 4 * k.tangles[1][0] * k.tangles[2][0])
            assert found is not None
            assert normalize_torus(found)[0] == normalize_torus(twin)[0]


def test_criterion_07_degenerate_identifications():
    with criterion(7, "degenerate torus identifications"):
        for presentation, torus in [
            (MontesinosKnot(0, ((2, 1), (3, -1), (5, -1))), TorusKnot(3, 5)),
            (MontesinosKnot(2, ((2, 1), (3, 2), (5, 4))), TorusKnot(3, 5)),
            (MontesinosKnot(0, ((2, 1), (3, -1), (3, -1))), TorusKnot(3, 4)),
            (MontesinosKnot(2, ((2, 1), (3, 2), (3, 2))), TorusKnot(3, 4)),
        ]:
            for k, expect in (
                (presentation, torus),
                (mirror(presentation), TorusKnot(torus.p, -torus.q)),
            ):
                det = classify_montesinos(k)
                assert det.verdict is Verdict.DETERMINED, (k, det)
                assert det.evidence.identified_as == expect, (k, det)


def test_criterion_08_two_bridge_lift_suite():
    with criterion(8, "2-bridge lift suite alpha<=50"):
        for alpha in range(2, 51):
            for beta in range(1, 2 * alpha):
                if gcd(beta, 2 * alpha) != 1:
                    continue
                frac = Fraction(beta, 2 * alpha)
                cf = constrained_cf(frac)
                assert eval_cf(cf) == frac
                lifted_value = eval_cf(cf.with_doubling(DoubledForm.EVEN))
                assert (lifted_value - Fraction(beta, alpha)) % 1 == 0
                res = lift_two_bridge(TwoBridge(2 * alpha, beta))
                assert res.lifted == normalize_two_bridge(
                    TwoBridge(alpha, beta % alpha)
                )
                assert (res.components == 1) == (alpha % 2 == 1)
                assert res.linking_parity == alpha % 2
                r = beta % alpha
                assert res.hyperbolic == (r != 1 % alpha and r != (-1) % alpha)


def test_criterion_09_invariant_sweeps(torus_results, montesinos_grid):
    with criterion(9, "integrality, mirror equivariance, round trips"):
        # integrality of every cover produced on the grids, including twins
        for k, det in torus_results:
            integer_part(det.evidence.cover)
            if det.twin is not None:
                integer_part(cover_of_montesinos(det.twin))
        for k in montesinos_grid:
            integer_part(cover_of_montesinos(k))

        # mirror equivariance of decide
        for k, det in torus_results:
            det_m = decide(mirror(k))
            assert det_m.verdict == det.verdict
            if det.twin is not None:
                assert det_m.twin == normalize_montesinos(mirror(det.twin))
        for k in montesinos_grid:
            det = decide(k)
            det_m = decide(mirror(k))
            assert det_m.verdict == det.verdict
            if det.twin is not None:
                assert canonical_torus(det_m.twin) == canonical_torus(mirror(det.twin))

        # serialization round trip on all census rows
        for header, rows in (
            torus_census(25, verify=False),
            montesinos_census(10, 2, verify=False),
            two_bridge_lift_census(20),
        ):
            for row in rows:
                text = row["presentation"]
                assert serialize_presentation(parse_presentation(text)) == text
                for extra in ("twin", "lifted"):
                    if row.get(extra):
                        reparsed = parse_presentation(row[extra])
                        assert serialize_presentation(reparsed) == row[extra]


def test_criterion_10_satellite_verdicts():
    with criterion(10, "satellite verdicts and JSJ case analysis"):
        companions = [
            TorusKnot(p, q)
            for p in range(2, 7)
            for q in range(p + 1, 8)
            if gcd(p, q) == 1
        ]
        count = 0
        for two_alpha in range(4, 21, 2):
            for beta in range(1, two_alpha):
                if gcd(beta, two_alpha) != 1:
                    continue
                for companion in companions:
                    k = SatelliteTn1(TwoBridge(two_alpha, beta), companion)
                    det = classify_satellite(k)
                    assert det.verdict is Verdict.NOT_DETERMINED
                    assert det.twin_class is TwinClass.CONWAY_REDUCIBLE_HYPERBOLIC
                    assert det.evidence.no_tn1_twins
                    graph = det.evidence.jsj
                    assert len(graph.pieces) in (1, 2, 3)
                    half = two_alpha // 2
                    if half % 2 == 1:
                        assert len(graph.pieces) == 2
                        assert isinstance(graph.pieces[0], TwoBridgeExterior)
                        assert isinstance(graph.pieces[1], TorusExteriorDoubleCover)
                        assert graph.edges == ((0, 1),)
                    elif half == 2:
                        assert len(graph.pieces) == 2
                        assert all(
                            isinstance(p, TorusKnotExterior) for p in graph.pieces
                        )
                        assert graph.edges == ((0, 1),)
                    else:
                        assert len(graph.pieces) == 3
                        assert isinstance(graph.pieces[0], TwoBridgeExterior)
                        assert all(
                            isinstance(p, TorusKnotExterior)
                            for p in graph.pieces[1:]
                        )
                        assert graph.edges == ((0, 1), (0, 2))
                    count += 1
        assert count > 0
