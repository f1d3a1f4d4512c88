"""Acceptance suite.

One test per shipping criterion; each prints an ``acceptance N: PASS``
line (run with ``pytest -s`` to see them).  The two heavyweight sweeps
are session fixtures so several criteria can read one computation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from takegrant import (
    Direction,
    ProtectionGraph,
    RandomGraphSpec,
    Right,
    VertexKind,
    bridge_exists,
    bridge_exists_faithful,
    brute_force_bridge,
    compute_islands,
    enumerate_t_arc_graphs,
    parse_graph,
    random_graph,
    serialize_graph,
    traversal_set,
)

from helpers import (
    LENGTH2_BRIDGE_TGG,
    chain_graph,
    copy_without_arc,
    naive_island_partition,
)

BOTH = (Direction.FORWARD, Direction.BACKWARD)


def _report_line(number: int, ok: bool, detail: str) -> None:
    print(f"acceptance {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number} failed: {detail}"


@dataclass
class SweepStats:
    trials: int = 0
    forward_agree: int = 0
    backward_agree: int = 0
    faithful_mismatches: int = 0
    duality_mismatches: int = 0
    bound_violations: int = 0
    elapsed: float = 0.0


def _audit_graph(g: ProtectionGraph, s: int, f: int, stats: SweepStats) -> None:
    """Run every cross-check for one (graph, endpoints) case."""
    stats.trials += 1
    reversed_g = g.reverse()
    bound = len(traversal_set(g, s, f)) + 1
    for direction in BOTH:
        fast = bridge_exists(g, s, f, direction)
        slow = bridge_exists_faithful(g, s, f, direction)
        witness = brute_force_bridge(g, s, f, direction)
        if fast != slow:
            stats.faithful_mismatches += 1
        if fast.passes > bound or slow.passes > bound:
            stats.bound_violations += 1
        agrees = fast.exists == (witness is not None)
        if direction is Direction.FORWARD:
            stats.forward_agree += agrees
        else:
            stats.backward_agree += agrees
            mirrored = bridge_exists(reversed_g, s, f, Direction.FORWARD)
            if (
                fast.exists != mirrored.exists
                or fast.passes != mirrored.passes
                or fast.frontier_trace != mirrored.frontier_trace
            ):
                stats.duality_mismatches += 1


@pytest.fixture(scope="session")
def exhaustive_sweep() -> SweepStats:
    """Every t-arc pattern over s, f and two objects: 4096 graphs."""
    vertices = [
        ("s", VertexKind.SUBJECT),
        ("f", VertexKind.SUBJECT),
        ("o0", VertexKind.OBJECT),
        ("o1", VertexKind.OBJECT),
    ]
    stats = SweepStats()
    start = time.perf_counter()
    for g in enumerate_t_arc_graphs(vertices):
        _audit_graph(g, 0, 1, stats)
    stats.elapsed = time.perf_counter() - start
    return stats


RANDOM_SWEEP_SIZES = range(3, 13)
RANDOM_SWEEP_PROBABILITIES = (0.1, 0.3, 0.5)
RANDOM_SWEEP_TRIALS_PER_COMBO = 334  # 10 sizes x 3 densities x 334 = 10,020
RANDOM_SWEEP_SEED_BASE = 20_000


@pytest.fixture(scope="session")
def random_sweep() -> SweepStats:
    """10,020 seeded random graphs between 3 and 12 vertices."""
    stats = SweepStats()
    seed = RANDOM_SWEEP_SEED_BASE
    start = time.perf_counter()
    for n in RANDOM_SWEEP_SIZES:
        for p in RANDOM_SWEEP_PROBABILITIES:
            for _ in range(RANDOM_SWEEP_TRIALS_PER_COMBO):
                seed += 1
                g = random_graph(RandomGraphSpec(2, n - 2, p, frozenset({Right.T}), seed))
                _audit_graph(g, 0, 1, stats)
    stats.elapsed = time.perf_counter() - start
    return stats


def test_criterion_1_length2_walkthrough():
    g = parse_graph(LENGTH2_BRIDGE_TGG)
    s, f = g.vertex_id("s"), g.vertex_id("f")
    report = bridge_exists(g, s, f)
    names = tuple(g.vertex_name(v) for v in report.path.vertices)
    best = min(
        _timed(lambda: bridge_exists(g, s, f))
        for _ in range(5)
    )
    ok = (
        report.exists
        and names == ("s", "x", "f")
        and report.path.length == 2
        and report.passes == 2
        and report.frontier_trace == ((1, (1,)), (2, (2,)))
        and best < 1e-3
    )
    _report_line(1, ok, f"path {'->'.join(names)}, passes {report.passes}, query {best * 1e6:.0f} us")


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def test_criterion_2_exhaustive_oracle_equivalence(exhaustive_sweep):
    st = exhaustive_sweep
    ok = (
        st.trials == 4096
        and st.forward_agree == 4096
        and st.backward_agree == 4096
        and st.faithful_mismatches == 0
        and st.elapsed < 10.0
    )
    _report_line(
        2,
        ok,
        f"forward {st.forward_agree}/4096, backward {st.backward_agree}/4096, "
        f"{st.elapsed:.2f} s",
    )


def test_criterion_3_randomized_oracle_equivalence(random_sweep):
    st = random_sweep
    ok = (
        st.trials >= 10_000
        and st.forward_agree == st.trials
        and st.backward_agree == st.trials
        and st.faithful_mismatches == 0
        and st.elapsed < 60.0
    )
    _report_line(
        3,
        ok,
        f"{st.trials} trials, agree fwd {st.forward_agree} / bwd {st.backward_agree}, "
        f"faithful mismatches {st.faithful_mismatches}, {st.elapsed:.1f} s",
    )


def test_criterion_4_termination_bound(exhaustive_sweep, random_sweep):
    violations = exhaustive_sweep.bound_violations + random_sweep.bound_violations
    # Chains exercise the deepest pass counts this suite produces.
    for length in range(2, 65):
        g, s, f, _ = chain_graph(length)
        report = bridge_exists(g, s, f)
        if report.passes > len(traversal_set(g, s, f)) + 1:
            violations += 1
    checked = exhaustive_sweep.trials + random_sweep.trials + 63
    _report_line(4, violations == 0, f"0 violations over {checked} cases" if violations == 0 else f"{violations} violations")


def test_criterion_5_chain_induction_family():
    start = time.perf_counter()
    positives = 0
    negatives = 0
    ok = True
    for length in range(2, 65):
        g, s, f, arcs = chain_graph(length)
        report = bridge_exists(g, s, f)
        if not (report.exists and report.path.length == length):
            ok = False
        positives += 1
        for arc in arcs:
            if bridge_exists(copy_without_arc(g, arc), s, f).exists:
                ok = False
            negatives += 1
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    _report_line(5, ok, f"{positives} chains, {negatives} broken-arc cases, {elapsed:.2f} s")


def test_criterion_6_duality(exhaustive_sweep, random_sweep):
    mismatches = exhaustive_sweep.duality_mismatches + random_sweep.duality_mismatches
    graphs = exhaustive_sweep.trials + random_sweep.trials
    _report_line(6, mismatches == 0, f"{mismatches} mismatches over {graphs} graphs")


def test_criterion_7_islands_oracle():
    mismatches = 0
    graphs = 0
    start = time.perf_counter()
    seed = 50_000
    pool = frozenset(Right)
    for round_ in range(88):  # 88 rounds x 12 sizes = 1,056 graphs
        for subjects in range(1, 13):
            seed += 1
            p = RANDOM_SWEEP_PROBABILITIES[graphs % 3]
            g = random_graph(RandomGraphSpec(subjects, (graphs % 4), p, pool, seed))
            graphs += 1
            if [i.members for i in compute_islands(g)] != naive_island_partition(g):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and graphs >= 1000 and elapsed < 10.0
    _report_line(7, ok, f"{graphs} graphs, {mismatches} mismatches, {elapsed:.2f} s")


def test_criterion_8_scale_smoke():
    g = random_graph(RandomGraphSpec(2, 1998, 0.05, frozenset({Right.T}), seed=42))
    arcs = g.edge_count
    t0 = time.perf_counter()
    fast = bridge_exists(g, 0, 1)
    fast_elapsed = time.perf_counter() - t0
    t0 = time.perf_counter()
    slow = bridge_exists_faithful(g, 0, 1)
    slow_elapsed = time.perf_counter() - t0
    ok = (
        185_000 <= arcs <= 215_000
        and fast == slow
        and fast_elapsed < 1.0
        and slow_elapsed < 60.0
    )
    _report_line(
        8,
        ok,
        f"{arcs} arcs, optimized {fast_elapsed * 1e3:.0f} ms, faithful {slow_elapsed * 1e3:.0f} ms, "
        f"reports {'equal' if fast == slow else 'DIFFER'}",
    )


def test_criterion_9_format_round_trip():
    corpora: list[ProtectionGraph] = [ProtectionGraph(), parse_graph(LENGTH2_BRIDGE_TGG)]
    three = [("s", VertexKind.SUBJECT), ("f", VertexKind.SUBJECT), ("o0", VertexKind.OBJECT)]
    corpora.extend(enumerate_t_arc_graphs(three))
    pools = [frozenset({Right.T}), frozenset({Right.T, Right.G}), frozenset(Right)]
    for i in range(200):
        spec = RandomGraphSpec(
            1 + i % 4, i % 5, RANDOM_SWEEP_PROBABILITIES[i % 3], pools[i % 3], seed=70_000 + i
        )
        corpora.append(random_graph(spec))
    violations = 0
    for g in corpora:
        text = serialize_graph(g)
        reparsed = parse_graph(text)
        if reparsed != g or serialize_graph(reparsed) != text:
            violations += 1
    _report_line(9, violations == 0, f"{len(corpora)} graphs, {violations} violations")
