"""Tests for abacus encoding, the runner criterion and p-cores."""

import pytest

from src.abacus import (
    black_beads_on_runner, check_bead_count, choose_bead_count, compact, core_degree,
    core_from_defects, decode, defect_degree, encode, enumerate_cores, is_p_core,
    orbit_equiv_abacus, p_core, parse_compact, render, runner_counts, runner_occupancy
)
from src.errors import InvalidWeightError, UnsupportedParameterError
from src.models.abacus import Abacus
from src.models.base import Context, Partition
from src.weights import conjugate, hook_length, label_partitions, partitions_of
from src.weyl import orbit_member_affine


def P(*parts):
    return Partition(tuple(parts))


def _hooks(lam):
    return [
        hook_length(lam, row, column)
        for row, part in enumerate(lam.parts, start=1)
        for column in range(1, part + 1)
    ]


def _core_by_hook_removal(lam, p):
    """Remove p-hooks one at a time: a bead at x moves to an empty x - p."""
    beads = {part + lam.length - i for i, part in enumerate(lam.parts, start=1)}
    moved = True
    while moved:
        moved = False
        for x in sorted(beads):
            if x >= p and x - p not in beads:
                beads.remove(x)
                beads.add(x - p)
                moved = True
                break
    ordered = sorted(beads, reverse=True)
    return Partition(tuple(x - len(ordered) + i for i, x in enumerate(ordered, start=1)))


class TestEncoding:
    """Tests for encode and decode."""

    def test_worked_abacus(self, abacus_context):
        lam = P(5, 3, 3, 2, 1, 1)
        b = choose_bead_count(abacus_context, lam)
        assert b == 20
        abacus = encode(lam, b, abacus_context)
        assert abacus.positions == (24, 21, 20, 18, 16, 15) + tuple(range(13, -1, -1))
        assert decode(abacus) == lam

    def test_small_encodings(self):
        ctx = Context(5, 2, 5)
        assert encode(P(), 5, ctx).positions == (4, 3, 2, 1, 0)
        assert encode(P(2), 5, ctx).positions == (6, 3, 2, 1, 0)
        assert decode(Abacus(5, 5, (6, 3, 2, 1, 0), 2)) == P(2)

    def test_round_trip(self, rng):
        ctx = Context(12, 1, 7)
        for degree in range(13):
            for lam in partitions_of(degree):
                b = choose_bead_count(ctx, lam)
                assert decode(encode(lam, b, ctx)) == lam

    def test_too_few_beads(self):
        with pytest.raises(InvalidWeightError):
            encode(P(1, 1, 1), 2, Context(2, 2, 5))

    def test_requires_characteristic(self):
        with pytest.raises(UnsupportedParameterError):
            choose_bead_count(Context(3, 2), P(1))

    def test_bead_count_rule(self):
        ctx = Context(3, 1, 3)
        b = choose_bead_count(ctx, P(1, 1, 1, 1))
        assert b >= 4
        assert (2 * b - 2 + ctx.delta) % 3 == 0
        with pytest.raises(InvalidWeightError):
            check_bead_count(ctx, b + 1)

    def test_abacus_validation(self):
        with pytest.raises(InvalidWeightError):
            Abacus(5, 3, (1, 1, 0), 2)
        with pytest.raises(InvalidWeightError):
            Abacus(5, 2, (1, -1), 2)


class TestRunners:
    """Tests for runner counts and the orbit criterion."""

    def test_worked_runner_counts(self, abacus_context):
        counts = runner_counts(encode(P(5, 3, 3, 2, 1, 1), 20, abacus_context))
        assert counts[0] == 5
        assert counts[1] + counts[4] == 8
        assert counts[2] + counts[3] == 7

        counts = runner_counts(encode(P(5, 3, 3, 2, 1, 1, 1), 20, abacus_context))
        assert counts[1] + counts[4] == 9
        assert counts[2] + counts[3] == 6

    def test_empty_abacus(self):
        assert runner_counts(encode(P(), 5, Context(5, 2, 5))) == (1, 1, 1, 1, 1)

    def test_black_beads(self, abacus_context):
        abacus = encode(P(5, 3, 3, 2, 1, 1), 20, abacus_context)
        assert black_beads_on_runner(abacus, 0) == 4
        assert sum(black_beads_on_runner(abacus, r) for r in range(5)) == 16

    def test_worked_orbit_examples(self, abacus_context):
        lam = P(5, 3, 3, 2, 1, 1)
        assert orbit_equiv_abacus(lam, P(2, 2, 2, 1, 1, 1), abacus_context)
        assert not orbit_equiv_abacus(lam, P(5, 3, 3, 2, 1, 1, 1), abacus_context)
        assert orbit_equiv_abacus(lam, lam, abacus_context)

    def test_parity_condition(self):
        assert not orbit_equiv_abacus(P(2), P(), Context(2, 2, 5))

    def test_bead_count_independence(self, abacus_context):
        lam, mu = P(5, 3, 3, 2, 1, 1), P(2, 2, 2, 1, 1, 1)
        for b in (20, 25, 30):
            assert orbit_equiv_abacus(lam, mu, abacus_context, b)
        with pytest.raises(InvalidWeightError):
            orbit_equiv_abacus(lam, mu, abacus_context, 21)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_bead_count_independence_random(self, p, rng):
        for _ in range(60):
            n = int(rng.integers(2, 9))
            ctx = Context(n, int(rng.integers(0, p)), p)
            labels = label_partitions(n)
            lam = labels[int(rng.integers(len(labels)))]
            mu = labels[int(rng.integers(len(labels)))]
            base = choose_bead_count(ctx, lam, mu)
            answers = {orbit_equiv_abacus(lam, mu, ctx, base + k * p) for k in range(4)}
            assert answers == {orbit_equiv_abacus(lam, mu, ctx)}
            assert answers == {orbit_member_affine(lam, mu, ctx) is not None}

    @pytest.mark.slow
    def test_equals_affine_orbit_membership(self):
        for n in range(1, 9):
            labels = label_partitions(n)
            for p in (3, 5, 7):
                for delta in range(p):
                    ctx = Context(n, delta, p)
                    for lam in labels:
                        for mu in labels:
                            expected = orbit_member_affine(lam, mu, ctx) is not None
                            assert orbit_equiv_abacus(lam, mu, ctx) == expected, (n, p, delta, lam, mu)


class TestCores:
    """Tests for p-cores."""

    @pytest.mark.parametrize("lam,p,core", [
        ((2, 1), 5, (2, 1)),
        ((5,), 5, ()),
        ((4, 4, 2), 5, ()),
        ((3, 2), 5, (3, 2)),
        ((), 3, ()),
    ])
    def test_examples(self, lam, p, core):
        assert p_core(Partition(lam), p) == Partition(core)

    def test_is_p_core(self):
        assert is_p_core(P(), 5)
        assert is_p_core(P(3, 2), 5)
        assert not is_p_core(P(5), 5)

    @pytest.mark.slow
    def test_against_hook_removal(self):
        for p in (3, 5):
            for degree in range(13):
                for lam in partitions_of(degree):
                    core = p_core(lam, p)
                    assert core == _core_by_hook_removal(lam, p)
                    assert p_core(core, p) == core
                    assert is_p_core(lam, p) == all(h % p for h in _hooks(lam))
                    assert is_p_core(lam, p) == is_p_core(conjugate(lam), p)

    def test_independent_of_bead_count(self):
        lam = P(6, 4, 4, 1)
        for b in range(4, 12):
            counts = runner_occupancy(lam, 3, b)
            positions = sorted(
                runner + 3 * level for runner, k in enumerate(counts) for level in range(k)
            )
            ordered = positions[::-1]
            core = Partition(tuple(x - b + i for i, x in enumerate(ordered, start=1)))
            assert core == p_core(lam, 3)

    def test_core_degree(self):
        lam = P(3, 1)
        counts = runner_occupancy(lam, 5, 5)
        assert core_degree(counts, 5) == p_core(lam, 5).degree

    def test_defects(self):
        for defects in [(0, 0, 0), (1, -1, 0), (-1, 0, 1), (2, -1, -1)]:
            core = core_from_defects(3, defects)
            assert is_p_core(core, 3)
            assert core.degree == defect_degree(3, defects)
        with pytest.raises(ValueError):
            core_from_defects(3, (1, 0, 0))

    def test_enumerate_cores(self):
        for p in (3, 5):
            cores = enumerate_cores(p, 12)
            expected = [
                lam for degree in range(13) for lam in partitions_of(degree) if is_p_core(lam, p)
            ]
            assert sorted(cores) == sorted(expected)
            assert cores[0] == P()


class TestRender:
    """Tests for abacus text forms."""

    def test_empty(self):
        abacus = encode(P(), 5, Context(5, 2, 5))
        assert render(abacus) == "●●●●●"

    def test_single_row(self):
        abacus = encode(P(2), 5, Context(2, 2, 5))
        assert render(abacus).splitlines() == ["○○○●.", ".●..."]

    def test_fixed_width(self, abacus_context):
        text = render(encode(P(5, 3, 3, 2, 1, 1), 20, abacus_context))
        assert all(len(line) == 5 for line in text.splitlines())
        assert text.count("●") == 16
        assert text.count("○") == 4

    def test_compact(self):
        abacus = encode(P(2), 5, Context(2, 2, 5))
        assert compact(abacus) == "5:5:2:6,3,2,1,0"
        assert parse_compact("5:5:2:6,3,2,1,0") == abacus
        with pytest.raises(InvalidWeightError):
            parse_compact("5:5:6,3")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
