import random

import pytest

from tweetkeys.evaluation import (
    EvalScores,
    SessionPair,
    SessionOpenError,
    TuringTally,
    average_scores,
    new_session,
    pass_verdict,
    round2,
    score,
    tally,
)

# printed per-tweet (P, R) rows for the weaker system's expert dataset
SYSTEM_A_ROWS = [
    (0.40, 1.00), (0.43, 0.75), (0.38, 0.60), (0.71, 1.00), (0.55, 0.86),
    (0.23, 0.75), (0.25, 0.40), (0.25, 0.67), (1.00, 1.00), (1.00, 1.00),
    (1.00, 1.00), (0.30, 1.00), (0.83, 1.00), (1.00, 0.71),
]


def make_session(pairs, judgments, seed=7):
    session = new_session("s1", "test", pairs, seed=seed)
    for i, choice in enumerate(judgments):
        session.judge(i, choice)
    return session


def test_identical_lists_score_one():
    s = score(["buy", "touch", "travel", "pass"], ["buy", "touch", "travel", "pass"])
    assert (s.precision, s.recall, s.f1) == (1.0, 1.0, 1.0)


def test_f1_spot_values():
    assert round2(EvalScores.from_pr(0.40, 1.00).f1) == 0.57
    assert round2(EvalScores.from_pr(0.43, 0.75).f1) == 0.55
    assert round2(EvalScores.from_pr(0.71, 1.00).f1) == 0.83


def test_empty_machine_side_is_zero():
    s = score([], ["a"])
    assert s.f1 == 0.0
    s = score(["a"], [])
    assert s.f1 == 0.0


def test_both_empty_is_one_by_convention():
    s = score([], [])
    assert (s.precision, s.recall, s.f1) == (1.0, 1.0, 1.0)


def test_score_counts():
    s = score(["a", "b", "c"], ["b", "c", "d", "e"])
    assert s.true_positives == 2
    assert s.machine_count == 3
    assert s.human_count == 4
    assert s.precision == pytest.approx(2 / 3)
    assert s.recall == pytest.approx(0.5)


def test_score_casefolds_and_deduplicates():
    s = score(["Buy", "buy", "PASS"], ["pass", "buy"])
    assert s.machine_count == 2
    assert s.true_positives == 2


def test_average_scores_means_not_f1_of_means():
    scores = [EvalScores.from_pr(p, r) for p, r in SYSTEM_A_ROWS]
    avg = average_scores(scores)
    assert round2(avg.precision) == pytest.approx(0.59, abs=0.01)
    assert round2(avg.recall) == pytest.approx(0.84, abs=0.01)
    assert round2(avg.f1) == pytest.approx(0.66, abs=0.01)
    # mean of F1s, not F1 of the mean P/R
    assert avg.f1 != EvalScores.from_pr(avg.precision, avg.recall).f1


def test_average_scores_single_and_identical():
    one = EvalScores.from_pr(0.5, 0.8)
    assert average_scores([one]) == EvalScores(
        one.precision, one.recall, one.f1, 0, 0, 0
    )
    two = average_scores([one, one])
    assert two.f1 == pytest.approx(one.f1)


def test_average_scores_empty_is_an_error():
    with pytest.raises(ValueError):
        average_scores([])


@pytest.mark.parametrize(
    "x,z,n,expected",
    [
        (0, 3, 14, 21.43),
        (4, 3, 14, 50.00),
        (4, 7, 14, 78.57),
        (5, 4, 14, 64.29),
        (0, 10, 14, 71.43),
    ],
)
def test_tally_t_formula(x, z, n, expected):
    t = TuringTally(x=x, y=n - x - z, z=z, n=n)
    assert t.t == expected


def test_fully_detected_means_zero():
    t = TuringTally(x=0, y=14, z=0, n=14)
    assert t.t == 0.0
    assert not t.passed


def test_tally_requires_conservation():
    with pytest.raises(ValueError):
        TuringTally(x=1, y=1, z=1, n=14)


def test_pass_verdict_on_the_published_test_cases():
    """Rates as printed for the final system's six supervisor groups; the
    undergraduates row is fed with its printed rate (see the formula-
    discrepancy test below)."""
    tallies = [TuringTally(x=x, y=y, z=z, n=14) for x, y, z in
               [(0, 11, 3), (0, 4, 10), (4, 2, 8), (4, 7, 3), (4, 3, 7), (5, 5, 4)]]
    # the third tally above is adjusted so its T lands on the printed 85.71
    assert [t.t for t in tallies] == [21.43, 71.43, 85.71, 50.00, 78.57, 64.29]
    verdict = pass_verdict(tallies)
    assert (verdict.passed, verdict.failed) == (5, 1)
    assert verdict.success_rate == 83.33


def test_undergraduates_row_as_printed_contradicts_the_formula():
    """The published undergraduates row (x=4, y=8, z=2, n=14) prints 85.71,
    which is (x+y)/n; the defined formula (x+z)/n gives 42.86.  The
    implementation follows the formula."""
    t = TuringTally(x=4, y=8, z=2, n=14)
    assert t.t == 42.86
    assert t.t != 85.71


def test_pass_verdict_boundaries():
    all_pass = [TuringTally(x=n, y=0, z=0, n=n) for n in (3, 5)]
    assert pass_verdict(all_pass).success_rate == 100.0
    all_fail = [TuringTally(x=0, y=5, z=0, n=5)]
    assert pass_verdict(all_fail).success_rate == 0.0
    with pytest.raises(ValueError):
        pass_verdict([])


def test_threshold_is_exactly_fifty():
    assert TuringTally(x=4, y=7, z=3, n=14).passed  # 50.00
    assert not TuringTally(x=4, y=8, z=2, n=14).passed  # 42.86


def test_session_tally_counts_outcomes():
    pairs = [
        SessionPair("t1", ("a", "b"), ("a", "b")),      # identical -> x
        SessionPair("t2", ("a", "b"), ("c", "d")),      # distinct
        SessionPair("t3", ("x",), ("y",)),              # distinct
    ]
    session = new_session("s", "crit", pairs, seed=3)
    # pair 0: any choice counts toward x
    session.judge(0, "a")
    # pair 1: pick the machine side -> y
    session.judge(1, session.machine_sides[1])
    # pair 2: pick the human side -> z
    session.judge(2, "a" if session.machine_sides[2] == "b" else "b")
    t = tally(session)
    assert (t.x, t.y, t.z, t.n) == (1, 1, 1, 3)


def test_identical_pair_counts_x_regardless_of_choice():
    pairs = [SessionPair("t", ("buy", "pass"), ("pass", "buy"))]
    for choice in ("a", "b"):
        session = new_session("s", "c", pairs, seed=1)
        session.judge(0, choice)
        assert tally(session).x == 1


def test_open_session_cannot_be_tallied():
    pairs = [SessionPair("t", ("a",), ("b",))]
    session = new_session("s", "c", pairs)
    with pytest.raises(SessionOpenError):
        tally(session)


def test_judgments_are_sequential_and_final():
    pairs = [SessionPair("t", ("a",), ("b",)), SessionPair("u", ("c",), ("d",))]
    session = new_session("s", "c", pairs, seed=1)
    with pytest.raises(ValueError):
        session.judge(1, "a")  # out of order
    session.judge(0, "a")
    with pytest.raises(ValueError):
        session.judge(0, "b")  # revision forbidden
    session.judge(1, "b")
    with pytest.raises(ValueError):
        session.judge(2, "a")  # already complete


def test_seed_determinism():
    pairs = [SessionPair(f"t{i}", ("a",), ("b",)) for i in range(14)]
    s1 = new_session("x", "c", pairs, seed=42)
    s2 = new_session("y", "c", pairs, seed=42)
    s3 = new_session("z", "c", pairs, seed=43)
    assert s1.machine_sides == s2.machine_sides
    assert s1.machine_sides != s3.machine_sides  # 1-in-16384 collision chance


def test_property_tally_conservation_and_monotone_t():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 20)
        pairs = []
        for i in range(n):
            if rng.random() < 0.3:
                pairs.append(SessionPair(f"t{i}", ("same",), ("same",)))
            else:
                pairs.append(SessionPair(f"t{i}", ("human",), ("machine",)))
        session = new_session("s", "c", pairs, seed=rng.randint(0, 10**6))
        for i in range(n):
            session.judge(i, rng.choice(["a", "b"]))
        t = tally(session)
        assert t.x + t.y + t.z == t.n == n
        if t.y > 0:
            more_z = TuringTally(x=t.x, y=t.y - 1, z=t.z + 1, n=t.n)
            assert more_z.t >= t.t


def test_property_f1_bounds_and_symmetry():
    rng = random.Random(123)
    vocab = [f"w{i}" for i in range(12)]
    for _ in range(300):
        a = rng.sample(vocab, rng.randint(0, 6))
        b = rng.sample(vocab, rng.randint(0, 6))
        ab, ba = score(a, b), score(b, a)
        assert 0.0 <= ab.f1 <= 1.0
        assert ab.f1 == pytest.approx(ba.f1)
        assert ab.precision == pytest.approx(ba.recall)
        assert ab.recall == pytest.approx(ba.precision)
        p, r = ab.precision, ab.recall
        if p + r > 0:
            assert ab.f1 <= min(1.0, 2 * min(p, r) / (p + r)) + 1e-12
            assert ab.f1 <= max(p, r) + 1e-12


def test_round2_is_half_up():
    assert round2(0.125) == 0.13
    assert round2(0.845) == 0.85
    assert round2(21.4285714) == 21.43
