import itertools

import pytest

from sturmian_erasures import (
    BilliardConfig,
    apply_stream,
    balance_order,
    billiard_word,
    classify,
    complexity,
    erase,
    event_stream,
    fibonacci_stream,
    parse_morphism,
    parse_number,
    rational,
    sqrt,
    sturmian_verdict,
    wse_verdict,
)

THETA = parse_number("(1+sqrt(5))/2")
GOLDEN = BilliardConfig(
    d=(rational(1), THETA - rational(1), (THETA - rational(1)) ** 2),
    rho=(rational(0), THETA - rational(1), (THETA - rational(1)) ** 2),
)


def _events(config, count):
    return list(itertools.islice(event_stream(config), count))


def test_config_validation():
    with pytest.raises(ValueError):
        BilliardConfig(d=(rational(0),) * 3, rho=(rational(0),) * 3)
    with pytest.raises(ValueError):
        BilliardConfig(d=(rational(-1), rational(1), rational(1)), rho=(rational(0),) * 3)
    with pytest.raises(ValueError):
        BilliardConfig(d=(rational(1),) * 3, rho=(rational(1), rational(0), rational(0)))
    with pytest.raises(ValueError):
        BilliardConfig(d=(rational(1), rational(1)), rho=(rational(0), rational(0)))
    ints = BilliardConfig(d=(1, 1, 0), rho=(0, 0, 0))
    assert ints.d[0] == rational(1)


def test_fused_events_and_word():
    config = BilliardConfig(d=(1, 1, 0), rho=(0, 0, 0))
    events = _events(config, 3)
    assert [e.omega for e in events] == [(0, 1)] * 3
    assert [e.t for e in events] == [rational(0), rational(1), rational(2)]
    assert billiard_word(config).prefix(8) == "01010101"
    assert events[0].to_json() == {"t": "0", "omega": [0, 1]}


def test_interleaved_events_and_word():
    config = BilliardConfig(d=(1, 1, 0), rho=(0, parse_number("1/2"), 0))
    events = _events(config, 4)
    assert [e.omega for e in events] == [(0,), (1,), (0,), (1,)]
    assert [e.t for e in events] == [
        rational(0),
        parse_number("1/2"),
        rational(1),
        parse_number("3/2"),
    ]
    assert billiard_word(config).prefix(8) == "01010101"


def test_golden_first_events():
    events = _events(GOLDEN, 6)
    assert events[0].omega == (0,) and events[0].t == rational(0)
    assert events[1].omega == (1,)
    assert events[1].t == (rational(1) - (THETA - rational(1))) / (THETA - rational(1))
    assert billiard_word(GOLDEN).prefix(6) == "010201"


def test_event_times_strictly_increase():
    for config in (
        GOLDEN,
        BilliardConfig(d=(1, 1, 0), rho=(0, 0, 0)),
        BilliardConfig(d=(sqrt(2), 1, sqrt(3)), rho=(0, 0, 0)),
    ):
        events = _events(config, 40)
        for a, b in zip(events, events[1:]):
            assert (b.t - a.t).sign() > 0
        assert all(e.t.sign() >= 0 for e in events)


def test_event_integrality_invariant():
    for config in (
        GOLDEN,
        BilliardConfig(d=(1, 2, 0), rho=(0, parse_number("1/3"), 0)),
        BilliardConfig(d=(sqrt(2), 1, sqrt(3)), rho=(0, 0, 0)),
    ):
        for event in _events(config, 30):
            for i in range(3):
                x = event.t * config.d[i] + config.rho[i]
                at_integer = x == rational(x.floor())
                moving = config.d[i].sign() > 0
                assert (i in event.omega) == (at_integer and moving)


def test_golden_word_is_morphic_image():
    f = parse_morphism("0=0102,1=01,2=")
    expected = apply_stream(f, fibonacci_stream()).prefix(200)
    assert billiard_word(GOLDEN).prefix(200) == expected


def test_golden_projection_identity():
    w = billiard_word(GOLDEN).prefix(4000)
    for i in range(3):
        d = list(GOLDEN.d)
        rho = list(GOLDEN.rho)
        d[i] = rational(0)
        rho[i] = rational(0)
        projected = BilliardConfig(d=tuple(d), rho=tuple(rho))
        flat = erase(w, str(i))
        assert len(flat) >= 1000
        assert billiard_word(projected).prefix(1000) == flat[:1000]


def test_sturmian_projection_coding():
    config = BilliardConfig(d=(0, 1, THETA), rho=(0, 0, 0))
    w = billiard_word(config).prefix(10_000)
    assert set(w) == {"1", "2"}
    profile = complexity(w, 30)
    assert all(profile.counts[n] == n + 1 for n in range(1, 31))
    assert sturmian_verdict(profile, balance_order(w, 30)).consistent


def test_wse_candidate_coding():
    w = billiard_word(GOLDEN).prefix(10_000)
    assert wse_verdict(w, 30).consistent
    for i in "012":
        assert balance_order(erase(w, i), 30).order <= 2


def test_complexity_ceiling():
    config = BilliardConfig(
        d=(1, sqrt(2), sqrt(3)),
        rho=(0, parse_number("sqrt(2)/2"), parse_number("sqrt(3)/3")),
    )
    w = billiard_word(config).prefix(10_000)
    profile = complexity(w, 10)
    for n in range(1, 11):
        assert profile.counts[n] <= n * n + n + 1


def test_classify():
    assert classify(BilliardConfig(d=(1, 1, 0), rho=(0, 0, 0))) == "Periodic"
    assert classify(BilliardConfig(d=(2, 3, 6), rho=(0, 0, 0))) == "Periodic"
    assert classify(BilliardConfig(d=(0, 1, THETA), rho=(0, 0, 0))) == "SturmianProjection"
    assert classify(GOLDEN) == "WSECandidate"
    assert classify(BilliardConfig(d=(1, sqrt(2), sqrt(3)), rho=(0, 0, 0))) == "WSECandidate"
    assert classify(BilliardConfig(d=(1, 1, sqrt(2)), rho=(0, 0, 0))) == "Degenerate"
    assert classify(BilliardConfig(d=(0, 0, 1), rho=(0, 0, 0))) == "Degenerate"
    assert classify(BilliardConfig(d=(0, sqrt(2), sqrt(8)), rho=(0, 0, 0))) == "Periodic"
