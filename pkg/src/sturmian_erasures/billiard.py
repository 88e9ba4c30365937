"""Cubic billiard codings.

A ray td + rho inside the unit cube, with mirror reflections at the faces,
crosses the coordinate hyperplanes x_i = m at times t = (m - rho_i)/d_i.
Sorting the crossings by time and recording which coordinates cross at each
distinct time yields a coding word over subsets of {0,1,2}; when every event
involves a single coordinate this is a word over the three letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import SqrtBasisNumber, rational
from .words import WordStream

__all__ = [
    "BilliardConfig",
    "CrossingEvent",
    "event_stream",
    "billiard_word",
    "classify",
]


def _coerce(x):
    if isinstance(x, SqrtBasisNumber):
        return x
    return rational(x)


@dataclass(frozen=True)
class BilliardConfig:
    """Direction d and starting point rho, componentwise exact.

    Directions are nonnegative with at least one positive coordinate and the
    starting point lies in the half-open unit cube.
    """

    d: tuple
    rho: tuple

    def __post_init__(self):
        if len(self.d) != 3 or len(self.rho) != 3:
            raise ValueError("d and rho must have three coordinates")
        object.__setattr__(self, "d", tuple(_coerce(x) for x in self.d))
        object.__setattr__(self, "rho", tuple(_coerce(x) for x in self.rho))
        signs = [x.sign() for x in self.d]
        if any(s < 0 for s in signs):
            raise ValueError("direction coordinates must be nonnegative")
        if all(s == 0 for s in signs):
            raise ValueError("direction must be nonzero")
        one = rational(1)
        for x in self.rho:
            if x.sign() < 0 or (x - one).sign() >= 0:
                raise ValueError("starting point coordinates must lie in [0, 1)")


@dataclass(frozen=True)
class CrossingEvent:
    """One crossing time and the ascending tuple of coordinates involved."""

    t: SqrtBasisNumber
    omega: tuple

    def to_json(self):
        return {"t": str(self.t), "omega": list(self.omega)}


def event_stream(config):
    """Yield crossing events in increasing time order, forever.

    Coordinate i first crosses a hyperplane at the least integer m with
    m - rho_i >= 0 and then at every following integer; coordinates with
    d_i = 0 never cross.  Simultaneous crossings fuse into one event.
    """
    moving = [i for i in range(3) if config.d[i].sign() > 0]
    # numerators m - rho_i; comparing t_a <= t_b cross-multiplies to keep
    # every quantity in the exact field
    num = []
    for i in moving:
        m = 0 if config.rho[i].sign() == 0 else 1
        num.append(rational(m) - config.rho[i])
    one = rational(1)
    while True:
        best = [0]
        for pos in range(1, len(moving)):
            cmp = (
                num[pos] * config.d[moving[best[0]]]
                - num[best[0]] * config.d[moving[pos]]
            ).sign()
            if cmp < 0:
                best = [pos]
            elif cmp == 0:
                best.append(pos)
        t = num[best[0]] / config.d[moving[best[0]]]
        yield CrossingEvent(t=t, omega=tuple(moving[pos] for pos in best))
        for pos in best:
            num[pos] = num[pos] + one


def billiard_word(config):
    """The coding as a stream over 0, 1, 2.

    Each event contributes one block: its crossing coordinates in ascending
    order, so simultaneous crossings appear as "01", "02", "12" or "012".
    """
    events = event_stream(config)

    def pump(need):
        out = []
        total = 0
        while total < need:
            block = "".join(str(i) for i in next(events).omega)
            out.append(block)
            total += len(block)
        return "".join(out)

    return WordStream(source="billiard", pump=pump)


def classify(config):
    """Coarse trajectory type from the direction alone.

    Two zero coordinates leave a single letter; with one zero the two moving
    coordinates give a periodic word when their ratio is rational and a
    Sturmian-type word otherwise; with all three moving the word is periodic
    when all ratios are rational, a candidate for Sturmian erasures when all
    are irrational, and degenerate in the mixed case.
    """
    moving = [i for i in range(3) if config.d[i].sign() > 0]
    if len(moving) == 1:
        return "Degenerate"
    ratios_rational = [
        (config.d[a] / config.d[b]).is_rational()
        for pos, a in enumerate(moving)
        for b in moving[pos + 1 :]
    ]
    if len(moving) == 2:
        return "Periodic" if ratios_rational[0] else "SturmianProjection"
    if all(ratios_rational):
        return "Periodic"
    if not any(ratios_rational):
        return "WSECandidate"
    return "Degenerate"
