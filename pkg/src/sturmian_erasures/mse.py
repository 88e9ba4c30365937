"""Erasure-aware analysis of ternary morphisms.

A ternary morphism maps every word with Sturmian erasures to another one
exactly when it is a permutation of {0,1,2} or it erases some letter i and,
for every j, the recoded two-letter morphism obtained by erasing j from the
images is a Sturmian morphism.  The latter test is exact: erasing j from any
image word factors through the erased-i restriction, so all three recoded
projections must map Sturmian words to Sturmian words, and conversely three
Sturmian projections force every image word back into the erasure class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .monoid import StCertificate, StRejection, st_membership
from .morphisms import (
    E0,
    E2,
    ID3,
    PHI1,
    PHIT1,
    PI2,
    Morphism,
    compose,
    is_unit,
)
from .words import erase

__all__ = [
    "MSEVerdict",
    "PsiFamily",
    "PrimalityVerdict",
    "mse_membership",
    "length_filter",
    "intercalate",
    "psi",
    "primality",
]

A3 = "012"


@dataclass(frozen=True)
class MSEVerdict:
    """One of permutation / erasing-member / rejected.

    An erasing member records the erased letter and, for each erased
    projection letter j, the certificate of the recoded two-letter morphism.
    """

    kind: str
    erased: str | None = None
    certificates: dict | None = None
    reason: str | None = None
    witness: str | None = None

    @property
    def accepted(self):
        return self.kind != "rejected"

    def to_json(self):
        if self.kind == "permutation":
            return {"verdict": "permutation"}
        if self.kind == "erasing-member":
            return {
                "verdict": "erasing-member",
                "erased": self.erased,
                "certificates": {
                    j: cert.to_json() for j, cert in self.certificates.items()
                },
            }
        return {"verdict": "rejected", "reason": self.reason, "witness": self.witness}


def projection_restriction(f, i, j):
    """Erase j from the images of f, restrict the domain to A3 minus i, and
    recode both sides order-preservingly to {0,1}."""
    dom = [a for a in A3 if a != i]
    cod = [a for a in A3 if a != j]
    recode = {cod[0]: "0", cod[1]: "1"}
    images = {}
    for pos, a in enumerate(dom):
        image = erase(f.images[a], j)
        images[str(pos)] = "".join(recode[c] for c in image)
    return Morphism(images)


def mse_membership(f):
    """Decide membership among erasure-preserving ternary morphisms."""
    if not isinstance(f, Morphism) or f.domain != A3:
        raise ValueError("mse_membership expects a morphism on 012")
    if sorted(f.images.values()) == ["0", "1", "2"]:
        return MSEVerdict(kind="permutation")
    erased = [i for i in A3 if f.images[i] == ""]
    if not erased:
        return MSEVerdict(
            kind="rejected",
            reason="not-permutation-no-erased-letter",
            witness="members either permute 012 or erase a letter",
        )
    i = erased[0]
    filt = length_filter(f, erased_letter=i)
    if filt is not None:
        return MSEVerdict(kind="rejected", reason="length-filter", witness=filt)
    certificates = {}
    for j in A3:
        outcome = st_membership(projection_restriction(f, i, j))
        if isinstance(outcome, StRejection):
            return MSEVerdict(
                kind="rejected",
                reason=f"projection-{j}-not-sturmian",
                witness=f"{outcome.reason}: {outcome.detail}",
            )
        certificates[j] = outcome
    return MSEVerdict(kind="erasing-member", erased=i, certificates=certificates)


def length_filter(f, erased_letter=None):
    """Necessary conditions for an erasing member: None on pass, else a witness.

    With i erased and {j,k} the other letters, each of f(j), f(k) must have
    length >= 2, contain at least one non-erased letter, and each of j, k
    must occur somewhere in f(j)f(k).
    """
    if erased_letter is None:
        empties = [i for i in A3 if f.images[i] == ""]
        if not empties:
            raise ValueError("length_filter expects a morphism erasing a letter")
        erased_letter = empties[0]
    elif f.images[erased_letter] != "":
        raise ValueError(f"letter {erased_letter!r} is not erased")
    others = [a for a in A3 if a != erased_letter]
    for a in others:
        image = f.images[a]
        if len(image) < 2:
            return f"|f({a})| = {len(image)} < 2"
        if sum(image.count(b) for b in others) < 1:
            return f"f({a}) = {image!r} has no surviving letter"
    both = f.images[others[0]] + f.images[others[1]]
    for a in others:
        if both.count(a) < 1:
            return f"letter {a} never occurs in the images"
    return None


def intercalate(u, v, w):
    """The unique ternary word with erasures u (no 2), v (no 1), w (no 0),
    or None when the three words are not compatible.

    At each step at most one rule can fire: emitting 0 and 1 disagree on the
    front of u, emitting 0 and 2 disagree on the front of v, emitting 1 and 2
    disagree on the front of w.
    """
    if set(u) - set("01") or set(v) - set("02") or set(w) - set("12"):
        raise ValueError("intercalate expects words over 01, 02 and 12")
    iu = iv = iw = 0
    out = []
    while iu < len(u) or iv < len(v) or iw < len(w):
        if iu < len(u) and u[iu] == "0" and iv < len(v) and v[iv] == "0":
            out.append("0")
            iu += 1
            iv += 1
        elif iu < len(u) and u[iu] == "1" and iw < len(w) and w[iw] == "1":
            out.append("1")
            iu += 1
            iw += 1
        elif iv < len(v) and v[iv] == "2" and iw < len(w) and w[iw] == "2":
            out.append("2")
            iv += 1
            iw += 1
        else:
            return None
    return "".join(out)


@dataclass(frozen=True)
class PsiFamily:
    """The n-th member of the prime family together with its three
    generator-product components (f from erasing 2, g from erasing 1, h from
    erasing 0)."""

    n: int
    psi: Morphism
    f: Morphism
    g: Morphism
    h: Morphism


def _generator_power(base, n):
    out = ID3
    for _ in range(n):
        out = compose(base, out)
    return out


def psi(n):
    """Construct psi_n from its table for n <= 2 and the doubling recurrence
    afterwards; the three components are built independently from generator
    products and the projection identities are checked on construction."""
    if n < 1:
        raise ValueError("psi is defined for n >= 1")
    table = {1: ("01", "20"), 2: ("2010", "01")}
    m = 3
    while m <= n:
        a2, b2 = table[m - 2]
        table[m] = (a2 + b2 + a2, table[m - 1][0])
        m += 1
    images = {"0": table[n][0], "1": table[n][1], "2": ""}
    psi_n = Morphism(images)

    f_n = _generator_power(PHI1, n)
    tail = _generator_power(PHIT1, n - 1)
    g_n = reduce(compose, [E0, PHIT1, E2, tail])
    h_n = reduce(compose, [E2, E0, tail])
    # The raw products act on the letter 2 through the permutation factors
    # (visible only for n = 1); silencing 2 on the right restores the
    # erasing shape without touching the images of 0 and 1.
    f_n = compose(f_n, PI2)
    g_n = compose(g_n, PI2)
    h_n = compose(h_n, PI2)

    for a in A3:
        if (
            erase(psi_n.images[a], "2") != f_n.images[a]
            or erase(psi_n.images[a], "1") != g_n.images[a]
            or erase(psi_n.images[a], "0") != h_n.images[a]
        ):
            raise RuntimeError(f"projection identity failed for psi_{n} on {a!r}")
    return PsiFamily(n=n, psi=psi_n, f=f_n, g=g_n, h=h_n)


@dataclass(frozen=True)
class PrimalityVerdict:
    """prime-certified / composite-certified / unknown."""

    kind: str
    note: str = ""
    g_factor: Morphism | None = None
    h_factor: Morphism | None = None

    def to_json(self):
        from .morphisms import format_morphism

        out = {"verdict": self.kind, "note": self.note}
        if self.g_factor is not None:
            out["g"] = format_morphism(self.g_factor)
            out["h"] = format_morphism(self.h_factor)
        return out


def _prefix_or_suffix(a, b):
    return b.startswith(a) or b.endswith(a)


def primality(f):
    """Prime/composite certificates for erasing members.

    A member whose two surviving images are unrelated by prefix or suffix is
    prime.  When a relation exists and the letter counts of f(012) satisfy
    count(j) > count(k) >= count(i), splitting the longer image certifies a
    composite; anything else stays unknown.
    """
    verdict = mse_membership(f)
    if verdict.kind == "permutation":
        return PrimalityVerdict(
            kind="unknown", note="permutations are units, primality does not apply"
        )
    if verdict.kind == "rejected":
        raise ValueError(f"not an erasing member: {verdict.reason}")
    i = verdict.erased
    others = [a for a in A3 if a != i]
    fj, fk = (f.images[a] for a in others)
    if not _prefix_or_suffix(fj, fk) and not _prefix_or_suffix(fk, fj):
        return PrimalityVerdict(
            kind="prime-certified",
            note=(
                f"f({others[0]}) and f({others[1]}) are not prefixes or "
                "suffixes of one another"
            ),
        )
    total = f.images["0"] + f.images["1"] + f.images["2"]
    counts = {a: total.count(a) for a in A3}
    j, k = sorted(others, key=lambda a: counts[a], reverse=True)
    if not (counts[j] > counts[k] >= counts[i]):
        return PrimalityVerdict(
            kind="unknown",
            note=(
                "images overlap but the letter counts "
                f"{counts} do not meet the splitting condition"
            ),
        )
    fj, fk = f.images[j], f.images[k]
    if fj.startswith(fk):
        u, v = fk, fj[len(fk):]
        h_images = {j: j + k, k: j + i, i: ""}
    elif fj.endswith(fk):
        u, v = fk, fj[: len(fj) - len(fk)]
        h_images = {j: k + j, k: i + j, i: ""}
    else:
        return PrimalityVerdict(
            kind="unknown", note="the shorter image is not on the splitting side"
        )
    g_factor = Morphism({j: u, k: v, i: ""})
    h_factor = Morphism(h_images)
    if compose(g_factor, h_factor) != f:
        return PrimalityVerdict(kind="unknown", note="split failed recomposition")
    if not mse_membership(g_factor).accepted or not mse_membership(h_factor).accepted:
        return PrimalityVerdict(kind="unknown", note="split factors left the monoid")
    if is_unit(h_factor):
        return PrimalityVerdict(kind="unknown", note="split produced a unit factor")
    return PrimalityVerdict(
        kind="composite-certified", g_factor=g_factor, h_factor=h_factor
    )
