"""Morphisms over {0,1,2} as letter-to-word maps: composition, incidence
matrices, determinants, and the nilpotent/permuting/expansive letter
classification."""

from __future__ import annotations

from dataclasses import dataclass

A2 = "01"
A3 = "012"

__all__ = [
    "Morphism",
    "IncidenceMatrix",
    "LetterClassification",
    "apply",
    "compose",
    "incidence",
    "determinant",
    "classify_letters",
    "is_unit",
    "is_nilpotent_morphism",
    "is_expansive",
    "parse_morphism",
    "format_morphism",
    "E",
    "PHI",
    "PHIT",
    "E0",
    "E1",
    "E2",
    "PHI1",
    "PHIT1",
    "PI0",
    "PI1",
    "PI2",
    "ID2",
    "ID3",
]


class Morphism:
    """Total map from a domain alphabet ("01" or "012") to words over {0,1,2}."""

    __slots__ = ("domain", "images")

    def __init__(self, images):
        domain = "".join(sorted(images))
        if domain not in (A2, A3):
            raise ValueError(f"domain must be 01 or 012, got letters {domain!r}")
        for a, w in images.items():
            if any(c not in A3 for c in w):
                raise ValueError(f"image of {a!r} contains letters outside 012: {w!r}")
        self.domain = domain
        self.images = {a: images[a] for a in domain}

    def __call__(self, w):
        return apply(self, w)

    def image_letters(self):
        return set("".join(self.images.values()))

    def __mul__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ID2 if self.domain == A2 else ID3
        for _ in range(n):
            out = compose(self, out)
        return out

    # Equality is extensional: same domain, same image per letter.
    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.domain == other.domain and self.images == other.images

    def __hash__(self):
        return hash((self.domain, tuple(self.images.items())))

    def __repr__(self):
        return f"Morphism({format_morphism(self)!r})"


def apply(f, w):
    """Concatenation of the images of the letters of w; apply(f, "") == ""."""
    images = f.images
    try:
        return "".join(images[a] for a in w)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} outside domain {f.domain!r}") from None


def compose(g, f):
    """(g o f)(a) = g(f(a)); requires the image letters of f inside g's domain."""
    extra = f.image_letters() - set(g.domain)
    if extra:
        raise ValueError(
            f"image letters {sorted(extra)} of the inner morphism fall outside "
            f"the outer domain {g.domain!r}"
        )
    return Morphism({a: apply(g, w) for a, w in f.images.items()})


def parse_morphism(text):
    """Parse the text format `0=02,1=10,2=` (empty images allowed)."""
    images = {}
    for entry in text.split(","):
        entry = entry.strip()
        if "=" not in entry:
            raise ValueError(f"bad morphism entry {entry!r}: expected letter=image")
        letter, image = entry.split("=", 1)
        letter = letter.strip()
        image = image.strip()
        if letter not in A3 or len(letter) != 1:
            raise ValueError(f"bad morphism letter {letter!r}")
        if letter in images:
            raise ValueError(f"duplicate letter {letter!r} in morphism spec")
        if any(c not in A3 for c in image):
            raise ValueError(f"bad morphism image {image!r} for letter {letter!r}")
        images[letter] = image
    domain = "".join(sorted(images))
    if domain not in (A2, A3):
        raise ValueError(f"morphism must define letters 01 or 012, got {domain!r}")
    return Morphism(images)


def format_morphism(f):
    return ",".join(f"{a}={f.images[a]}" for a in f.domain)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Occurrence-count matrix: entry (i, j) counts letter i in f(j)."""

    rows: tuple
    row_letters: str
    col_letters: str

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __mul__(self, other):
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        if self.col_letters != other.row_letters:
            raise ValueError("dimension mismatch")
        rows = tuple(
            tuple(
                sum(self.rows[i][k] * other.rows[k][j] for k in range(len(self.col_letters)))
                for j in range(len(other.col_letters))
            )
            for i in range(len(self.row_letters))
        )
        return IncidenceMatrix(rows, self.row_letters, other.col_letters)

    def to_lists(self):
        return [list(r) for r in self.rows]


def incidence(f):
    letters = set(f.domain) | f.image_letters()
    rows_alphabet = A2 if letters <= set(A2) else A3
    rows = tuple(
        tuple(f.images[a].count(i) for a in f.domain) for i in rows_alphabet
    )
    return IncidenceMatrix(rows, rows_alphabet, f.domain)


def determinant(m):
    """Exact determinant of a 2x2 or 3x3 incidence matrix."""
    r = m.rows
    n = len(r)
    if n != len(m.col_letters):
        raise ValueError(f"non-square matrix: {len(m.row_letters)}x{len(m.col_letters)}")
    if n == 2:
        return r[0][0] * r[1][1] - r[0][1] * r[1][0]
    if n == 3:
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )
    raise ValueError(f"unsupported matrix size {n}")


@dataclass(frozen=True)
class LetterClassification:
    """Partition of the domain into nilpotent / permuting / expansive letters.

    permuting_core holds the letters whose nilpotent-reduced orbit returns to
    the letter itself (with exponent >= 1); it is a subset of permuting.
    witness maps each non-expansive letter to its witnessing exponent.
    """

    nilpotent: frozenset
    permuting_core: frozenset
    permuting: frozenset
    expansive: frozenset
    witness: dict


def classify_letters(f):
    alphabet = f.domain

    # Nilpotent letters: least fixpoint of a -> f(a) in N*.
    nilpotent = set()
    witness = {}
    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        for a in alphabet:
            if a not in nilpotent and all(c in nilpotent for c in f.images[a]):
                nilpotent.add(a)
                witness[a] = rounds
                changed = True

    def reduce(w):
        return "".join(c for c in w if c not in nilpotent)

    # Core letters: the reduced single-letter orbit returns to the start.
    # Once a reduced image has length >= 2 it can never shrink back (reduced
    # images of surviving letters are nonempty), so only single-letter chains
    # can cycle.
    core = set()
    for a in alphabet:
        if a in nilpotent:
            continue
        cur, steps = a, 0
        while steps <= len(alphabet):
            cur = reduce(f.images[cur])
            steps += 1
            if len(cur) != 1:
                break
            if cur == a:
                core.add(a)
                witness[a] = steps
                break

    # Permuting letters: some iterate lands in (N u P')* \ N*.  The letter set
    # of f^n(a) only depends on the letter set of f^(n-1)(a), so iterate set
    # orbits; subsets of a 3-letter alphabet repeat within 2**3 + 3 steps.
    good = nilpotent | core
    permuting = set()
    for a in alphabet:
        if a in nilpotent:
            continue
        seen = {a}
        for n in range(2 ** len(alphabet) + len(alphabet)):
            if seen <= good and seen & core:
                permuting.add(a)
                witness.setdefault(a, n)
                break
            seen = {c for b in seen for c in f.images[b]}

    expansive = set(alphabet) - nilpotent - permuting
    return LetterClassification(
        nilpotent=frozenset(nilpotent),
        permuting_core=frozenset(core),
        permuting=frozenset(permuting),
        expansive=frozenset(expansive),
        witness=witness,
    )


def is_nilpotent_morphism(f, classification=None):
    c = classification or classify_letters(f)
    return all(ch in c.nilpotent for w in f.images.values() for ch in w)


def is_expansive(f, classification=None):
    c = classification or classify_letters(f)
    return bool(c.expansive)


def is_unit(f, classification=None):
    c = classification or classify_letters(f)
    return not is_nilpotent_morphism(f, c) and not is_expansive(f, c)


E = Morphism({"0": "1", "1": "0"})
PHI = Morphism({"0": "01", "1": "0"})
PHIT = Morphism({"0": "10", "1": "0"})
ID2 = Morphism({"0": "0", "1": "1"})
ID3 = Morphism({"0": "0", "1": "1", "2": "2"})
E0 = Morphism({"0": "0", "1": "2", "2": "1"})
E1 = Morphism({"0": "2", "1": "1", "2": "0"})
E2 = Morphism({"0": "1", "1": "0", "2": "2"})
PHI1 = Morphism({"0": "01", "1": "0", "2": ""})
PHIT1 = Morphism({"0": "10", "1": "0", "2": ""})
PI0 = Morphism({"0": "", "1": "1", "2": "2"})
PI1 = Morphism({"0": "0", "1": "", "2": "2"})
PI2 = Morphism({"0": "0", "1": "1", "2": ""})
