"""Shared helpers: cached streams and the perturbed two-letter corpus."""

import random
from functools import lru_cache

from sturmian_erasures import (
    Morphism,
    StRejection,
    compose,
    fibonacci_stream,
    st_membership,
)
from sturmian_erasures.morphisms import E, ID2, PHI, PHIT


@lru_cache(maxsize=8)
def fib_prefix(length):
    return fibonacci_stream().prefix(length)


def random_st_member(rng, max_factors=10):
    names = []
    m = ID2
    for _ in range(rng.randint(0, max_factors)):
        gen = rng.choice((E, PHI, PHIT))
        names.append(gen)
        m = compose(m, gen)
    return m


def _mutate(rng, images):
    im0, im1 = images
    which = rng.randrange(2)
    target = [im0, im1][which]
    op = rng.randrange(4)
    if op == 0 and target:
        i = rng.randrange(len(target))
        flipped = "1" if target[i] == "0" else "0"
        target = target[:i] + flipped + target[i + 1 :]
    elif op == 1 and target:
        i = rng.randrange(len(target))
        target = target[:i] + target[i + 1 :]
    elif op == 2:
        i = rng.randrange(len(target) + 1)
        target = target[:i] + rng.choice("01") + target[i:]
    else:
        i = rng.randrange(len(target) + 1)
        target = target[:i] + target[i:][::-1]
    out = [im0, im1]
    out[which] = target
    return tuple(out)


def perturbed_st_corpus(count=100, seed=20260814):
    """The first `count` distinct perturbations of random generator products
    that st_membership rejects, with their rejections."""
    rng = random.Random(seed)
    corpus = []
    seen = set()
    while len(corpus) < count:
        member = random_st_member(rng, max_factors=6)
        images = _mutate(rng, (member.images["0"], member.images["1"]))
        if images in seen:
            continue
        seen.add(images)
        candidate = Morphism({"0": images[0], "1": images[1]})
        outcome = st_membership(candidate)
        if isinstance(outcome, StRejection):
            corpus.append((candidate, outcome))
    return corpus
