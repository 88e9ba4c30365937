"""Decide membership in the monoid generated by E, phi and phi-tilde.

Members come back with a factor sequence that recomposes exactly to the
input; non-members come back with a reason.  Because a non-member maps
every Sturmian word to a non-Sturmian word, a rejection can be spot-checked
on the Fibonacci word.
"""

from sturmian_erasures import (
    Morphism,
    StRejection,
    apply,
    balance_order,
    complexity,
    fibonacci_stream,
    recompose,
    st_membership,
    sturmian_verdict,
)

candidates = [
    Morphism({"0": "010", "1": "01"}),  # phi squared
    Morphism({"0": "010", "1": "0"}),   # a relation: phi E phit == phit E phi
    Morphism({"0": "01", "1": "10"}),   # determinant 0
    Morphism({"0": "100", "1": "01"}),  # det -1 but no decomposition
]

F = fibonacci_stream().prefix(5000)
for f in candidates:
    outcome = st_membership(f)
    name = f"(0={f.images['0']}, 1={f.images['1']})"
    if isinstance(outcome, StRejection):
        print(f"{name}: rejected, {outcome.reason} ({outcome.detail})")
        if outcome.reason == "no-decomposition":
            w = apply(f, F)[:5000]
            check = sturmian_verdict(complexity(w, 20), balance_order(w, 20))
            print(f"  image of the Fibonacci word: {check.witness}")
    else:
        print(f"{name}: factors {','.join(outcome.factors) or 'id'}")
        assert recompose(outcome) == f
