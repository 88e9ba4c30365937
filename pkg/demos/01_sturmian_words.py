"""Generate Sturmian words three ways and check they tell the same story.

The Fibonacci word is the fixed point of 0 -> 01, 1 -> 0.  It is also the
mechanical word with slope and intercept (3 - sqrt(5))/2, and its factor
complexity is exactly n + 1 at every window size.
"""

from sturmian_erasures import (
    balance_order,
    complexity,
    fibonacci_stream,
    mechanical_stream,
    parse_number,
    sturmian_verdict,
)

F = fibonacci_stream().prefix(2000)
print("fixed point    :", F[:60], "...")

slope = parse_number("(3-sqrt(5))/2")
M = mechanical_stream(slope, slope).prefix(2000)
print("mechanical     :", M[:60], "...")
print("identical      :", F == M)

profile = complexity(F, 30)
print("P(n) for n<=10 :", [profile.counts[n] for n in range(1, 11)])
print("all n+1        :", all(profile.counts[n] == n + 1 for n in range(1, 31)))

balance = balance_order(F, 30)
print("balance order  :", balance.order)

verdict = sturmian_verdict(profile, balance)
print("verdict        :", "consistent" if verdict.consistent else verdict.witness)

# A word that fails: "00110" contains all four length-2 blocks.
bad = "00110" * 20
refuted = sturmian_verdict(complexity(bad, 4), balance_order(bad, 4))
print("counterexample :", refuted.witness)
