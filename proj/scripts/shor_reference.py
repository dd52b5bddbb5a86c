#!/usr/bin/env python3
"""Derive the reference quantities for the built-in Shor code.

Independent of the C++ implementation: expands the three word groups
directly and evaluates the sums with exact Python integers/fractions.
The numbers printed here are frozen into tests/acceptance.cpp and
tests/test_code_metrics.cpp.
"""

from fractions import Fraction

words = (
    ["b" + "a" * k for k in (0, 1, 7, 13, 14)]
    + [p + "b" + "a" * k for p in ("aaa", "aaaaaaaa") for k in (0, 2, 4, 6)]
    + ["a" * 11 + "b" + "a" * k for k in (0, 1, 2)]
)

assert len(words) == len(set(words)) == 16

profile = {}
for w in words:
    profile[len(w)] = profile.get(len(w), 0) + 2 ** w.count("a")

kraft = sum(Fraction(1, 2 ** len(w)) for w in words)
ternary = sum(Fraction(2 ** w.count("a"), 3 ** len(w)) for w in words)

print("words (sorted by length, then lexicographically):")
for w in sorted(words, key=lambda w: (len(w), w)):
    print(f"  {w}")
print(f"cardinality: {len(words)}")
print(f"power profile: {dict(sorted(profile.items()))}")
print(f"kraft sum: {kraft}")
print(f"weighted ternary sum: {ternary}")
assert kraft <= 1 and ternary <= 1
