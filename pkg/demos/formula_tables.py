"""Closed-form value tables.

Prints small tables from the formula registry and checks a couple of
identities that tie different entries together.
"""

from fanram import closed_formula, formula_ids

print("registered formulas:", ", ".join(formula_ids()))
print()

# triangle versus fan families, one row per n
print(" n   K3 vs F:3,n   K3 vs F:4,n")
for n in range(3, 11):
    a = closed_formula("thm1.4", {"n": n})
    b = closed_formula("thm1.5", {"n": n})
    flag = "" if a.validity.satisfied and b.validity.satisfied else "  (outside stated range)"
    print(f"{n:2d}   {a.value:8d}   {b.value:10d}{flag}")
print()

# the s-copies entry collapses to the single-copy entries at s=1
for n in range(4, 9):
    lhs = closed_formula("cor1.9", {"t": 3, "s": 1, "n": n}).value
    rhs = closed_formula("thm1.4", {"n": n}).value
    assert lhs == rhs, (n, lhs, rhs)
print("cor1.9 at t=3, s=1 matches thm1.4 on n in 4..8")

# lower and upper multi-copy bounds meet when the base value is tight
for s in (2, 3, 4):
    lo = closed_formula("thm1.7lo", {"m": 3, "s": s, "t": 2, "n": 4})
    base = closed_formula("thm1.6", {"m": 3, "s": 1, "t": 2, "n": 4})
    hi = closed_formula("thm1.7hi", {"m": 3, "s": s, "t": 2, "n": 4, "base": base.value})
    print(f"s={s}: lower {lo.value}, upper {hi.value}, gap {hi.value - lo.value}")
