"""
Building lower-bound colorings and certifying them
===================================================

A two-coloring of a complete graph that avoids a red target and a blue
target on N vertices shows that no Ramsey-type forcing happens below
N + 1.  This script builds the two packaged construction families,
runs the freeness checker over them, and saves one certified coloring
to disk in the .fr2 text format.
"""

from fanram import (
    burr_coloring,
    check_free,
    lemma27_construction,
    save_coloring,
    thm17_construction,
)

# The clique-versus-fan family.  thm17_construction(m, s, t, n) colors
# a complete graph so that red avoids K_m and blue avoids s disjoint
# copies of the fan F_{t,n}.  Host order is t*n*(m+s-2) + s - 1.
for (m, s, t, n) in [(3, 1, 2, 3), (3, 2, 2, 2), (4, 1, 3, 3)]:
    coloring = thm17_construction(m, s, t, n)
    blue = f"{s}xF:{t},{n}" if s > 1 else f"F:{t},{n}"
    cert = check_free(coloring, f"K{m}", blue)
    print(
        f"thm17 m={m} s={s} t={t} n={n}: order {coloring.host.order}, "
        f"free={cert.valid}"
    )

# The matching-versus-fan family.  lemma27_construction(s, t, n) avoids
# a red matching of size s and a blue F_{t,n}.
for (s, t, n) in [(2, 2, 1), (3, 2, 1), (2, 2, 2)]:
    coloring = lemma27_construction(s, t, n)
    cert = check_free(coloring, f"M:{s}", f"F:{t},{n}")
    print(f"lemma27 s={s} t={t} n={n}: order {coloring.host.order}, free={cert.valid}")

# The generic chromatic construction: chi - 1 red cliques on h_order - 1
# vertices each, plus a surplus block.  Red stays K_chi-free because no
# red edge crosses blocks; blue stays H-free for any connected H on
# h_order vertices because every blue component is too small.
coloring = burr_coloring(3, 1, 17)
cert = check_free(coloring, "K3", "F:4,4")
print(f"burr chi=3 surplus=1 h=17: order {coloring.host.order}, free={cert.valid}")

# Certificates carry a content hash so a stored copy can be re-verified
# after the fact.  Save the coloring with its targets as metadata.
save_coloring(
    "burr_3_1_17.fr2",
    coloring,
    {"red_target": "K3", "blue_target": "F:4,4"},
)
print("wrote burr_3_1_17.fr2, certificate hash", cert.content_hash[:16], "...")
