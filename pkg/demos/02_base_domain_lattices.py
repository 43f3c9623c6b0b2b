"""The D-side calculus: modules of k as lattices, colon, class labels.

D ranges over Z, the order Z[sqrt(-5)], and Q embedded in Q(i).  One
Hermite normal form serves all three, so module equality is structural.
"""

from starpull import (
    BaseDomain,
    FieldElem,
    class_label_D,
    dmod_arith,
    dmod_colon,
    dmod_from_generators,
    dmod_predicates,
    dmod_v,
)

Z = BaseDomain.integers()
OK5 = BaseDomain.quadratic_order(-5)
ZI = BaseDomain.integers(-1)

print("colon(2Z)        =", dmod_colon(dmod_from_generators([2], Z)))
print()

# the nonprincipal prime above 2 in Z[sqrt(-5)]
w = FieldElem(0, 1, -5)
P = dmod_from_generators([FieldElem(2), FieldElem(1) + w], OK5)
print("P                =", P)
print("P^-1             =", dmod_colon(P))
print("P * P^-1 == O_K  :", dmod_arith(P, dmod_colon(P), "mul") == OK5.unit_module())
print("v(P) == P        :", dmod_v(P) == P)
preds = dmod_predicates(P)
print("P invertible     :", preds.is_invertible)
print("P cyclic         :", preds.is_cyclic, " (no element of norm 2 exists)")
print()

# class labels via reduced binary quadratic forms of discriminant -20
print("Cl(Z[sqrt(-5)])  : cyclic orders", list(OK5.class_presentation))
print("label(P)         =", class_label_D(P))
P2 = dmod_arith(P, P, "mul")
print("label(P^2)       =", class_label_D(P2), " and P^2 =", P2)
print("gen of P^2       =", dmod_predicates(P2).is_cyclic)
print()

# a Z-module of Q(i) that is not a fractional ideal: its colon collapses
G = dmod_from_generators([FieldElem(1), FieldElem(0, 1, -1)], ZI)
print("colon(Z + Zi)    =", dmod_colon(G))
print("v(Z + Zi)        =", dmod_v(G), " (the whole field)")
