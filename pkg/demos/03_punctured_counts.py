# Punctured counts from the solved table.
#
# A punctured query (p, q, r, d) is the degree-d count with incoming
# contact orders p, q and one point-constrained output of order r.  It is
# only meaningful on the grading line p + q - r = 3d, and it reduces to
# two-point counts:  (q - r) N(p, q-r) + (p - r) N(q, p-r).  These numbers
# are exactly the structure constants of the tangency ring.

from cubicgw import (
    ConcreteMode,
    compute_up_to,
    mul_basis,
    punctured_invariant,
    punctured_table,
)

table = compute_up_to(2)

print("Single values:")
print("  (p,q,r,d) = (2,3,5,0):", punctured_invariant(2, 3, 5, 0, table))
print("  (p,q,r,d) = (4,2,3,1):", punctured_invariant(4, 2, 3, 1, table))
print("  (p,q,r,d) = (5,2,1,2):", punctured_invariant(5, 2, 1, 2, table))
print("  (p,q,r,d) = (3,3,0,2):", punctured_invariant(3, 3, 0, 2, table))

print()
print("Degree-0 queries are 1 exactly on the diagonal r = p + q:")
for p, q, r, v in punctured_table(0, table, cap=2):
    print(f"  ({p},{q},{r},0) -> {v}")

print()
print("The full degree-1 batch with orders up to 6:")
for p, q, r, v in punctured_table(1, table, cap=6):
    if v:
        print(f"  ({p},{q},{r},1) -> {v}")

print()
print("Symmetry in (p, q) is visible in the formula and in the values:")
assert punctured_invariant(5, 2, 1, 2, table) == punctured_invariant(2, 5, 1, 2, table)
print("  (5,2,1,2) == (2,5,1,2):", punctured_invariant(5, 2, 1, 2, table))

print()
print("Coherence with the ring: for r >= 1 the t^d theta_r coefficient of")
print("theta_p * theta_q is the punctured count itself.")
for d in (1, 2):
    mode = ConcreteMode(table, d)
    for p, q in [(2, 1 + 3 * (d - 1) + 1), (3 * d, 3 * d)]:
        r = p + q - 3 * d
        if r < 1:
            continue
        direct = punctured_invariant(p, q, r, d, table)
        via_ring = mul_basis(p, q, mode).coefficient(r, d)
        assert direct == via_ring
        print(f"  d={d}, (p,q,r)=({p},{q},{r}): {direct} both ways")
