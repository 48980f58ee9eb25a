# Products in the tangency ring.
#
# The ring is spanned by generators theta_p, one per non-negative contact
# order with the cubic, over polynomials in t truncated at a chosen bound.
# theta_0 is the identity; the coefficient of t^d theta_r in a product
# theta_p * theta_q is a degree-d curve count.  This script expands a few
# products against the solved low-degree table.

from cubicgw import ConcreteMode, compute_up_to, format_element, mul, mul_basis, theta

# Solve the counts through degree 2 first; products at truncation bound 2
# only ever look up counts of degree <= 2.
table = compute_up_to(2)
mode = ConcreteMode(table, bound=2)

print("The identity:")
print("  theta_0 * theta_7 =", format_element(mul_basis(0, 7, mode)))

print()
print("The simplest non-trivial product, at bound 1 it would read the same:")
print("  theta_1 * theta_2 =", format_element(mul_basis(1, 2, mode)))
# The 6 t theta_0 term is the count of lines through a fixed point that
# are tangent to the cubic: there are 6 of them.

print()
print("A product that mixes degree-1 and degree-2 counts:")
print("  theta_1 * theta_5 =", format_element(mul_basis(1, 5, mode)))
# 30 t^2 theta_0 is a degree-2 count; 2 t theta_3 is twice the degree-1
# count N(1,2) = 1.

print()
print("Products commute (the expansion is symmetric in p and q):")
left = mul_basis(2, 4, mode)
right = mul_basis(4, 2, mode)
print("  theta_2 * theta_4 =", format_element(left))
print("  theta_4 * theta_2 =", format_element(right))
assert left == right

print()
print("Every term obeys the grading p + q - r = 3k for its t^k power:")
for p, q in [(1, 2), (1, 5), (3, 3), (2, 4)]:
    element = mul_basis(p, q, mode)
    for r, series in element.terms:
        for k in series.support():
            assert p + q - r == 3 * k
            print(f"  theta_{p} * theta_{q}: term theta_{r} t^{k} has {p}+{q}-{r} = 3*{k}")

print()
print("Associativity holds on the nose once the table is solved:")
x = mul(mul(theta(1, 2), theta(2, 2), mode), theta(3, 2), mode)
y = mul(theta(1, 2), mul(theta(2, 2), theta(3, 2), mode), mode)
print("  (theta_1 theta_2) theta_3 =", format_element(x))
print("  theta_1 (theta_2 theta_3) =", format_element(y))
assert x == y
