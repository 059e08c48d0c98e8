"""
Three routes to one weight table
================================

The table of self-dual indecomposable classes can be produced three ways:

  1. solve the self-duality equation under the non-cancellation rule,
     one column per top element;
  2. read the entries off the classical polynomials, re-indexed;
  3. invert the dual-side simple table, which in finite types has a
     closed form through translation by the longest element.

They must agree entry by entry, with no tolerance, and `cross_validate`
makes that a one-call check.
"""

from tiltweights import (build_system, cross_validate, invert_triangular,
                         kl_P, ringel_verify, tilting_matrix, tilting_vector)
from tiltweights.laurent import T

a3 = build_system('A3')
alpha = a3.parse_word('2,1,3,2')

# route 1: the direct solve
direct = tilting_vector(alpha)
print('direct solve, entry at s2:', direct.get(a3.simple(2)))

# route 2: classical polynomials, re-indexed into the same normalization
gamma = a3.simple(2)
drop = alpha.length - gamma.length
classical = kl_P(gamma, alpha).at_t_power(-2) * T ** drop
print('classical route, same entry:', classical)

# route 3: exact triangular inversion, checked against the matrix product
# in both orders and (finite types) against the closed form
ideal = a3.enumerate_ideal(a3.longest_element())
table = tilting_matrix(ideal)
inverse = invert_triangular(table)
print('\ninverse entry at (2,1,3,2 | 2):',
      inverse.entry(alpha, a3.simple(2)))

for check in ringel_verify(ideal):
    status = 'ok' if check.passed else 'FAIL'
    print(f'  [{status}] {check.name}')

# the full battery over an affine truncation; affine systems have no
# longest element, so route 3 keeps only the product identity there
aff = build_system('affine A2')
report = cross_validate(aff.enumerate_ball(5))
print()
print(report.to_text())
