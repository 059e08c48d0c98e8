"""
Pushing weight tables through parabolic quotients
=================================================

Summing each coset fiber with the sign-twisted shift (-t)^(length drop)
either kills a column outright or produces the quotient's own table.
Which of the two happens is decided by pure combinatorics: whether the
column's top element is the shortest member of its coset.
"""

from tiltweights import build_system, pushforward_tilting

a2 = build_system('A2')

# s2 is minimal in its coset mod <s1>: the class survives
res = pushforward_tilting(a2.simple(2), {1})
print('push of T(2) through J={1}:')
for rep, weight in sorted(res.coeffs.items(),
                          key=lambda kv: kv[0].sort_key):
    print(f'  {a2.format_word(rep):<6} {weight}')

# s2 s1 is not minimal (s1 shortens it on the right): everything cancels
res = pushforward_tilting(a2.parse_word('2,1'), {1})
print('\npush of T(2,1) through J={1}: zero =', res.is_zero)

# quotient by everything: only the point class survives; the vanishing
# of every other column is the alternating Euler identity in disguise
a3 = build_system('A3')
print('\nfull quotient of S4, column by column:')
for alpha in a3.enumerate_ball(2):
    res = pushforward_tilting(alpha, set(a3.labels))
    tag = 'zero' if res.is_zero else 'survives'
    print(f'  {a3.format_word(alpha):<6} {tag}')

# the subgroup must be finite for the quotient to have proper fibers;
# affine systems therefore only admit proper subsets
aff = build_system('affine A1')
try:
    pushforward_tilting(aff.simple(1), {0, 1})
except ValueError as exc:
    print('\naffine full subset rejected:', exc)

res = pushforward_tilting(aff.parse_word('0,1,0'), {1})
print('affine push through J={1}: zero =', res.is_zero)
res = pushforward_tilting(aff.parse_word('0,1,0'), {0})
print('affine push through J={0}:',
      {aff.format_word(k): str(v) for k, v in res.coeffs.items()})
