"""
Canonical-basis columns and the classical polynomials
=====================================================

The solver works in a bar-stable Laurent normalization where the column
entry for (v, w) is h_{v,w} = t^(len(w) - len(v)) P_{v,w}(t^-2); the
classical polynomial in q falls out by re-indexing.
"""

from tiltweights import build_system, kl_P, kl_h, mu

a3 = build_system('A3')

# the smallest interesting value lives in the 4-strand symmetric group:
# every smaller group has all classical polynomials equal to 1
x = a3.simple(2)
y = a3.parse_word('2,1,3,2')
print('h  =', kl_h(x, y))
print('P  =', kl_P(x, y).to_str('q'))
print('mu =', mu(x, y))

# one whole column, in the order the solver produces it
print('\ncolumn of', a3.format_word(y))
for v in a3.enumerate_ideal(y):
    print(f'  {a3.format_word(v):<10} {kl_h(v, y)}')

# in the infinite dihedral (affine A1) group every entry is a pure power
aff = build_system('affine A1')
top = aff.parse_word('0,1,0,1')
print('\naffine A1 column of', aff.format_word(top))
for v in aff.enumerate_ideal(top):
    print(f'  {aff.format_word(v):<10} {kl_h(v, top)}')
