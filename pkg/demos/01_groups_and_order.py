"""
Building (affine) Weyl groups and walking their Bruhat order
============================================================

Everything downstream rests on the group layer: exact reflection
matrices, interned elements, canonical words, and the order recursion.
"""

from tiltweights import build_system

# a finite type by label; generators are numbered 1..n
b2 = build_system('B2')
print('B2 Cartan rows:', b2.cartan)

w0 = b2.longest_element()
print('longest element:', b2.format_word(w0), 'of length', w0.length)

full = b2.enumerate_ideal(w0)
print('group order:', len(full))

# words normalize themselves: a non-reduced spelling collapses
w = b2.parse_word('1,1,2,1')
print("parse_word('1,1,2,1') ->", b2.format_word(w))

# Bruhat order: x <= y exactly when some reduced word of y contains one
# of x as a subsequence; the recursion below never builds subsequences
for x in full:
    below = [b2.format_word(z) for z in full if b2.bruhat_leq(z, x)]
    print(f'{b2.format_word(x):<10} covers-or-equals {len(below)} elements')

# affine types get the new node as generator 0 and grow forever, so we
# only ever look at balls of bounded length
aff = build_system('affine A2')
print('\naffine A2 labels:', aff.labels)
for radius in range(5):
    print(f'ball of radius {radius}:', len(aff.enumerate_ball(radius)),
          'elements')

# parabolic cosets and their shortest representatives
a2 = build_system('A2')
ball = a2.enumerate_ball(3)
part = a2.coset_partition(ball, {1})
print('\nS3 left cosets of the subgroup <s1>:')
for rep in part.reps:
    members = ', '.join(a2.format_word(m) for m in part.fibers[rep])
    print(f'  rep {a2.format_word(rep):<5} fiber {{{members}}}')
