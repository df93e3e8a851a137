"""Monomial matrices, the torus, and parametrized lifts.

A matrix with exactly one nonzero entry per row and column normalizes the
diagonal torus; splitting off the underlying permutation is what makes
word evaluation compatible with the symmetric group.  Lifts of braid
generators depend on one nonzero parameter each, and two parameter
choices are conjugate by a diagonal matrix whenever a certain rational
root exists; both directions are shown below.
"""

from fractions import Fraction

from titslift import (GroupElement, Matrix, NoExactWitness, TitsSection,
                      conjugation_witness, coset_class, evaluate_word,
                      normalizer_decompose, parse_word, sigma_generator,
                      torus_generation_witness)

n = 2
s = TitsSection(n, (Fraction(2, 3), 5))
print("section parameters:", s.params)
g1 = sigma_generator(s, 1)
print("lift of generator 1:")
print(" ", g1.m)
print("its square:", (g1 * g1).m, " (diagonal, order four)")
print()

g = evaluate_word(s, parse_word(n, "1 2 1"))
dec = normalizer_decompose(g)
print("word '1 2 1' evaluates to:")
print(" ", g.m)
print("permutation part:", dec.sigma, " scales:", dec.scales)
print("coset class:", coset_class(g))
assert dec.reconstruct().m == g.m
print()

# Every diagonal determinant-one matrix factors through the rank-one
# subgroups sitting in consecutive slots.
t = GroupElement(Matrix.diagonal([Fraction(3, 2), Fraction(4, 3), Fraction(1, 2)]))
factors = torus_generation_witness(t)
print("torus element", t.m.diagonal_entries())
for k, f in enumerate(factors, start=1):
    print(f"  factor {k}:", f.m.diagonal_entries())
print()

# Two sections are conjugate by a torus element when the required root
# is rational; otherwise the witness constructor says so instead of
# returning an approximation.
a = TitsSection(1, (1,))
b = TitsSection(1, (4,))
t = conjugation_witness(a, b)
print("witness conjugating the a=4 lift to the a=1 lift:",
      t.m.diagonal_entries())
try:
    conjugation_witness(a, TitsSection(1, (2,)))
except NoExactWitness as exc:
    print("a=2 needs sqrt(2), so:", exc)
