"""Words in braid generators and their shadow in the symmetric group.

A word is a sequence of signed generator indices.  Free reduction cancels
adjacent inverse pairs; the projection forgets signs and multiplies out
adjacent transpositions.  A word is called pure when that projection is
the identity permutation.
"""

from titslift import (is_pure, natural_projection, parse_word,
                      relation_instances, word_to_text)

n = 3
w = parse_word(n, "1 2 -1 3 1 -1")
print("word:", word_to_text(w))
print("freely reduced:", word_to_text(w.free_reduce()))
print("projection to permutations:", natural_projection(w))
print("pure?", is_pure(w))
print()

conj = parse_word(n, "1 -1")
print("'1 -1' is pure:", is_pure(conj))
print("'1 1' is pure:", is_pure(parse_word(n, "1 1")),
      " (squares vanish in the symmetric group)")
print()

# The generated relation table drives the verification commands; each
# instance is a pair of words that must evaluate to the same matrix.
print("relation instances for rank 2:")
for inst in relation_instances(2):
    print(f"  [{inst.tag}] i={inst.i} j={inst.j}:  "
          f"{word_to_text(inst.left) or '(empty)'}  ==  "
          f"{word_to_text(inst.right) or '(empty)'}")
