"""
Regenerated 2-points and 3-points.

A 2-point regenerates to a conic plus a doubled line, a 3-point of the first
type to a conic plus two doubled lines, and one of the second type to two
conics plus a doubled line. This script multiplies the regenerated tables,
checks the quoted simplifications and compares the closures with cable
models.
"""

from braidlinks import braid as b
from braidlinks import halftwist as ht
from braidlinks import links as L
from braidlinks import monodromy as m


def line(label, w):
    s = L.summarize(w)
    print(f"{label:<14} exp {b.exponent_sum(w):>3}  components {s.component_count}  "
          f"pairwise lk {s.pairwise_linking()}  unknotted {s.unknotted_components}")


print("-- tangency regenerates into three cusps")
for side in ("left", "right"):
    exprs = m.regenerate_tangency(1, 2, side, 4)
    for e in exprs:
        print(f"   {side:<5} {str(e):<28} {b.format_word(b.free_reduce(ht.compile(e, 4)))}")
    print(f"   product {b.format_word(b.free_reduce(b.product([ht.compile(e, 4) for e in exprs], 4)))}")

print("\n-- 2-points")
a, bb = m.builtin("2pt-A").product(), m.builtin("2pt-B").product()
line("case A", a)
line("case B", bb)
print("rotate(A) == B:", b.equal(b.rotate(a), bb))
model = L.cable(L.torus_braid(2, 4), L.CableSpec(0, 2, 1))
print("Jones matches T(2,4) with a (2,1)-cable:", L.jones(a) == L.jones(model))

print("\n-- 3-points of the first type")
words = {c: m.builtin(f"3pt-type1-{c}").product() for c in "ABC"}
for c, w in words.items():
    line(f"case {c}", w)
print("A equals its quoted positive word:", b.equal(words["A"], ht.evaluate(m.TYPE1_A_WORD, 6)))
print("B equals its quoted positive word:", b.equal(words["B"], ht.evaluate(m.TYPE1_B_WORD, 6)))
print("rotate(C) == A:", b.equal(b.rotate(words["C"]), words["A"]))
t33 = L.cable_all(L.torus_braid(3, 3), 2, 1)
print("Jones matches T(3,3) with every component (2,1)-cabled:", L.jones(words["A"]) == L.jones(t33))

print("\n-- the 3-point of the second type")
p = m.builtin("3pt-type2").product()
line("five items", p)
stated = ht.evaluate(m.TYPE2_WORD, 6)
print("normal form of the item product:", b.normal_form(p))
print("equal to the quoted length-28 word:", b.equal(p, stated))
print("conjugate by", m.TYPE2_CONJUGATOR, "equals it:", b.equal(b.conjugate(p, m.type2_conjugator()), stated))
print("a positive conjugate found by cycling:", b.format_word(b.positive_conjugate(p)))
print("linking matrix:", L.linking_matrix(p))

one = L.summarize(words["A"])
two = L.summarize(p)
print(f"\nfirst vs second type: {one.component_count} vs {two.component_count} components,"
      f" same link: {one.same_link_invariants(two)}")
