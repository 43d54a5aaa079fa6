"""
Line and conic arrangements, from monodromy table to closed link.

Walks through the small configurations: three generic lines, the triple
point table, a conic with a tangent line, and two conics. For each one it
prints the product of the local braids, a shorter equal word where one is
known, and what the closure looks like.

    python demos/arrangements.py
"""

from braidlinks import braid as b
from braidlinks import halftwist as ht
from braidlinks import links as L
from braidlinks import monodromy as m


def show(title, w):
    s = L.summarize(w)
    print(f"\n== {title}")
    print(f"   product   {b.format_word(w)}")
    print(f"   normal    {b.normal_form(w)}")
    print(f"   closure   {s.component_count} components, lk {[list(r) for r in s.linking_matrix]}")
    print(f"   Jones     {L.format_jones(s.jones)}")
    print(f"   atlas     {L.identify(s)}")


# Generic lines: every pair meets once, and the node braids multiply to the full twist.
for mm in (3, 4, 5):
    fac = m.generic_line_factorization(mm)
    prod = m.table_product(fac)
    print(f"{mm} generic lines: {len(fac)} nodes, product == full twist: {b.equal(prod, m.full_twist(mm))}")

show("triangle of lines", m.builtin("triangle").product())

table = m.builtin("table1")
for label, w in table.factorization().factors:
    print(f"   factor {label:>16}  {b.format_word(w)}")
show("triple point plus a line", table.product())
print("   stated    s2 s3 s1 s2 (s1 s2 s3)^2 ->", b.equal(table.product(), ht.evaluate("s2 s3 s1 s2 (s1 s2 s3)^2", 4)))

# The conic-line product lives on 3 strands but one Markov move takes it to 2.
conic_line = m.builtin("prop16-A").product()
show("conic with tangent line", conic_line)
small = b.markov_destabilize(conic_line)
print(f"   destabilized to {small.strands} strands: {b.format_word(small)} ({L.identify(L.summarize(small))})")

two_conics = m.builtin("prop17-B").product()
show("two conics meeting in four points", two_conics)
model = L.cable(L.torus_braid(2, 4), L.CableSpec(0, 2, 1))
print("   same invariants as T(2,4) with one component (2,1)-cabled:",
      L.summarize(two_conics).same_link_invariants(L.summarize(model)))
