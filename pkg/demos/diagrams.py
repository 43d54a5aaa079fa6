"""
Degeneration diagrams: orders on vertices and lines, and the k-points.

The order in which vertices are numbered decides which regeneration case a
3-point of the first type falls into. Here the pillow is numbered three
ways and each corner is reported with its case.
"""

from braidlinks import monodromy as m

for name, build in m.DIAGRAMS.items():
    d = build()
    order = [d.name(v) for v in m.lex_order_vertices(d)]
    print(f"{name}: vertices in lexicographic order {' '.join(order)}")
    for v in range(len(d.vertices)):
        try:
            found = m.classify_k_points(d, [v])
        except m.UnsupportedFeature as exc:
            print(f"   {exc}")
            continue
        for kp in found:
            if kp.k >= 2:
                print(f"   {d.name(kp.vertex)} is a {kp.k}-point" + (f" of type {kp.kind}" if kp.kind else ""))

pillow = m.pillow_diagram()
corners = [pillow.names.index(x) for x in ("v1", "v3", "v6", "v8")]
print("\npillow corners by numbering:")
for label, order in m.pillow_orders().items():
    cases = {pillow.name(v): m.type1_case(pillow, v, order) for v in corners}
    print(f"   {label:<14} {cases}")
