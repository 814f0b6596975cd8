"""The side/middle decomposition of the thirteen-vertex algebra.

Each one-sided band contributes a side part: the two-sided string closure
of a trivial walk at an anchor whose arrows all stay on the band.  The
middle part collects every string that straddles the side parts.

Run from the repository root:  python3 demos/decompose_thirteen.py
"""

from stringalg import fixtures
from stringalg.automaton import enumerate_strings
from stringalg.decomp import check_structure, decompose, support_cover_check
from stringalg.walks import serialize_walk, walk_vertices

p = fixtures.thirteen()
dec = decompose(p)

for part in dec.parts:
    anchor = f"  (anchor {part.anchor})" if part.anchor else ""
    print(f"{part.label}{anchor}")
    print(f"   objects: {', '.join(sorted(part.objects, key=int))}")
    print(f"   arrows:  {', '.join(sorted(part.arrows))}")

print()
print("Structural checks:")
report = check_structure(p, dec)
for key, value in report.as_dict().items():
    print(f"   {key}: {'pass' if value else 'FAIL'}")
print(f"   support cover up to length 10: {support_cover_check(p, 10, dec)}")

print()
print("A few straddling strings that generate the middle part:")
for w in enumerate_strings(p, 2):
    if len(w.letters) != 2:
        continue
    verts = set(walk_vertices(p.quiver, w))
    if not any(verts <= part.objects for part in dec.side_parts):
        print(f"   {serialize_walk(w)}")
