"""Hand-built instances that drive the solvers into their rarer branches."""
from eqcolor.graph import Coloring, Graph


def case2_instance():
    """Nearly equitable 6-coloring of a 48-vertex graph on which only the
    two-leaf solo-root repair applies.

    Color 0 is small (7), color 1 large (9), colors 1 and 2 form the B side,
    colors 3, 4, 5 are terminal.  Each terminal class has six roots and two
    non-roots; fifteen B vertices see both non-roots of one terminal class.
    """
    sizes = [7, 9, 8, 8, 8, 8]
    classes, v = [], 0
    for s in sizes:
        classes.append(list(range(v, v + s)))
        v += s
    edges = []
    a0 = classes[0]
    B = classes[1] + classes[2]
    roots = {c: classes[c][:6] for c in (3, 4, 5)}
    nonroots = {c: classes[c][6:] for c in (3, 4, 5)}
    dbl = {z: 3 + i % 3 for i, z in enumerate(B[:15])}
    slot = {c: 0 for c in (3, 4, 5)}
    a0_load = []
    for z in B:
        a0_load.append(z)
        for c in (3, 4, 5):
            if dbl.get(z) == c:
                edges += [(z, x) for x in nonroots[c]]
            else:
                edges.append((z, roots[c][slot[c] // 2]))
                slot[c] += 1
    for c, d in ((3, 4), (3, 5), (4, 5)):
        edges += list(zip(roots[c], roots[d]))
    a0_load += roots[3] + roots[4] + roots[5]
    for i, u in enumerate(a0_load):
        edges.append((u, a0[i % 7]))
    col = [c for c, s in enumerate(sizes) for _ in range(s)]
    return Graph(sum(sizes), edges), Coloring(col, 6)
