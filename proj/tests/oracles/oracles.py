"""Independent brute-force oracles used to freeze expected values in the C++ tests.

Nothing here shares code with the C++ library; everything is computed by naive
enumeration over explicit sets. Run with `python3 tests/oracles/oracles.py`.
"""
import itertools
import math
from fractions import Fraction


def prime_field(p):
    return list(range(p))


def gf4():
    # elements a + b*x encoded as a | (b << 1); modulus x^2 + x + 1
    def add(u, v):
        return u ^ v

    def mul(u, v):
        a = [(u >> i) & 1 for i in range(2)]
        b = [(v >> i) & 1 for i in range(2)]
        c = [0, 0, 0]
        for i in range(2):
            for j in range(2):
                c[i + j] ^= a[i] & b[j]
        # x^2 = x + 1
        if c[2]:
            c[0] ^= 1
            c[1] ^= 1
        return c[0] | (c[1] << 1)
    return 4, add, mul


def field(q):
    if q == 4:
        return gf4()
    return q, (lambda u, v: (u + v) % q), (lambda u, v: (u * v) % q)


def span(vectors, q, d):
    _, add, mul = field(q)
    s = {tuple([0] * d)}
    for v in vectors:
        s = {tuple(add(a, mul(c, b)) for a, b in zip(w, v)) for w in s for c in range(q)}
    return s


def count_subspaces_by_spans(m, d, q):
    """Distinct spans of all d-tuples of vectors whose span has size q^d."""
    vecs = list(itertools.product(range(q), repeat=m))
    seen = set()
    for tup in itertools.product(vecs, repeat=d):
        s = span(tup, q, m)
        if len(s) == q ** d:
            seen.add(frozenset(s))
    return len(seen)


def orbits_spanning(d, q, m):
    """GL_d(q) orbits on spanning m-tuples, by explicit orbit expansion."""
    _, add, mul = field(q)
    vecs = list(itertools.product(range(q), repeat=d))
    gl = []
    for rows in itertools.product(vecs, repeat=d):
        if len(span(rows, q, d)) == q ** d:
            gl.append(rows)

    def act(v, g):
        out = [0] * d
        for i in range(d):
            for j in range(d):
                out[j] = add(out[j], mul(v[i], g[i][j]))
        return tuple(out)
    seen = set()
    orbits = 0
    for t in itertools.product(vecs, repeat=m):
        if len(span(t, q, d)) != q ** d or t in seen:
            continue
        orbits += 1
        for g in gl:
            seen.add(tuple(act(v, g) for v in t))
    return orbits


def compose(a, b):
    return tuple(b[a[i]] for i in range(len(a)))


def closure(gens, n):
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def cyc(n, *cycles):
    img = list(range(n))
    for c in cycles:
        for i, a in enumerate(c):
            img[a] = c[(i + 1) % len(c)]
    return tuple(img)


def distnum(elems, n):
    ident = tuple(range(n))
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n):
            if all(g == ident or any(col[g[i]] != col[i] for i in range(n)) for g in elems):
                return k
    return n


def base_size_wreath(d, q, ell, Lelems):
    """Minimal base of GL_d(q) wr L in product action, naive subset search."""
    _, add, mul = field(q)
    vecs = list(itertools.product(range(q), repeat=d))
    gl = [rows for rows in itertools.product(vecs, repeat=d) if len(span(rows, q, d)) == q ** d]

    def act(v, g):
        out = [0] * d
        for i in range(d):
            for j in range(d):
                out[j] = add(out[j], mul(v[i], g[i][j]))
        return tuple(out)
    points = list(itertools.product(vecs, repeat=ell))
    group = []
    for hs in itertools.product(gl, repeat=ell):
        for k in Lelems:
            group.append((hs, k))

    def image(x, pt):
        hs, k = x
        out = [None] * ell
        for i in range(ell):
            out[k[i]] = act(pt[i], hs[i])
        return tuple(out)
    ident_count = 1
    for size in range(0, len(points) + 1):
        for base in itertools.combinations(points, size):
            fix = sum(1 for x in group if all(image(x, p) == p for p in base))
            if fix == ident_count:
                return size
    return None


def gauss(m, d, q):
    if d > m:
        return 0
    num = 1
    den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


if __name__ == "__main__":
    print("subspace spans (3,2,2):", count_subspaces_by_spans(3, 2, 2))
    print("subspace spans (4,2,3):", count_subspaces_by_spans(4, 2, 3))
    print("subspace spans (3,1,4):", count_subspaces_by_spans(3, 1, 4))
    print("gauss (4,2,3):", gauss(4, 2, 3), "(5,2,4):", gauss(5, 2, 4), "(6,3,2):", gauss(6, 3, 2))
    print("orbits (2,2,3):", orbits_spanning(2, 2, 3), "(1,3,1):", orbits_spanning(1, 3, 1),
          "(2,3,3):", orbits_spanning(2, 3, 3), "(2,4,2):", orbits_spanning(2, 4, 2))
    s2 = closure([cyc(2, (0, 1))], 2)
    s3 = closure([cyc(3, (0, 1)), cyc(3, (0, 1, 2))], 3)
    c3 = closure([cyc(3, (0, 1, 2))], 3)
    print("b(GL1(3) wr S2) =", base_size_wreath(1, 3, 2, s2))
    print("b(GL1(2) wr S2) =", base_size_wreath(1, 2, 2, s2))
    print("b(GL2(2) wr 1) =", base_size_wreath(2, 2, 1, [(0,)]))
    print("b(GL1(4) wr S3) =", base_size_wreath(1, 4, 3, s3))
    print("b(GL1(3) wr C3) =", base_size_wreath(1, 3, 3, c3))
    print("b(GL1(2) wr S3) =", base_size_wreath(1, 2, 3, s3))
    print("b(GL2(2) wr S2) =", base_size_wreath(2, 2, 2, s2))
    c5 = closure([cyc(5, (0, 1, 2, 3, 4))], 5)
    d5 = closure([cyc(5, (0, 1, 2, 3, 4)), cyc(5, (1, 4), (2, 3))], 5)
    agl = closure([cyc(5, (0, 1, 2, 3, 4)), cyc(5, (1, 2, 4, 3))], 5)
    # PSL(2,5) on {inf,0,1,2,3,4} -> {5,0,1,2,3,4}
    psl = closure([cyc(6, (0, 1, 2, 3, 4)), cyc(6, (1, 4), (2, 3)), cyc(6, (5, 0), (1, 4))], 6)
    c7 = closure([cyc(7, tuple(range(7)))], 7)
    d7 = closure([cyc(7, tuple(range(7))), cyc(7, (1, 6), (2, 5), (3, 4))], 7)
    for name, g, n in [("C5", c5, 5), ("D5", d5, 5), ("AGL15", agl, 5), ("PSL25", psl, 6),
                       ("C7", c7, 7), ("D7", d7, 7)]:
        print(name, "order", len(g), "d =", distnum(g, n))
    w22 = closure([cyc(4, (0, 1)), cyc(4, (0, 2), (1, 3))], 4)
    print("S2wrS2 order", len(w22), "d =", distnum(w22, 4))
    w32 = closure([cyc(6, (0, 1)), cyc(6, (0, 1, 2)), cyc(6, (0, 3), (1, 4), (2, 5))], 6)
    print("S3wrS2 order", len(w32), "d =", distnum(w32, 6))
    a4 = closure([cyc(4, (0, 1, 2)), cyc(4, (0, 1, 3))], 4)
    print("A4 order", len(a4), "d =", distnum(a4, 4))
    # minimal Pyber constants
    for ell, order, dl in [(2, 2, 2), (4, 24, 4)]:
        print("Cmin", ell, order, dl, (math.log(dl) + math.log(2)) / (math.log(order) / ell + math.log(2)))
    print("c(q) bounds (2,1,3):", gauss(3, 2, 3), Fraction(1) - Fraction(1, 3) - Fraction(1, 9))
