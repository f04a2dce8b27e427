"""Regenerates splitting.tsv with sympy as an independent reference.

Columns: ascending coefficients; p; sorted (e,f) parts; v_p of the index
[O_K : Z[x]/(f)].
"""
import random
import signal

from sympy import Poly, ZZ, discriminant, factorint, symbols
from sympy.polys.numberfields.basis import round_two
from sympy.polys.numberfields.primes import prime_decomp

x = symbols("x")
rng = random.Random(20240611)


def _timeout(*_):
    raise TimeoutError


signal.signal(signal.SIGALRM, _timeout)
rows = []
seen = set()
want_random, want_hard = 50, 50
hard = 0
while len(rows) < 3 * (want_random + want_hard):
    n = rng.choice([3, 4])
    c = [rng.randint(-20, 20) for _ in range(n)] + [1]
    if tuple(c) in seen:
        continue
    f = Poly(list(reversed(c)), x, domain=ZZ)
    if not f.is_irreducible:
        continue
    d = int(discriminant(f))
    bad = [p for p in (2, 3, 5) if d % (p * p) == 0]
    need_hard = len(rows) >= 3 * want_random
    if need_hard and not bad:
        continue
    seen.add(tuple(c))
    signal.alarm(20)
    try:
        zk, dk = round_two(f)
        index2 = d // int(dk)
        fac = factorint(index2)
        found = [(c, p, sorted((P.e, P.f) for P in prime_decomp(p, T=f, ZK=zk, dK=dk)), fac.get(p, 0) // 2) for p in (2, 3, 5)]
    except Exception:
        # sympy fails or stalls on a few inputs; skip them
        continue
    finally:
        signal.alarm(0)
    rows.extend(found)

with open("splitting.tsv", "w") as out:
    out.write("# coeffs\tp\tparts\tv_p(index)\n")
    for c, p, parts, v in rows:
        out.write("%s\t%d\t%s\t%d\n" % (",".join(map(str, c)), p, " ".join("%d,%d" % q for q in parts), v))
