"""Pure-Python polynomial kernels over a finite field.

Polynomials are lists of element codes, lowest degree first, with no
trailing zeros.  Every function takes a field descriptor ``F`` (see
``finite_field.KernelField``) whose ``mode`` is ``"prime"`` (codes are
residues mod ``F.p``), ``"table"`` (exp/log and Zech logarithm tables) or
``"generic"`` (scalar callbacks on the owning context).

``_ckernels.pyx`` implements the same functions for the first two modes.
"""


def _ops(F):
    """Return (add, sub, mul, inv) scalar callables for descriptor F."""
    if F.mode == "prime":
        p = F.p
        return (
            lambda a, b: (a + b) % p,
            lambda a, b: (a - b) % p,
            lambda a, b: a * b % p,
            lambda a: pow(a, p - 2, p),
        )
    if F.mode == "table":
        zech, negt, exp, log, invt = F.zech_list, F.neg_list, F.exp_list, F.log_list, F.inv_list
        n = F.q - 1

        def add(a, b):
            if a == 0:
                return b
            if b == 0:
                return a
            la = log[a]
            z = zech[(log[b] - la) % n]
            return 0 if z < 0 else exp[la + z]

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[log[a] + log[b]]

        return add, lambda a, b: add(a, negt[b]), mul, lambda a: invt[a]
    ctx = F.ctx
    return ctx.add, ctx.sub, ctx.mul, ctx.inv


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(F, a, b):
    if not a or not b:
        return []
    if F.mode == "prime":
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([c % p for c in out])
    add, _, fmul, _ = _ops(F)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], fmul(x, y))
    return _trim(out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    if F.mode == "prime":
        p = F.p
        inv_lc = pow(b[-1], p - 2, p)
        r = list(a)
        q = [0] * (len(a) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                c = c * inv_lc % p
                q[i - db] = c
                base = i - db
                for j in range(db):
                    r[base + j] -= c * b[j]
            r[i] = 0
        return _trim(q), _trim([x % p for x in r[:db]])
    add, sub, fmul, inv = _ops(F)
    inv_lc = inv(b[-1])
    r = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = fmul(c, inv_lc)
            q[i - db] = c
            base = i - db
            for j in range(db):
                if b[j]:
                    r[base + j] = sub(r[base + j], fmul(c, b[j]))
        r[i] = 0
    return _trim(q), _trim(r[:db])


def rem(F, a, b):
    return divmod_(F, a, b)[1]


def mulmod(F, a, b, m):
    return rem(F, mul(F, a, b), m)


def powmod(F, a, e, m):
    result = [1] if len(m) > 1 else []
    base = rem(F, a, m)
    while e > 0:
        if e & 1:
            result = mulmod(F, result, base, m)
        e >>= 1
        if e:
            base = mulmod(F, base, base, m)
    return result


def monic(F, a):
    if not a or a[-1] == 1:
        return list(a)
    _, _, fmul, inv = _ops(F)
    c = inv(a[-1])
    return [fmul(x, c) for x in a]


def gcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def frobenius_matrix(F, m):
    """Rows x^(q*j) mod m for 0 <= j < deg m."""
    d = len(m) - 1
    xq = powmod(F, [0, 1], F.q, m)
    rows = [[1] if d > 0 else []]
    for _ in range(1, d):
        rows.append(mulmod(F, rows[-1], xq, m))
    return rows


def frobenius_apply(F, rows, h):
    """h(x)^q mod m given the rows of ``frobenius_matrix(F, m)``."""
    if not rows:
        return []
    d = len(rows)
    if len(h) > d:
        raise ValueError("h must be reduced modulo m")
    if F.mode == "prime":
        p = F.p
        acc = [0] * d
        for j, c in enumerate(h):
            if c:
                for i, v in enumerate(rows[j]):
                    acc[i] += c * v
        return _trim([x % p for x in acc])
    add, _, fmul, _ = _ops(F)
    acc = [0] * d
    for j, c in enumerate(h):
        if c:
            for i, v in enumerate(rows[j]):
                if v:
                    acc[i] = add(acc[i], fmul(c, v))
    return _trim(acc)


def functional_graph(succ):
    """Tail length and eventual cycle length of every node of a map.

    ``succ[i]`` is the image of node i.  Returns two lists (tail, cycle).
    """
    n = len(succ)
    tail = [-1] * n
    cyc = [0] * n
    state = [0] * n  # 0 unseen, 1 on current path, 2 done
    for start in range(n):
        if state[start]:
            continue
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = succ[v]
        if state[v] == 1:
            # closed a new cycle at v
            idx = path.index(v)
            cycle = path[idx:]
            for u in cycle:
                tail[u] = 0
                cyc[u] = len(cycle)
                state[u] = 2
            path = path[:idx]
        for u in reversed(path):
            w = succ[u]
            tail[u] = tail[w] + 1
            cyc[u] = cyc[w]
            state[u] = 2
    return tail, cyc
