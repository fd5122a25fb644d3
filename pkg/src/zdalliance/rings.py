"""Finite commutative rings with identity on canonical integer element ids.

Every ring places its elements on the ids ``0 .. order-1`` with id 0 the
additive identity.  Arithmetic is computed on demand from the construction
so memory stays linear in the order; full operation tables are memoized
only below order 256.  Four constructions are provided:

* ``make_zn(n)``        -- residues modulo ``n``; id i is the residue i.
* ``make_gf(p, k)``     -- the field of order p**k, as polynomials modulo
                           the lexicographically smallest monic irreducible
                           of degree k (ids encode coefficients base p, so
                           id 1 is the constant polynomial 1).
* ``make_product(fs)``  -- componentwise arithmetic; ids are the mixed-radix
                           encoding of component ids, first factor most
                           significant.  The multiplicative identity of a
                           product is ``ring.one``, which is not id 1.
* ``make_idealization(R, r)`` -- R (+) R**r with (a,n)(b,m) = (ab, am+bn);
                           the module part squares to zero.  Ids place the
                           base component least significant, so id 1 is the
                           identity (1, 0).

Constructions are pure and deterministic: the same parameters always yield
the same element encoding, which downstream layers rely on for stable
vertex orders and reports.  All constructors enforce an order cap (default
4096) and fail fast above it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 4096

# Memoizing full tables is permitted below order 256; above that all
# arithmetic stays on demand.
_MEMO_MAX_ORDER = 255


class CapacityError(ValueError):
    """A construction or operation exceeds its configured size cap."""


def _resolve_cap(order_cap: Optional[int]) -> int:
    cap = DEFAULT_ORDER_CAP if order_cap is None else int(order_cap)
    if cap < 2:
        raise ValueError(f"order cap must be at least 2, got {cap}")
    return cap


def _check_cap(order: int, order_cap: Optional[int], what: str) -> None:
    cap = _resolve_cap(order_cap)
    if order > cap:
        raise CapacityError(f"{what} has order {order}, above the cap {cap}")


class FiniteRing:
    """Immutable finite commutative ring with identity.

    ``add``/``mul``/``neg`` are total over ``0 <= id < order``.  ``one`` is
    the id of the multiplicative identity (1 except for direct products,
    whose encoding is fixed by the mixed-radix contract).
    """

    __slots__ = ("order", "label", "one", "_add", "_mul", "_neg",
                 "_label_of", "_add_t", "_mul_t")

    def __init__(self, order: int, add: Callable[[int, int], int],
                 mul: Callable[[int, int], int], neg: Callable[[int], int],
                 one: int, label: str,
                 element_label: Optional[Callable[[int], str]] = None):
        self.order = order
        self.label = label
        self.one = one
        self._add = add
        self._mul = mul
        self._neg = neg
        self._label_of = element_label if element_label is not None else str
        if order <= _MEMO_MAX_ORDER:
            rng = range(order)
            self._add_t = [[add(a, b) for b in rng] for a in rng]
            self._mul_t = [[mul(a, b) for b in rng] for a in rng]
        else:
            self._add_t = None
            self._mul_t = None

    def add(self, a: int, b: int) -> int:
        t = self._add_t
        return t[a][b] if t is not None else self._add(a, b)

    def mul(self, a: int, b: int) -> int:
        t = self._mul_t
        return t[a][b] if t is not None else self._mul(a, b)

    def neg(self, a: int) -> int:
        return self._neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg(b))

    def element_label(self, a: int) -> str:
        return self._label_of(a)

    @property
    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"FiniteRing({self.label!r}, order={self.order})"


# ---------------------------------------------------------------------------
# constructions


def make_zn(n: int, order_cap: Optional[int] = None) -> FiniteRing:
    """Residue ring Z_n on ids 0..n-1."""
    if n < 2:
        raise ValueError(f"Z_n needs n >= 2, got {n}")
    _check_cap(n, order_cap, f"Z{n}")
    return FiniteRing(
        n,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        one=1,
        label=f"Z{n}",
    )


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(v: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    # Little-endian coefficient lists; b must be monic.
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    while r and r[-1] == 0:
        r.pop()
    return r


def _monic_polys(p: int, deg: int):
    for v in range(p ** deg):
        yield _digits(v, p, deg) + [1]


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> list[int]:
    # Candidates X^k + c, ordered by the base-p value of c; equivalently
    # lexicographic on coefficients read from the highest degree down.
    for poly in _monic_polys(p, k):
        if _is_irreducible(poly, p):
            return poly
    raise RuntimeError(f"no irreducible of degree {k} over GF({p})")  # pragma: no cover


def make_gf(p: int, k: int = 1, order_cap: Optional[int] = None) -> FiniteRing:
    """Galois field GF(p**k); ids encode polynomial coefficients base p."""
    if not is_prime(p):
        raise ValueError(f"GF needs a prime characteristic, got {p}")
    if k < 1:
        raise ValueError(f"GF needs extension degree >= 1, got {k}")
    q = p ** k
    _check_cap(q, order_cap, f"GF({q})")
    if k == 1:
        ring = make_zn(p, order_cap)
        return FiniteRing(p, ring._add, ring._mul, ring._neg, 1, f"GF({p})")

    modulus = _smallest_irreducible(p, k)  # little-endian, monic of degree k
    low = modulus[:k]

    def add(a: int, b: int) -> int:
        da, db = _digits(a, p, k), _digits(b, p, k)
        v = 0
        for i in range(k - 1, -1, -1):
            v = v * p + (da[i] + db[i]) % p
        return v

    def neg(a: int) -> int:
        da = _digits(a, p, k)
        v = 0
        for i in range(k - 1, -1, -1):
            v = v * p + (-da[i]) % p
        return v

    def mul(a: int, b: int) -> int:
        da, db = _digits(a, p, k), _digits(b, p, k)
        conv = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    conv[i + j] = (conv[i + j] + ca * cb) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j in range(k):
                    conv[i - k + j] = (conv[i - k + j] - c * low[j]) % p
        v = 0
        for i in range(k - 1, -1, -1):
            v = v * p + conv[i]
        return v

    return FiniteRing(q, add, mul, neg, 1, f"GF({q})")


def make_product(factors: Sequence[FiniteRing],
                 order_cap: Optional[int] = None) -> FiniteRing:
    """Direct product; ids are mixed-radix, first factor most significant."""
    factors = tuple(factors)
    if len(factors) < 2:
        raise ValueError("a product needs at least 2 factors")
    order = 1
    for f in factors:
        order *= f.order
    _check_cap(order, order_cap, "product")

    orders = tuple(f.order for f in factors)

    def split(a: int) -> list[int]:
        comps = []
        for o in reversed(orders):
            comps.append(a % o)
            a //= o
        comps.reverse()
        return comps

    def join(comps: Sequence[int]) -> int:
        v = 0
        for o, c in zip(orders, comps):
            v = v * o + c
        return v

    def add(a: int, b: int) -> int:
        return join([f.add(x, y) for f, x, y in zip(factors, split(a), split(b))])

    def mul(a: int, b: int) -> int:
        return join([f.mul(x, y) for f, x, y in zip(factors, split(a), split(b))])

    def neg(a: int) -> int:
        return join([f.neg(x) for f, x in zip(factors, split(a))])

    def element_label(a: int) -> str:
        parts = [f.element_label(x) for f, x in zip(factors, split(a))]
        return "(" + ",".join(parts) + ")"

    def factor_label(f: FiniteRing) -> str:
        return f"({f.label})" if " x " in f.label else f.label

    one = join([f.one for f in factors])
    label = " x ".join(factor_label(f) for f in factors)
    return FiniteRing(order, add, mul, neg, one, label, element_label)


def make_idealization(base: FiniteRing, rank: int = 1,
                      order_cap: Optional[int] = None) -> FiniteRing:
    """Idealization R (+) R**rank: (a,n)(b,m) = (ab, am+bn)."""
    if rank < 1:
        raise ValueError(f"idealization rank must be >= 1, got {rank}")
    o = base.order
    order = o ** (rank + 1)
    _check_cap(order, order_cap, "idealization")

    def split(x: int) -> tuple[int, list[int]]:
        a = x % o
        x //= o
        mods = []
        for _ in range(rank):
            mods.append(x % o)
            x //= o
        return a, mods

    def join(a: int, mods: Sequence[int]) -> int:
        v = 0
        for m in reversed(mods):
            v = v * o + m
        return v * o + a

    def add(x: int, y: int) -> int:
        a, n = split(x)
        b, m = split(y)
        return join(base.add(a, b), [base.add(u, v) for u, v in zip(n, m)])

    def mul(x: int, y: int) -> int:
        a, n = split(x)
        b, m = split(y)
        return join(base.mul(a, b),
                    [base.add(base.mul(a, v), base.mul(b, u))
                     for u, v in zip(n, m)])

    def neg(x: int) -> int:
        a, n = split(x)
        return join(base.neg(a), [base.neg(u) for u in n])

    def element_label(x: int) -> str:
        a, n = split(x)
        mods = ",".join(base.element_label(u) for u in n)
        return f"({base.element_label(a)}; {mods})"

    label = f"Id({base.label}, {rank})"
    return FiniteRing(order, add, mul, neg, 1, label, element_label)


# ---------------------------------------------------------------------------
# interrogation


def zero_divisors(ring: FiniteRing) -> frozenset[int]:
    """All x with xy = 0 for some y != 0, plus 0 itself."""
    n = ring.order
    table = ring._mul_t
    out = {0}
    if table is not None:
        for x in range(1, n):
            row = table[x]
            if any(row[y] == 0 for y in range(1, n)):
                out.add(x)
    else:
        for x in range(1, n):
            mul = ring.mul
            if any(mul(x, y) == 0 for y in range(1, n)):
                out.add(x)
    return frozenset(out)


def annihilator(ring: FiniteRing, x: int) -> frozenset[int]:
    """Ann(x) = all y with xy = 0; always an ideal."""
    if not 0 <= x < ring.order:
        raise ValueError(f"element id {x} out of range")
    mul = ring.mul
    return frozenset(y for y in range(ring.order) if mul(x, y) == 0)


def units(ring: FiniteRing) -> frozenset[int]:
    """All invertible elements."""
    one = ring.one
    mul = ring.mul
    n = ring.order
    return frozenset(x for x in range(n)
                     if any(mul(x, y) == one for y in range(n)))


def nilradical(ring: FiniteRing) -> frozenset[int]:
    """All nilpotent elements, by iterated powering (exponent capped)."""
    out = set()
    mul = ring.mul
    for x in range(ring.order):
        y = x
        seen = set()
        for _ in range(ring.order):
            if y == 0:
                out.add(x)
                break
            if y in seen:
                break
            seen.add(y)
            y = mul(y, x)
    return frozenset(out)


def is_reduced(ring: FiniteRing) -> bool:
    return nilradical(ring) == frozenset({0})


@dataclass(frozen=True)
class LocalStructure:
    """Maximal ideal of a local ring and the least t with M**t = 0."""
    maximal_ideal: frozenset[int]
    nilpotency_index: Optional[int]


def _additive_closure(ring: FiniteRing, seed: set[int]) -> frozenset[int]:
    add = ring.add
    closed = set(seed) | {0}
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            s = add(x, y)
            if s not in closed:
                closed.add(s)
                frontier.append(s)
    return frozenset(closed)


def local_structure(ring: FiniteRing) -> Optional[LocalStructure]:
    """Maximal ideal and nilpotency index when the ring is local, else None.

    A finite commutative ring is local exactly when its zero-divisors are
    additively closed (every element is a unit or a zero-divisor, so the
    zero-divisors then form the unique maximal ideal).
    """
    zd = zero_divisors(ring)
    add = ring.add
    for a in zd:
        for b in zd:
            if add(a, b) not in zd:
                return None
    m = zd
    zero_only = frozenset({0})
    if m == zero_only:
        return LocalStructure(m, 1)
    mul = ring.mul
    power = m
    index = 1
    while index <= ring.order:
        if power == zero_only:
            return LocalStructure(m, index)
        products = {mul(a, b) for a in m for b in power}
        nxt = _additive_closure(ring, products)
        if nxt == power:
            return LocalStructure(m, None)
        power = nxt
        index += 1
    return LocalStructure(m, None)  # pragma: no cover - cap never hit for local rings


# ---------------------------------------------------------------------------
# axiom verification (vectorized; intended for tests and demos)


def verify_ring_axioms(ring: FiniteRing) -> None:
    """Exhaustively check the commutative-ring axioms; raises on failure.

    Builds full numpy operation tables (order**2 evaluations) and checks
    associativity and distributivity in order**3 vectorized steps, which is
    practical up to order 512.
    """
    n = ring.order
    ids = range(n)
    add = np.array([[ring.add(a, b) for b in ids] for a in ids], dtype=np.int32)
    mul = np.array([[ring.mul(a, b) for b in ids] for a in ids], dtype=np.int32)
    neg = np.array([ring.neg(a) for a in ids], dtype=np.int32)

    if not (add == add.T).all():
        raise ValueError(f"{ring.label}: addition is not commutative")
    if not (mul == mul.T).all():
        raise ValueError(f"{ring.label}: multiplication is not commutative")
    if not (add[:, 0] == np.arange(n)).all():
        raise ValueError(f"{ring.label}: 0 is not the additive identity")
    if not (add[np.arange(n), neg] == 0).all():
        raise ValueError(f"{ring.label}: negation is not an additive inverse")
    if not (mul[:, ring.one] == np.arange(n)).all():
        raise ValueError(f"{ring.label}: {ring.one} is not a multiplicative identity")
    for a in ids:
        if not (add[add[a], :] == add[a, add]).all():
            raise ValueError(f"{ring.label}: addition not associative at {a}")
        if not (mul[mul[a], :] == mul[a, mul]).all():
            raise ValueError(f"{ring.label}: multiplication not associative at {a}")
        if not (mul[a, add] == add[mul[a][:, None], mul[a][None, :]]).all():
            raise ValueError(f"{ring.label}: distributivity fails at {a}")
