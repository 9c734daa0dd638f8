"""Metacyclic presentations <x, y | x^e, y^d, y x y^-1 x^-k> and their automorphisms.

Groups whose Sylow subgroups are all cyclic ("C-groups") admit such a
presentation with gcd(e, d) = gcd(e, k) = 1 and the order of k mod e dividing
d.  This module does exact symbolic arithmetic in those coordinates: element
powers through geometric sums, the three standard automorphism families
(theta, phi_u, psi_v), a canonical normal form theta^c phi_u psi_v for the
full automorphism group, and a recognizer that recovers a presentation from a
raw Cayley table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .groups import (FiniteGroup, GroupDefinitionError, HomomorphismError,
                     is_cgroup, is_normal, subgroup_generated)


def geometric_sum(h: int, length: int, modulus: int) -> int:
    """1 + h + ... + h^(length-1) mod modulus, with the empty sum equal to 0.

    Computed by fast doubling: S(h, 2l) = S(h, l) * (1 + h^l).
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if length < 0:
        raise ValueError("length must be nonnegative")
    if modulus == 1:
        return 0
    h %= modulus

    def rec(l: int):
        if l == 0:
            return 0, 1  # (partial sum, h^l)
        s, p = rec(l // 2)
        s = (s * (1 + p)) % modulus
        p = (p * p) % modulus
        if l & 1:
            s = (s + p) % modulus
            p = (p * h) % modulus
        return s, p

    return rec(length)[0]


def multiplicative_order(k: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    k %= modulus
    if math.gcd(k, modulus) != 1:
        raise ValueError(f"{k} is not a unit mod {modulus}")
    cur, n = k, 1
    while cur != 1:
        cur = (cur * k) % modulus
        n += 1
    return n


def _radical(n: int) -> int:
    out, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            out *= d
            while n % d == 0:
                n //= d
        d += 1
    return out * (n if n > 1 else 1)


@dataclass(frozen=True)
class CGroupPresentation:
    """The data (e, d, k) of a metacyclic presentation, with derived symbols.

    z = gcd(e, k - 1) and g_theta = e / z govern the theta family of
    automorphisms; ord is the multiplicative order of k mod e.
    """

    e: int
    d: int
    k: int

    def __post_init__(self):
        if self.e < 1 or self.d < 1:
            raise GroupDefinitionError("e and d must be positive")
        k = 1 if self.e == 1 else self.k % self.e
        object.__setattr__(self, "k", k)
        if math.gcd(self.e, self.d) != 1:
            raise GroupDefinitionError(f"gcd(e, d) must be 1, got ({self.e}, {self.d})")
        if math.gcd(self.e, self.k) != 1:
            raise GroupDefinitionError(f"gcd(e, k) must be 1, got ({self.e}, {self.k})")
        if self.d % self.ord != 0:
            raise GroupDefinitionError(
                f"the order of k mod e ({self.ord}) must divide d ({self.d})")

    @cached_property
    def z(self) -> int:
        return math.gcd(self.e, self.k - 1) if self.e > 1 else 1

    @cached_property
    def g_theta(self) -> int:
        return self.e // self.z

    @cached_property
    def ord(self) -> int:
        return multiplicative_order(self.k, self.e)

    @property
    def order(self) -> int:
        return self.e * self.d

    @cached_property
    def is_normalized(self) -> bool:
        """True when every prime factor of d divides the order of k mod e."""
        return self.ord % _radical(self.d) == 0

    @property
    def spec(self) -> str:
        return f"cgroup {self.e} {self.d} {self.k}"

    # -- element arithmetic in (i, j) coordinates, meaning x^i y^j ---------

    def mul(self, a, b):
        i1, j1 = a
        i2, j2 = b
        return ((i1 + i2 * pow(self.k, j1, self.e)) % self.e if self.e > 1 else 0,
                (j1 + j2) % self.d)

    def inverse(self, a):
        i, j = a
        if self.e == 1:
            return (0, (-j) % self.d)
        k_inv = pow(self.k, -1, self.e)
        return ((-i * pow(k_inv, j % self.d, self.e)) % self.e, (-j) % self.d)

    def power(self, i: int, j: int, length: int):
        """(x^i y^j)^length = (i * S(k^j, length), j * length)."""
        if self.e == 1:
            return (0, (j * length) % self.d)
        kj = pow(self.k, j % self.d, self.e)
        return ((i * geometric_sum(kj, length, self.e)) % self.e,
                (j * length) % self.d)

    def element_order(self, i: int, j: int) -> int:
        jo = self.d // math.gcd(self.d, j % self.d) if self.d > 1 else 1
        cur = self.power(i, j, jo)
        step = jo
        while cur != (0, 0):
            cur = self.mul(cur, self.power(i, j, jo))
            step += jo
        return step


def cgroup_power(M: CGroupPresentation, i: int, j: int, length: int):
    return M.power(i, j, length)


def unit_groups(M: CGroupPresentation):
    """Explicit lists of U(e) and of the units v mod d with k^v = k mod e."""
    ue = [1] if M.e == 1 else [u for u in range(1, M.e) if math.gcd(u, M.e) == 1]
    if M.d == 1:
        ukd = [1]
    else:
        ukd = [v for v in range(1, M.d)
               if math.gcd(v, M.d) == 1 and v % M.ord == 1 % M.ord]
    return ue, ukd


@dataclass(frozen=True)
class CGroupAut:
    """Canonical form theta^c phi_u psi_v of an automorphism of C(e, d, k).

    Acts by x -> x^u and y -> x^(c z) y^v.
    """

    pres: CGroupPresentation
    c: int
    u: int
    v: int

    def __post_init__(self):
        p = self.pres
        object.__setattr__(self, "c", self.c % p.g_theta)
        object.__setattr__(self, "u", 1 if p.e == 1 else self.u % p.e)
        object.__setattr__(self, "v", 1 if p.d == 1 else self.v % p.d)
        if math.gcd(self.u, p.e) != 1:
            raise HomomorphismError(f"u = {self.u} is not a unit mod e = {p.e}")
        if math.gcd(self.v, p.d) != 1 or self.v % p.ord != 1 % p.ord:
            raise HomomorphismError(
                f"v = {self.v} must be a unit mod d congruent to 1 mod ord_e(k)")

    @property
    def is_identity(self) -> bool:
        return self.c == 0 and self.u == 1 and self.v == 1

    def x_image(self):
        return (self.u % self.pres.e, 0)

    def y_image(self):
        return ((self.c * self.pres.z) % self.pres.e if self.pres.e > 1 else 0,
                self.v % self.pres.d)

    def apply(self, i: int, j: int):
        """Image of x^i y^j."""
        p = self.pres
        if p.e == 1:
            return (0, (self.v * j) % p.d)
        kv = pow(p.k, self.v % p.d, p.e)
        shift = self.c * p.z * geometric_sum(kv, j, p.e)
        return ((self.u * i + shift) % p.e, (self.v * j) % p.d)

    def compose(self, other: "CGroupAut") -> "CGroupAut":
        """self after other, renormalized with the defining relations."""
        p = self.pres
        if other.pres != p:
            raise HomomorphismError("automorphisms act on different presentations")
        return CGroupAut(p,
                         (self.c + self.u * other.c) % p.g_theta,
                         (self.u * other.u) % p.e if p.e > 1 else 1,
                         (self.v * other.v) % p.d if p.d > 1 else 1)

    def inverse(self) -> "CGroupAut":
        p = self.pres
        u_inv = pow(self.u, -1, p.e) if p.e > 1 else 1
        v_inv = pow(self.v, -1, p.d) if p.d > 1 else 1
        return CGroupAut(p, (-self.c * u_inv) % p.g_theta, u_inv, v_inv)

    def as_permutation(self, coords, index_of) -> tuple:
        """Permutation of a concrete group given coords[g] = (i, j) labels."""
        return tuple(index_of[self.apply(*coords[g])] for g in range(len(coords)))

    @property
    def spec(self) -> str:
        parts = []
        if self.c:
            parts.append(f"theta:{self.c}")
        if self.pres.e > 1 and self.u != 1:
            parts.append(f"phi:{self.u}")
        if self.pres.d > 1 and self.v != 1:
            parts.append(f"psi:{self.v}")
        return "*".join(parts) if parts else "id"


def standard_aut(M: CGroupPresentation, kind: str, param: int = 1) -> CGroupAut:
    """The generators theta, phi_u, psi_v, verified on the presentation relations."""
    if kind == "theta":
        aut = CGroupAut(M, param, 1, 1)
    elif kind == "phi":
        if math.gcd(param, M.e) != 1:
            raise HomomorphismError(f"phi parameter {param} is not a unit mod {M.e}")
        aut = CGroupAut(M, 0, param, 1)
    elif kind == "psi":
        if M.d > 1 and (math.gcd(param, M.d) != 1 or param % M.ord != 1 % M.ord):
            raise HomomorphismError(
                f"psi parameter {param} must be a unit mod {M.d} fixing k")
        aut = CGroupAut(M, 0, 1, param)
    else:
        raise ValueError(f"unknown automorphism kind {kind!r}")
    _verify_preserves_relations(aut)
    return aut


def _verify_preserves_relations(aut: CGroupAut):
    p = aut.pres
    xi = aut.apply(1 % p.e, 0)
    yi = aut.apply(0, 1 % p.d)
    if p.mul(yi, xi) != p.mul(p.power(*xi, p.k), yi):
        raise HomomorphismError("conjugation relation y x y^-1 = x^k not preserved")
    if p.power(*xi, p.e) != (0, 0) or p.power(*yi, p.d) != (0, 0):
        raise HomomorphismError("generator order relation not preserved")


def aut_compose(M: CGroupPresentation, a: CGroupAut, b: CGroupAut) -> CGroupAut:
    """Canonical form of a o b (b applied first)."""
    if a.pres != M or b.pres != M:
        raise HomomorphismError("automorphisms must belong to the given presentation")
    return a.compose(b)


def aut_decompose(M: CGroupPresentation, x_image, y_image) -> CGroupAut:
    """Recover (c, u, v) from the images of x and y, validating each relation."""
    xi, xj = x_image[0] % max(M.e, 1), x_image[1] % M.d
    yi, yv = y_image[0] % max(M.e, 1), y_image[1] % M.d
    if xj != 0:
        raise HomomorphismError("image of x must lie in <x> (x -> x^u)")
    u = xi if M.e > 1 else 1
    if math.gcd(u, M.e) != 1:
        raise HomomorphismError(f"image x^{u} violates x^e = 1 with a non-unit exponent")
    if math.gcd(yv, M.d) != 1:
        raise HomomorphismError("image of y has order < d: relation y^d = 1 forces a unit")
    if M.e > 1 and pow(M.k, yv, M.e) != M.k % M.e:
        raise HomomorphismError(
            "relation y x y^-1 = x^k is violated: k^v must equal k mod e")
    v = yv if M.d > 1 else 1
    if M.e > 1 and yi % M.z != 0:
        raise HomomorphismError(
            "relation y^d = 1 is violated: the x-exponent of the image of y "
            f"must be divisible by z = {M.z}")
    c = (yi // M.z) % M.g_theta if M.e > 1 else 0
    aut = CGroupAut(M, c, u, v)
    if aut.apply(1 % M.e, 0) != (xi, 0) or aut.apply(0, 1 % M.d) != (yi, yv % M.d):
        raise HomomorphismError("images are inconsistent with a canonical form")
    return aut


# -- concrete groups ----------------------------------------------------------


def cgroup_group(M: CGroupPresentation) -> FiniteGroup:
    """The presented group as a Cayley table with (i, j) labels, index i*d + j."""
    e, d, k = M.e, M.d, M.k
    n = e * d
    idx = np.arange(n, dtype=np.int64)
    i1, j1 = idx[:, None] // d, idx[:, None] % d
    i2, j2 = idx[None, :] // d, idx[None, :] % d
    if e > 1:
        kpow = np.array([pow(k, j, e) for j in range(d)], dtype=np.int64)
        new_i = (i1 + i2 * kpow[j1]) % e
    else:
        new_i = np.zeros((n, n), dtype=np.int64)
    new_j = (j1 + j2) % d
    table = (new_i * d + new_j).astype(np.int32)
    labels = [(int(i), int(j)) for i in range(e) for j in range(d)]
    return FiniteGroup(table, labels=labels, name=M.spec, label_style="cgroup")


def cgroup_coordinates(G: FiniteGroup, x: int, y: int, M: CGroupPresentation):
    """coords[g] = (i, j) with g = x^i y^j, and the inverse index lookup."""
    coords = [None] * G.order
    index_of = {}
    xi = G.identity
    for i in range(M.e):
        gij = xi
        for j in range(M.d):
            if coords[gij] is not None:
                raise GroupDefinitionError("x and y do not factor the group uniquely")
            coords[gij] = (i, j)
            index_of[(i, j)] = gij
            gij = G.mul(gij, y)
        xi = G.mul(xi, x)
    return coords, index_of


def cgroup_aut_group(M: CGroupPresentation) -> FiniteGroup:
    """Aut(C(e,d,k)) in canonical coordinates, of order g_theta * phi(e) * |U_k(d)|."""
    ue, ukd = unit_groups(M)
    triples = [(c, u, v) for c in range(M.g_theta) for u in ue for v in ukd]
    index = {t: i for i, t in enumerate(triples)}

    def op(a, b):
        out = CGroupAut(M, *a).compose(CGroupAut(M, *b))
        return (out.c, out.u, out.v)

    n = len(triples)
    table = np.zeros((n, n), dtype=np.int32)
    for i, a in enumerate(triples):
        for j, b in enumerate(triples):
            table[i, j] = index[op(a, b)]
    return FiniteGroup(table, labels=triples, name=f"aut of ({M.spec})")


# -- recognition ---------------------------------------------------------------


def recognize_cgroup(G: FiniteGroup) -> Optional[tuple]:
    """Find a presentation C(e, d, k) with witnesses (x, y) inside G.

    Prefers presentations where every prime factor of d divides the order of
    k mod e, and among those the lexicographically least (e, d, k).  Returns
    None when G is not a C-group, or when no such normalized presentation is
    reachable by the element-pair search.
    """
    n = G.order
    if not is_cgroup(G):
        return None
    if n == 1:
        e = G.identity
        return CGroupPresentation(1, 1, 1), e, e
    orders = G.orders
    candidates = []
    for e in sorted(_divisors(n)):
        d = n // e
        if math.gcd(e, d) != 1:
            continue
        x = _normal_cyclic_subgroup_generator(G, e)
        if x is None:
            continue
        xpow = {}
        cur, t = G.identity, 0
        while True:
            xpow[cur] = t
            cur = G.mul(cur, x)
            t += 1
            if cur == G.identity:
                break
        seen_k = set()
        for y in range(n):
            if int(orders[y]) != d:
                continue
            conj = G.conj(x, y)
            k = 1 if e == 1 else xpow[conj] % e
            if k in seen_k:
                continue
            seen_k.add(k)
            try:
                pres = CGroupPresentation(e, d, k)
            except GroupDefinitionError:
                continue
            candidates.append((pres, x, y))
    normalized = [c for c in candidates if c[0].is_normalized]
    if not normalized:
        return None
    normalized.sort(key=lambda c: (c[0].e, c[0].d, c[0].k, c[1], c[2]))
    return normalized[0]


def _normal_cyclic_subgroup_generator(G: FiniteGroup, e: int) -> Optional[int]:
    """Least generator of the normal cyclic subgroup of order e, if one exists."""
    if e == 1:
        return G.identity
    orders = G.orders
    for x in range(G.order):
        if int(orders[x]) != e:
            continue
        span = subgroup_generated(G, [x])
        if is_normal(G, span):
            return x
    return None


def _divisors(n: int) -> list:
    out = []
    for a in range(1, int(math.isqrt(n)) + 1):
        if n % a == 0:
            out.append(a)
            if a != n // a:
                out.append(n // a)
    return out
