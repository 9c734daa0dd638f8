"""Finite groups as Cayley tables: constructors, subgroup machinery, predicates.

Every group is an ``n x n`` table of element indices.  Structured labels
(generator-exponent tuples) ride alongside the table so that symbolic
formulas can be read back from a concrete group.  All objects are immutable
after construction and every function here is pure, so values may be shared
freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

ASSOC_CHECK_BOUND = 512
AUT_SEARCH_BOUND = 256
SUBGROUP_ENUM_BOUND = 128


class GroupDefinitionError(ValueError):
    """Data fails to define a group, or a constructor was misused."""


class HomomorphismError(ValueError):
    """Images fail to define a (valid) homomorphism."""


class BoundExceeded(RuntimeError):
    """An enumeration would exceed its configured desk-scale bound."""


def _as_int_table(table) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GroupDefinitionError(f"Cayley table must be square, got shape {arr.shape}")
    return arr


class FiniteGroup:
    """A finite group given by a Cayley table on element indices 0..n-1.

    ``table[a, b]`` is the index of the product ``a*b``.  Construction
    validates the identity, the Latin-square property, and (for orders up to
    ``assoc_bound``) associativity on all triples.
    """

    def __init__(self, table, labels=None, name: str = "",
                 label_style: Optional[str] = None,
                 assoc_bound: int = ASSOC_CHECK_BOUND):
        table = _as_int_table(table)
        n = table.shape[0]
        if n == 0:
            raise GroupDefinitionError("empty Cayley table")
        if table.min() < 0 or table.max() >= n:
            raise GroupDefinitionError("table entries must be element indices")
        self.table = table
        self.order = n
        self.name = name
        self.label_style = label_style
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GroupDefinitionError("labels length must match group order")
        self.labels = labels
        self.identity = self._find_identity()
        self._check_latin()
        if n <= assoc_bound:
            self._check_associative()
        table.setflags(write=False)

    # -- construction checks ------------------------------------------------

    def _find_identity(self) -> int:
        idx = np.arange(self.order, dtype=np.int32)
        for e in range(self.order):
            if np.array_equal(self.table[e], idx) and np.array_equal(self.table[:, e], idx):
                return e
        raise GroupDefinitionError("table has no two-sided identity")

    def _check_latin(self):
        idx = np.arange(self.order, dtype=np.int32)
        rows = np.sort(self.table, axis=1)
        cols = np.sort(self.table, axis=0)
        if not (np.array_equal(rows, np.broadcast_to(idx, rows.shape))
                and np.array_equal(cols.T, np.broadcast_to(idx, rows.shape))):
            raise GroupDefinitionError("table is not a Latin square")

    def _check_associative(self):
        t = self.table
        for g in range(self.order):
            left = t[t[g], :]          # (g*h)*k
            right = t[g][t]            # g*(h*k)
            if not np.array_equal(left, right):
                raise GroupDefinitionError(f"associativity fails at element {g}")

    # -- basic arithmetic ----------------------------------------------------

    @cached_property
    def rows(self) -> list:
        """Cayley table as nested Python lists, for index-heavy inner loops."""
        return self.table.tolist()

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == self.identity, axis=1).astype(np.int32)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, a: int, b: int) -> int:
        """Conjugate of ``a`` by ``b``, i.e. ``b a b^-1``."""
        t = self.rows
        return t[t[b][a]][self.inv(b)]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.identity, a
        t = self.rows
        while k:
            if k & 1:
                result = t[result][base]
            base = t[base][base]
            k >>= 1
        return result

    def order_of(self, a: int) -> int:
        return int(self.orders[a])

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        base = np.arange(n, dtype=np.int32)
        cur = base.copy()
        out = np.zeros(n, dtype=np.int32)
        out[self.identity] = 1
        for step in range(2, n + 1):
            if not (out == 0).any():
                break
            cur = self.table[cur, base]
            hit = (cur == self.identity) & (out == 0)
            out[hit] = step
        out[out == 0] = 1  # only the identity can remain, already set
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def conjugacy_classes(self) -> list:
        """Conjugacy classes as sorted tuples, ordered by least member."""
        n = self.order
        t = self.table
        inv = self.inverses
        seen = np.zeros(n, dtype=bool)
        classes = []
        for a in range(n):
            if seen[a]:
                continue
            orbit = np.unique(t[t[:, a], inv])
            seen[orbit] = True
            classes.append(tuple(int(x) for x in orbit))
        return classes

    @cached_property
    def class_sizes(self) -> np.ndarray:
        sizes = np.zeros(self.order, dtype=np.int32)
        for cls in self.conjugacy_classes:
            for a in cls:
                sizes[a] = len(cls)
        return sizes

    # -- labels ----------------------------------------------------------------

    def label(self, i: int):
        return self.labels[i] if self.labels is not None else i

    def format_element(self, i: int) -> str:
        return format_label(self.label(i), self.label_style, i)

    def __repr__(self):
        tag = self.name or f"group of order {self.order}"
        return f"<FiniteGroup {tag}>"

    @classmethod
    def from_product_function(cls, elements: Sequence, op: Callable,
                              name: str = "", label_style: Optional[str] = None,
                              **kwargs) -> "FiniteGroup":
        """Build a group from explicit elements and a binary operation."""
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        table = np.zeros((n, n), dtype=np.int32)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                table[i, j] = index[op(a, b)]
        return cls(table, labels=elements, name=name, label_style=label_style, **kwargs)


def format_label(label, style: Optional[str], idx: int) -> str:
    """Render a structured element label as a compact string."""
    if style == "cyclic" and isinstance(label, (int, np.integer)):
        return "1" if label == 0 else f"g^{label}"
    if style == "cgroup" and isinstance(label, tuple) and len(label) == 2:
        return _word(("x", label[0]), ("y", label[1]))
    if style == "twogroup" and isinstance(label, tuple) and len(label) == 2:
        return _word(("r", label[0]), ("s", label[1]))
    if style == "semidirect" and isinstance(label, tuple) and len(label) == 2:
        m_lab, p_lab = label
        if isinstance(m_lab, (int, np.integer)):
            m_lab = (m_lab, 0)
        return _word(("x", m_lab[0]), ("y", m_lab[1]), ("r", p_lab[0]), ("s", p_lab[1]))
    return f"e{idx}" if label is None or label == idx else f"e{idx}:{label}"


def _word(*parts) -> str:
    pieces = [f"{sym}^{exp}" if exp != 1 else sym for sym, exp in parts if exp]
    return "*".join(pieces) if pieces else "1"


@dataclass(frozen=True)
class Homomorphism:
    """A group homomorphism recorded by the image index of every source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple
    validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if len(self.images) != self.source.order:
            raise HomomorphismError("images must list one target index per source element")
        if self.validate:
            imgs = np.asarray(self.images, dtype=np.int32)
            if imgs[self.source.identity] != self.target.identity:
                raise HomomorphismError("identity is not mapped to the identity")
            lhs = imgs[self.source.table]
            rhs = self.target.table[imgs[:, None], imgs[None, :]]
            if not np.array_equal(lhs, rhs):
                raise HomomorphismError("images do not respect the group product")

    def __call__(self, i: int) -> int:
        return self.images[i]

    @cached_property
    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """self after other (``other`` is applied first)."""
        if other.target is not self.source:
            raise HomomorphismError("composition requires matching groups")
        return Homomorphism(other.source, self.target,
                            tuple(self.images[x] for x in other.images), validate=False)

    def inverse(self) -> "Homomorphism":
        if not self.is_bijective:
            raise HomomorphismError("only bijective homomorphisms can be inverted")
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Homomorphism(self.target, self.source, tuple(inv), validate=False)


# -- constructors -------------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    """The cyclic group of order ``n`` with its generator at index 1."""
    if n < 1:
        raise GroupDefinitionError("cyclic group order must be at least 1")
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, labels=range(n), name=f"cyclic {n}", label_style="cyclic")


def _power_of_two_exponent(order: int) -> int:
    m = order.bit_length() - 1
    if order <= 0 or (1 << m) != order:
        raise GroupDefinitionError(f"order {order} is not a power of 2")
    return m


def _two_group_table(order: int, s_squared: int) -> np.ndarray:
    # Elements r^a s^b indexed as 2a+b; s r s^-1 = r^-1 and s^2 = r^(s_squared).
    half = order // 2
    idx = np.arange(order, dtype=np.int32)
    a1, b1 = idx[:, None] // 2, idx[:, None] % 2
    a2, b2 = idx[None, :] // 2, idx[None, :] % 2
    a = (a1 + np.where(b1 == 1, -a2, a2) + s_squared * (b1 & b2)) % half
    b = (b1 + b2) % 2
    return (2 * a + b).astype(np.int32)


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of 2-power order >= 4 on generators r, s with s^2 = 1."""
    m = _power_of_two_exponent(order)
    if m < 2:
        raise GroupDefinitionError("dihedral group here requires order >= 4")
    table = _two_group_table(order, 0)
    labels = [(i // 2, i % 2) for i in range(order)]
    return FiniteGroup(table, labels=labels, name=f"dihedral {order}", label_style="twogroup")


def quaternion_group(order: int) -> FiniteGroup:
    """Generalized quaternion group of 2-power order >= 8, with s^2 = r^(2^(m-2))."""
    m = _power_of_two_exponent(order)
    if m < 3:
        raise GroupDefinitionError("quaternion group requires order >= 8")
    table = _two_group_table(order, 1 << (m - 2))
    labels = [(i // 2, i % 2) for i in range(order)]
    return FiniteGroup(table, labels=labels, name=f"quaternion {order}", label_style="twogroup")


def _normalize_action(M: FiniteGroup, P: FiniteGroup, alpha) -> np.ndarray:
    """Coerce an action of P on M into a validated (|P|, |M|) permutation array."""
    if isinstance(alpha, Homomorphism):
        if alpha.source is not P:
            raise HomomorphismError("action homomorphism must have source P")
        if alpha.target.labels is None:
            raise HomomorphismError("action target must carry permutation labels")
        act = np.array([alpha.target.labels[alpha(t)] for t in range(P.order)], dtype=np.int32)
    elif callable(alpha):
        act = np.array([alpha(t) for t in range(P.order)], dtype=np.int32)
    else:
        act = np.asarray(alpha, dtype=np.int32)
    if act.shape != (P.order, M.order):
        raise HomomorphismError(f"action must map each of {P.order} elements "
                                f"to a permutation of {M.order} points")
    idx = np.arange(M.order, dtype=np.int32)
    for t in range(P.order):
        perm = act[t]
        if not np.array_equal(np.sort(perm), idx):
            raise HomomorphismError(f"action of element {t} is not a permutation")
        if not np.array_equal(perm[M.table], M.table[perm[:, None], perm[None, :]]):
            raise HomomorphismError(f"action of element {t} is not an automorphism")
    for t1 in range(P.order):
        for t2 in range(P.order):
            if not np.array_equal(act[P.mul(t1, t2)], act[t1][act[t2]]):
                raise HomomorphismError("action is not a homomorphism into Aut(M)")
    return act


def semidirect_product(M: FiniteGroup, P: FiniteGroup, alpha,
                       name: str = "") -> FiniteGroup:
    """Semidirect product with multiplication (m1,t1)(m2,t2) = (m1*a_t1(m2), t1 t2).

    ``alpha`` may be a Homomorphism into an automorphism group whose labels
    are permutation tuples, a callable ``t -> permutation``, or a sequence of
    permutations indexed by the elements of P.
    """
    act = _normalize_action(M, P, alpha)
    nm, np_ = M.order, P.order
    n = nm * np_
    idx = np.arange(n, dtype=np.int32)
    m1, t1 = idx[:, None] // np_, idx[:, None] % np_
    m2, t2 = idx[None, :] // np_, idx[None, :] % np_
    m_part = M.table[m1, act[t1, m2]]
    t_part = P.table[t1, t2]
    table = (m_part * np_ + t_part).astype(np.int32)
    labels = [(M.label(i // np_), P.label(i % np_)) for i in range(n)]
    style = "semidirect" if M.label_style in ("cyclic", "cgroup") and \
        P.label_style == "twogroup" else None
    return FiniteGroup(table, labels=labels,
                       name=name or f"semidirect of ({M.name}) and ({P.name})",
                       label_style=style)


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str = "") -> FiniteGroup:
    trivial = np.broadcast_to(np.arange(A.order, dtype=np.int32)[None, :],
                              (B.order, A.order))
    return semidirect_product(A, B, np.ascontiguousarray(trivial),
                              name=name or f"product of ({A.name}) and ({B.name})")


# -- subgroup machinery ---------------------------------------------------------


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> tuple:
    """Sorted indices of the subgroup generated by ``gens``."""
    gens = [int(g) for g in gens]
    t = G.rows
    seen = bytearray(G.order)
    seen[G.identity] = 1
    frontier = [G.identity]
    for g in gens:
        if not seen[g]:
            seen[g] = 1
            frontier.append(g)
    queue = list(frontier)
    while queue:
        u = queue.pop()
        row = t[u]
        for g in gens:
            v = row[g]
            if not seen[v]:
                seen[v] = 1
                queue.append(v)
    return tuple(i for i in range(G.order) if seen[i])


def is_subgroup(G: FiniteGroup, elems: Iterable[int]) -> bool:
    elems = set(int(x) for x in elems)
    if G.identity not in elems:
        return False
    t = G.rows
    return all(t[a][b] in elems for a in elems for b in elems)


def is_normal(G: FiniteGroup, elems: Iterable[int]) -> bool:
    elems = set(int(x) for x in elems)
    return all(G.conj(a, g) in elems for a in elems for g in range(G.order))


def element_order(G: FiniteGroup, g: int) -> int:
    """Least l >= 1 with g^l equal to the identity."""
    return G.order_of(g)


def center(G: FiniteGroup) -> tuple:
    t = G.table
    return tuple(int(z) for z in range(G.order)
                 if np.array_equal(t[z], t[:, z]))


def commutator_subgroup(G: FiniteGroup) -> tuple:
    t = G.rows
    inv = G.inverses
    comms = {t[t[g][h]][t[inv[g]][inv[h]]] for g in range(G.order) for h in range(G.order)}
    return subgroup_generated(G, comms)


def as_subgroup(G: FiniteGroup, elems: Iterable[int], name: str = ""):
    """Reindex a subgroup as its own FiniteGroup; returns (H, to_parent)."""
    elems = tuple(sorted(int(x) for x in elems))
    pos = {e: i for i, e in enumerate(elems)}
    k = len(elems)
    table = np.zeros((k, k), dtype=np.int32)
    t = G.rows
    for i, a in enumerate(elems):
        row = t[a]
        for j, b in enumerate(elems):
            c = row[b]
            if c not in pos:
                raise GroupDefinitionError("element set is not closed under the product")
            table[i, j] = pos[c]
    labels = [G.label(e) for e in elems] if G.labels is not None else list(elems)
    H = FiniteGroup(table, labels=labels, name=name or f"subgroup of ({G.name})",
                    label_style=G.label_style)
    return H, elems


def quotient_group(G: FiniteGroup, normal_elems: Iterable[int], name: str = ""):
    """Quotient by a normal subgroup; returns (Q, coset_index of each element)."""
    nset = tuple(sorted(int(x) for x in normal_elems))
    if not is_subgroup(G, nset):
        raise GroupDefinitionError("quotient requires a subgroup")
    if not is_normal(G, nset):
        raise GroupDefinitionError("quotient requires a normal subgroup")
    t = G.rows
    coset_index = [-1] * G.order
    reps = []
    for a in range(G.order):
        if coset_index[a] >= 0:
            continue
        members = sorted(t[a][m] for m in nset)
        for x in members:
            coset_index[x] = len(reps)
        reps.append(tuple(members))
    k = len(reps)
    table = np.zeros((k, k), dtype=np.int32)
    for i, ca in enumerate(reps):
        for j, cb in enumerate(reps):
            table[i, j] = coset_index[t[ca[0]][cb[0]]]
    Q = FiniteGroup(table, labels=reps, name=name or f"quotient of ({G.name})")
    return Q, tuple(coset_index)


def sylow_subgroup(G: FiniteGroup, p: int) -> tuple:
    """A Sylow p-subgroup found by deterministic closure over p-elements."""
    if p < 2 or any(p % q == 0 for q in range(2, int(math.isqrt(p)) + 1)):
        raise GroupDefinitionError(f"{p} is not prime")
    n = G.order
    target = 1
    while n % p == 0:
        target *= p
        n //= p
    if target == 1:
        return (G.identity,)
    orders = G.orders
    p_elements = [g for g in range(G.order)
                  if g != G.identity and _is_p_power(int(orders[g]), p)]
    current = (G.identity,)
    gens: list = []
    while len(current) < target:
        progressed = False
        for g in p_elements:
            if g in current:
                continue
            candidate = subgroup_generated(G, gens + [g])
            if len(candidate) <= target and _is_p_power(len(candidate), p):
                gens.append(g)
                current = candidate
                progressed = True
                break
        if not progressed:
            raise GroupDefinitionError("Sylow closure search failed")  # unreachable
    return current


def _is_p_power(value: int, p: int) -> bool:
    while value % p == 0:
        value //= p
    return value == 1


def is_cgroup(G: FiniteGroup) -> bool:
    """True when every Sylow subgroup is cyclic."""
    n = G.order
    orders = set(int(x) for x in G.orders)
    for p in _prime_factors(n):
        pk = 1
        m = n
        while m % p == 0:
            pk *= p
            m //= p
        if pk not in orders:
            return False
    return True


def _prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def normal_hall_odd_subgroup(G: FiniteGroup) -> Optional[tuple]:
    """The normal Hall subgroup of odd order (all odd-order elements), if it exists."""
    n = G.order
    odd_part = n
    while odd_part % 2 == 0:
        odd_part //= 2
    elems = tuple(g for g in range(n) if int(G.orders[g]) % 2 == 1)
    if len(elems) != odd_part or not is_subgroup(G, elems):
        return None
    return elems  # closed set of all odd-order elements is automatically normal


# -- generating sets and homomorphism search ---------------------------------


def generating_set(G: FiniteGroup) -> list:
    """Greedy minimal-ish generating set: repeatedly add the element whose
    addition grows the generated subgroup the most (least index on ties)."""
    gens: list = []
    current = {G.identity}
    while len(current) < G.order:
        best_g, best_set = -1, current
        for g in range(G.order):
            if g in current:
                continue
            cand = set(subgroup_generated(G, gens + [g]))
            if len(cand) > len(best_set):
                best_g, best_set = g, cand
                if len(cand) == G.order:
                    break
        gens.append(best_g)
        current = best_set
    return gens


@dataclass
class _WordData:
    """BFS factorization of a subgroup over a generator prefix."""
    elems: list                 # discovery order, identity first
    parent: dict                # elem -> (earlier elem, generator position)


def _bfs_words(G: FiniteGroup, gens: Sequence[int]) -> _WordData:
    t = G.rows
    parent: dict = {}
    elems = [G.identity]
    seen = {G.identity}
    qi = 0
    while qi < len(elems):
        u = elems[qi]
        qi += 1
        row = t[u]
        for pos, g in enumerate(gens):
            v = row[g]
            if v not in seen:
                seen.add(v)
                parent[v] = (u, pos)
                elems.append(v)
    return _WordData(elems, parent)


def _search_homomorphisms(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int],
                          candidates: Sequence[Sequence[int]], injective: bool,
                          first_only: bool = False, max_count: Optional[int] = None):
    """DFS over generator images with prefix-subgroup pruning.

    Yields full image tuples in lexicographic candidate order.
    """
    prefixes = [_bfs_words(G, gens[:i + 1]) for i in range(len(gens))]
    tH = H.rows
    tG = G.rows
    n = G.order
    results: list = []

    if not gens:  # trivial source group
        return [(H.identity,)]

    def fill(depth: int, chosen: list) -> Optional[list]:
        words = prefixes[depth]
        img = [-1] * n
        img[G.identity] = H.identity
        used = set([H.identity]) if injective else None
        for pos in range(depth + 1):
            g = gens[pos]
            hg = chosen[pos]
            if img[g] == -1:
                img[g] = hg
                if injective:
                    if hg in used:
                        return None
                    used.add(hg)
        for v in words.elems:
            if img[v] != -1:
                continue
            u, pos = words.parent[v]
            val = tH[img[u]][chosen[pos]]
            img[v] = val
            if injective:
                if val in used:
                    return None
                used.add(val)
        # verify the homomorphism property on the prefix subgroup
        sub = words.elems
        for u in sub:
            iu = img[u]
            rowu = tG[u]
            rowh = tH[iu]
            for pos in range(depth + 1):
                if img[rowu[gens[pos]]] != rowh[chosen[pos]]:
                    return None
        return img

    def dfs(depth: int, chosen: list):
        for cand in candidates[depth]:
            chosen.append(cand)
            img = fill(depth, chosen)
            if img is not None:
                if depth + 1 == len(gens):
                    results.append(tuple(img))
                    if first_only:
                        chosen.pop()
                        raise StopIteration
                    if max_count is not None and len(results) > max_count:
                        chosen.pop()
                        raise BoundExceeded(
                            f"more than {max_count} homomorphisms found")
                else:
                    dfs(depth + 1, chosen)
            chosen.pop()

    try:
        dfs(0, [])
    except StopIteration:
        pass
    return results


def _fingerprints(G: FiniteGroup) -> list:
    orders = G.orders
    sizes = G.class_sizes
    t = G.rows
    return [(int(orders[g]), int(sizes[g]), int(orders[t[g][g]])) for g in range(G.order)]


def automorphism_group(G: FiniteGroup, bound: Optional[int] = AUT_SEARCH_BOUND,
                       max_count: Optional[int] = None) -> list:
    """All automorphisms of G, by generator-image backtracking.

    Results are cached on the group.  ``bound`` limits the group order the
    search will accept; ``max_count`` aborts early once more than that many
    automorphisms have been found.
    """
    if bound is not None and G.order > bound:
        raise BoundExceeded(f"automorphism search bound {bound} exceeded by order {G.order}")
    cached = getattr(G, "_aut_cache", None)
    if cached is None:
        gens = generating_set(G)
        fps = _fingerprints(G)
        cands = [[h for h in range(G.order) if fps[h] == fps[g]] for g in gens]
        images = _search_homomorphisms(G, G, gens, cands, injective=True,
                                       max_count=max_count)
        cached = [Homomorphism(G, G, img, validate=False) for img in images]
        G._aut_cache = cached
    if max_count is not None and len(cached) > max_count:
        raise BoundExceeded(f"more than {max_count} automorphisms")
    return list(cached)


def automorphism_perms(G: FiniteGroup, bound: Optional[int] = AUT_SEARCH_BOUND,
                       max_count: Optional[int] = None) -> np.ndarray:
    """Automorphisms as an (|Aut|, n) index array, in enumeration order."""
    auts = automorphism_group(G, bound=bound, max_count=max_count)
    return np.array([a.images for a in auts], dtype=np.int32)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup,
                     bound: Optional[int] = AUT_SEARCH_BOUND) -> Optional[Homomorphism]:
    """A bijective homomorphism G -> H if one exists, else None."""
    if bound is not None and max(G.order, H.order) > bound:
        raise BoundExceeded(f"isomorphism search bound {bound} exceeded")
    if G.order != H.order:
        return None
    fps_G, fps_H = _fingerprints(G), _fingerprints(H)
    if sorted(fps_G) != sorted(fps_H):
        return None
    gens = generating_set(G)
    cands = [[h for h in range(H.order) if fps_H[h] == fps_G[g]] for g in gens]
    images = _search_homomorphisms(G, H, gens, cands, injective=True, first_only=True)
    if not images:
        return None
    return Homomorphism(G, H, images[0], validate=False)


def all_homomorphisms(G: FiniteGroup, H: FiniteGroup) -> list:
    """Every homomorphism G -> H, in deterministic order."""
    gens = generating_set(G)
    ordersG, ordersH = G.orders, H.orders
    cands = [[h for h in range(H.order) if int(ordersG[g]) % int(ordersH[h]) == 0]
             for g in gens]
    images = _search_homomorphisms(G, H, gens, cands, injective=False)
    return [Homomorphism(G, H, img, validate=False) for img in images]


# -- subgroup enumeration -----------------------------------------------------


def all_subgroups(G: FiniteGroup, bound: int = SUBGROUP_ENUM_BOUND) -> list:
    """Every subgroup of G as a sorted tuple, by closure-extension search."""
    if G.order > bound:
        raise BoundExceeded(f"subgroup enumeration bound {bound} exceeded by order {G.order}")
    trivial = (G.identity,)
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for sub in frontier:
            inside = set(sub)
            for g in range(G.order):
                if g in inside:
                    continue
                bigger = subgroup_generated(G, list(sub) + [g])
                if bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), s))


def characteristic_subgroups(G: FiniteGroup, bound: int = SUBGROUP_ENUM_BOUND) -> list:
    """Subgroups invariant under every automorphism of G."""
    auts = automorphism_perms(G, bound=max(bound, AUT_SEARCH_BOUND))
    out = []
    for sub in all_subgroups(G, bound=bound):
        sset = set(sub)
        if all(set(int(perm[g]) for g in sub) == sset for perm in auts):
            out.append(sub)
    return out
