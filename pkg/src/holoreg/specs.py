"""The one-line group-spec mini-language and the Cayley-table file format.

Grammar (whitespace separated)::

    spec       := atom | semidirect
    atom       := "cyclic" N | "dihedral" N | "quaternion" N | "cgroup" E D K
    semidirect := "semidirect" "(" atom ")" "(" atom ")"
                  "alpha" "r->" AUT "s->" AUT
    AUT        := "id" | PART ("*" PART)*
    PART       := ("theta" | "phi" | "psi") ":" INT

In a semidirect spec the first factor must be a cyclic or cgroup atom (so
that automorphisms have canonical coordinates) and the second must be
dihedral or quaternion.

Table files: line 1 ``order n``; line 2 optionally ``labels`` followed by n
tokens; then n rows of n indices, row g column h holding g*h, with the
identity at index 0.
"""

from __future__ import annotations

import re

import numpy as np

from .cgroups import CGroupAut, CGroupPresentation, cgroup_group
from .groups import (FiniteGroup, GroupDefinitionError, HomomorphismError,
                     cyclic_group, dihedral_group, quaternion_group,
                     semidirect_product)


class SpecError(ValueError):
    """Raised on any malformed group spec or table file."""


def _tokenize(text: str) -> list:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_group_spec(text: str) -> FiniteGroup:
    """Build the group described by a mini-language spec string."""
    tokens = _tokenize(text)
    group, rest = _parse_spec(tokens)
    if rest:
        raise SpecError(f"trailing tokens in spec: {' '.join(rest)}")
    return group


def _parse_spec(tokens: list):
    if not tokens:
        raise SpecError("empty group spec")
    head = tokens[0]
    if head == "semidirect":
        return _parse_semidirect(tokens[1:])
    return _parse_atom(tokens)


def _take_int(tokens: list, what: str) -> tuple:
    if not tokens or not re.fullmatch(r"-?\d+", tokens[0]):
        raise SpecError(f"expected an integer for {what}")
    return int(tokens[0]), tokens[1:]


def _parse_atom(tokens: list):
    head, rest = tokens[0], tokens[1:]
    try:
        if head == "cyclic":
            n, rest = _take_int(rest, "cyclic order")
            return cyclic_group(n), rest
        if head == "dihedral":
            n, rest = _take_int(rest, "dihedral order")
            return dihedral_group(n), rest
        if head == "quaternion":
            n, rest = _take_int(rest, "quaternion order")
            return quaternion_group(n), rest
        if head == "cgroup":
            e, rest = _take_int(rest, "cgroup e")
            d, rest = _take_int(rest, "cgroup d")
            k, rest = _take_int(rest, "cgroup k")
            return cgroup_group(CGroupPresentation(e, d, k)), rest
    except GroupDefinitionError as exc:
        raise SpecError(str(exc)) from exc
    raise SpecError(f"unknown group constructor {head!r}")


def _parse_parenthesized(tokens: list):
    if not tokens or tokens[0] != "(":
        raise SpecError("expected '(' in semidirect spec")
    depth, i = 1, 1
    while i < len(tokens) and depth:
        if tokens[i] == "(":
            depth += 1
        elif tokens[i] == ")":
            depth -= 1
        i += 1
    if depth:
        raise SpecError("unbalanced parentheses in spec")
    inner, rest = tokens[1:i - 1], tokens[i:]
    group, leftover = _parse_spec(inner)
    if leftover:
        raise SpecError(f"trailing tokens inside parentheses: {' '.join(leftover)}")
    return group, rest


def _presentation_of(M: FiniteGroup) -> CGroupPresentation:
    if M.label_style == "cyclic":
        return CGroupPresentation(M.order, 1, 1)
    if M.label_style == "cgroup":
        e, d, k = (int(v) for v in M.name.split()[1:4])
        return CGroupPresentation(e, d, k)
    raise SpecError("semidirect base must be a cyclic or cgroup atom")


def parse_aut_spec(text: str, pres: CGroupPresentation) -> CGroupAut:
    """Parse ``id`` or ``theta:c*phi:u*psi:v`` into a canonical automorphism."""
    if text == "id":
        return CGroupAut(pres, 0, 1, 1)
    c, u, v = 0, 1, 1
    seen = set()
    for part in text.split("*"):
        m = re.fullmatch(r"(theta|phi|psi):(-?\d+)", part)
        if m is None:
            raise SpecError(f"malformed automorphism component {part!r}")
        kind, value = m.group(1), int(m.group(2))
        if kind in seen:
            raise SpecError(f"duplicate automorphism component {kind!r}")
        seen.add(kind)
        if kind == "theta":
            c = value
        elif kind == "phi":
            u = value
        else:
            v = value
    try:
        return CGroupAut(pres, c, u, v)
    except HomomorphismError as exc:
        raise SpecError(str(exc)) from exc


def _parse_semidirect(tokens: list):
    M, tokens = _parse_parenthesized(tokens)
    if M.label_style not in ("cyclic", "cgroup"):
        raise SpecError("semidirect base must be a cyclic or cgroup atom")
    P, tokens = _parse_parenthesized(tokens)
    if P.label_style != "twogroup":
        raise SpecError("semidirect acting factor must be dihedral or quaternion")
    if not tokens or tokens[0] != "alpha":
        raise SpecError("expected 'alpha' after the two factors")
    tokens = tokens[1:]
    images = {}
    for _ in range(2):
        if not tokens:
            raise SpecError("expected r-> and s-> automorphism assignments")
        m = re.fullmatch(r"(r|s)->(\S+)", tokens[0])
        if m is None:
            raise SpecError(f"malformed action assignment {tokens[0]!r}")
        images[m.group(1)] = m.group(2)
        tokens = tokens[1:]
    if set(images) != {"r", "s"}:
        raise SpecError("action must assign both r-> and s->")
    pres = _presentation_of(M)  # a cyclic atom acts through its form C(n, 1, 1)
    group = build_semidirect_from_auts(
        pres, P, parse_aut_spec(images["r"], pres), parse_aut_spec(images["s"], pres))
    return group, tokens


def build_semidirect_from_auts(pres: CGroupPresentation, P: FiniteGroup,
                               aut_r: CGroupAut, aut_s: CGroupAut,
                               name: str = "") -> FiniteGroup:
    """Semidirect product of a presented C-group by a two-group, from the
    images of r and s in canonical automorphism coordinates."""
    M = cgroup_group(pres)
    half = P.order // 2
    # relations of P must be preserved, else the assignment is not an action
    a_r, a_s = aut_r, aut_s
    power = CGroupAut(pres, 0, 1, 1)
    for _ in range(half):
        power = power.compose(a_r)
    if not power.is_identity:
        raise SpecError("action of r violates its order relation")
    s_sq = a_s.compose(a_s)
    expected = CGroupAut(pres, 0, 1, 1)
    if P.name.startswith("quaternion"):
        for _ in range(half // 2):
            expected = expected.compose(a_r)
    if (s_sq.c, s_sq.u, s_sq.v) != (expected.c, expected.u, expected.v):
        raise SpecError("action of s violates the s^2 relation")
    conj = a_s.compose(a_r).compose(a_s.inverse())
    if (conj.c, conj.u, conj.v) != (a_r.inverse().c, a_r.inverse().u, a_r.inverse().v):
        raise SpecError("action violates the conjugation relation s r s^-1 = r^-1")
    coords = [M.label(i) for i in range(M.order)]
    index_m = {lab: i for i, lab in enumerate(coords)}
    auts = []
    for t in range(P.order):
        a, b = P.label(t)
        aut = CGroupAut(pres, 0, 1, 1)
        for _ in range(a):
            aut = aut.compose(a_r)
        for _ in range(b):
            aut = aut.compose(a_s)
        auts.append(aut)
    perms = [np.array(a.as_permutation(coords, index_m), dtype=np.int32)
             for a in auts]
    spec = (f"semidirect ({pres.spec}) ({P.name}) alpha "
            f"r->{aut_r.spec} s->{aut_s.spec}")
    return semidirect_product(M, P, perms, name=name or spec)


# -- Cayley table files -----------------------------------------------------------


def load_cayley_table(path) -> FiniteGroup:
    """Read a group from the line-oriented table format."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("order"):
        raise SpecError("table file must start with 'order n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise SpecError("malformed order line") from exc
    body = lines[1:]
    labels = None
    if body and body[0].startswith("labels"):
        labels = body[0].split()[1:]
        if len(labels) != n:
            raise SpecError(f"labels line must carry {n} tokens")
        body = body[1:]
    if len(body) != n:
        raise SpecError(f"expected {n} table rows, found {len(body)}")
    try:
        table = np.array([[int(v) for v in row.split()] for row in body],
                         dtype=np.int32)
    except ValueError as exc:
        raise SpecError("table rows must contain integers") from exc
    if table.shape != (n, n):
        raise SpecError("table rows have inconsistent width")
    try:
        group = FiniteGroup(table, labels=labels, name=f"table {path}")
    except GroupDefinitionError as exc:
        raise SpecError(str(exc)) from exc
    if group.identity != 0:
        raise SpecError("table files require the identity at index 0")
    return group


def dump_cayley_table(G: FiniteGroup, path):
    """Write a group in the line-oriented table format."""
    if G.identity != 0:
        raise SpecError("table files require the identity at index 0")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"order {G.order}\n")
        if G.labels is not None:
            rendered = [G.format_element(i).replace(" ", "") for i in range(G.order)]
            fh.write("labels " + " ".join(rendered) + "\n")
        for row in G.table:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")
