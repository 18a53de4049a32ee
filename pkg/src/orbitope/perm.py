"""Finite permutation groups on {0,...,n-1}.

Permutations are image tuples.  Groups carry a base and strong generating
set built by deterministic Schreier-Sims (base points are the smallest
moved points, transversals grow breadth-first), so order, membership and
point stabilizers are exact.
"""

from __future__ import annotations

import re

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p * q)(i) = p(q(i)); q is applied first, matching matrix products."""
    return tuple(p[x] for x in q)


def inverse_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(images, degree: int) -> bool:
    return len(images) == degree and sorted(images) == list(range(degree))


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-indexed cycle notation like "(1 4 2 3)(5 6)"."""
    images = list(range(degree))
    body = text.strip()
    if body in ("", "()"):
        return tuple(images)
    for cycle_text in re.findall(r"\(([^()]*)\)", body):
        points = [int(t) - 1 for t in re.split(r"[,\s]+", cycle_text.strip()) if t]
        for a in points:
            if not 0 <= a < degree:
                raise ValueError(f"point {a + 1} out of range for degree {degree}")
        for a, b in zip(points, points[1:]):
            images[a] = b
        if points:
            images[points[-1]] = points[0]
    if sorted(images) != list(range(degree)):
        raise ValueError(f"not a permutation: {text!r}")
    return tuple(images)


def cycle_string(p: Perm) -> str:
    """Render in 1-indexed cycle notation; identity renders as "()"."""
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cycle = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cycle.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(str(x + 1) for x in cycle) + ")")
    return "".join(parts) if parts else "()"


def _smallest_moved(p: Perm) -> int | None:
    for i, x in enumerate(p):
        if x != i:
            return i
    return None


class PermGroup:
    """Permutation group given by generators, with exact order/membership.

    Immutable after construction; the stabilizer chain is built eagerly so
    all queries are read-only.
    """

    def __init__(self, degree: int, generators, base_hint: tuple[int, ...] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            if not is_permutation(g, degree):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
            if g != identity_perm(degree) and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._base: list[int] = []
        self._level_gens: list[list[Perm]] = []
        self._transversals: list[dict[int, Perm]] = []
        self._build(base_hint)

    # -- Schreier-Sims construction -----------------------------------

    def _transversal(self, point: int, gens: list[Perm]) -> dict[int, Perm]:
        ident = identity_perm(self.degree)
        reps = {point: ident}
        queue = [point]
        while queue:
            x = queue.pop(0)
            for g in gens:
                y = g[x]
                if y not in reps:
                    reps[y] = compose(g, reps[x])
                    queue.append(y)
        return reps

    def _strip(self, p: Perm, level: int) -> tuple[Perm, int]:
        for l in range(level, len(self._base)):
            x = p[self._base[l]]
            rep = self._transversals[l].get(x)
            if rep is None:
                return p, l
            p = compose(inverse_perm(rep), p)
        return p, len(self._base)

    def _append_base_point(self, point: int) -> None:
        self._base.append(point)
        self._level_gens.append([])
        self._transversals.append({})

    def _build(self, base_hint: tuple[int, ...]) -> None:
        for b in base_hint:
            self._append_base_point(b)
        for g in self.generators:
            if all(g[b] == b for b in self._base):
                moved = _smallest_moved(g)
                if moved is not None:
                    self._append_base_point(moved)
        if not self._base:
            return
        for level in range(len(self._base)):
            self._level_gens[level] = [
                g for g in self.generators
                if all(g[b] == b for b in self._base[:level])
            ]
        for level in range(len(self._base)):
            self._transversals[level] = self._transversal(
                self._base[level], self._level_gens[level]
            )
        ident = identity_perm(self.degree)
        level = len(self._base) - 1
        while level >= 0:
            extended = False
            trans = self._transversals[level]
            for x in sorted(trans):
                u_x = trans[x]
                for g in self._level_gens[level]:
                    y = g[x]
                    schreier = compose(inverse_perm(trans[y]), compose(g, u_x))
                    if schreier == ident:
                        continue
                    residue, drop = self._strip(schreier, level + 1)
                    if residue == ident:
                        continue
                    if drop == len(self._base):
                        moved = _smallest_moved(residue)
                        self._append_base_point(moved)
                    for l in range(level + 1, drop + 1):
                        self._level_gens[l].append(residue)
                        self._transversals[l] = self._transversal(
                            self._base[l], self._level_gens[l]
                        )
                    level = drop
                    extended = True
                    break
                if extended:
                    break
            if not extended:
                level -= 1

    # -- queries -------------------------------------------------------

    def order(self) -> int:
        n = 1
        for trans in self._transversals:
            n *= len(trans)
        return n

    def contains(self, p) -> bool:
        p = tuple(p)
        if not is_permutation(p, self.degree):
            raise ValueError("degree mismatch")
        residue, _ = self._strip(p, 0)
        return residue == identity_perm(self.degree)

    __contains__ = contains

    def point_stabilizer(self, point: int) -> "PermGroup":
        if not 0 <= point < self.degree:
            raise IndexError("point out of range")
        rebuilt = PermGroup(self.degree, self.generators, base_hint=(point,))
        stab_gens = [
            g for g in rebuilt._strong_generators() if g[point] == point
        ]
        return PermGroup(self.degree, stab_gens)

    def _strong_generators(self) -> list[Perm]:
        seen: list[Perm] = []
        for gens in self._level_gens:
            for g in gens:
                if g not in seen:
                    seen.append(g)
        return seen

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop(0)
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def elements(self, limit: int = 10 ** 6):
        """Iterate all elements (test helper); guards against huge groups."""
        if self.order() > limit:
            raise ValueError(f"group order {self.order()} over enumeration limit")

        def rec(level: int):
            if level == len(self._base):
                yield identity_perm(self.degree)
                return
            for x in sorted(self._transversals[level]):
                rep = self._transversals[level][x]
                for rest in rec(level + 1):
                    yield compose(rep, rest)

        yield from rec(0)

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n <= 1:
            return cls(n, [])
        gens = [tuple([1, 0] + list(range(2, n)))]
        if n > 2:
            gens.append(tuple(list(range(1, n)) + [0]))
        return cls(n, gens)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [])

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()})"
