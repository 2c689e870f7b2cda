"""ADE curve configurations: parsing, Gram/Dynkin builders, the orbifold
deficiency m(C), closed-form discriminant groups and exhaustive census search.

A configuration is a multiset of components A_n (n >= 1), D_n (n >= 4) and
E_6, E_7, E_8.  The canonical basis ordering inside a component is frozen:

* A_n: the chain C^1 .. C^n in path order;
* D_n: a path of n-2 nodes, then the two fork leaves attached to node n-2;
* E_n: a path of n-1 nodes, then the branch node attached to path node 3.

Component blocks are ordered A ascending, then D, then E.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattice import GramLattice, direct_sum

ADE_E_RANKS = (6, 7, 8)


class ParseError(ValueError):
    """Configuration text that does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidComponent(ValueError):
    """A component outside the ADE family (D1-D3, E5, E9, ...)."""


@dataclass(frozen=True)
class ADEConfig:
    """Counts of A/D/E components, keyed by n, stored as sorted pairs."""

    a: tuple[tuple[int, int], ...] = ()
    d: tuple[tuple[int, int], ...] = ()
    e: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for letter, pairs in (("A", self.a), ("D", self.d), ("E", self.e)):
            clean = tuple(sorted((int(n), int(c)) for n, c in pairs if c))
            for n, c in clean:
                _check_component(letter, n)
                if c < 0:
                    raise ValueError("component counts must be nonnegative")
            object.__setattr__(self, letter.lower(), clean)

    @classmethod
    def of(cls, a: dict | None = None, d: dict | None = None, e: dict | None = None) -> "ADEConfig":
        return cls(
            a=tuple((a or {}).items()),
            d=tuple((d or {}).items()),
            e=tuple((e or {}).items()),
        )

    def count(self, letter: str, n: int) -> int:
        pairs = {"A": self.a, "D": self.d, "E": self.e}[letter]
        return dict(pairs).get(n, 0)

    def components(self) -> list[tuple[str, int]]:
        """Component list in canonical block order (A asc, D asc, E asc)."""
        out = []
        for letter, pairs in (("A", self.a), ("D", self.d), ("E", self.e)):
            for n, c in pairs:
                out.extend([(letter, n)] * c)
        return out

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components())

    def __add__(self, other: "ADEConfig") -> "ADEConfig":
        merged = {}
        for cfg in (self, other):
            for letter, pairs in (("A", cfg.a), ("D", cfg.d), ("E", cfg.e)):
                for n, c in pairs:
                    merged[(letter, n)] = merged.get((letter, n), 0) + c
        return ADEConfig.of(
            a={n: c for (l, n), c in merged.items() if l == "A"},
            d={n: c for (l, n), c in merged.items() if l == "D"},
            e={n: c for (l, n), c in merged.items() if l == "E"},
        )

    def __mul__(self, k: int) -> "ADEConfig":
        return ADEConfig(
            a=tuple((n, c * k) for n, c in self.a),
            d=tuple((n, c * k) for n, c in self.d),
            e=tuple((n, c * k) for n, c in self.e),
        )

    __rmul__ = __mul__

    def render(self) -> str:
        if not self.components():
            return "0"
        parts = []
        for letter, pairs in (("A", self.a), ("D", self.d), ("E", self.e)):
            for n, c in pairs:
                parts.append(f"{c if c > 1 else ''}{letter}{n}")
        return "+".join(parts)

    def __str__(self) -> str:
        return self.render()

    def sort_key(self) -> tuple:
        counts = []
        for letter, maxn in (("A", 19), ("D", 19), ("E", 8)):
            lo = 1 if letter == "A" else (4 if letter == "D" else 6)
            for n in range(lo, maxn + 1):
                counts.append(self.count(letter, n))
        # trailing exact tuples keep the order total beyond rank-19 parts
        return (self.rank, tuple(counts), self.a, self.d, self.e)

    def to_json_dict(self) -> dict:
        return {
            "A": {str(n): c for n, c in self.a},
            "D": {str(n): c for n, c in self.d},
            "E": {str(n): c for n, c in self.e},
            "m": _frac_pq(m_value(self)),
            "rank": self.rank,
        }


def _frac_pq(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _check_component(letter: str, n: int) -> None:
    if letter == "A" and n >= 1:
        return
    if letter == "D" and n >= 4:
        return
    if letter == "E" and n in ADE_E_RANKS:
        return
    raise InvalidComponent(f"{letter}{n} is not an ADE component")


_TERM_RE = re.compile(r"(\d+)?([ADE])(\d+)$")


def parse_config(text: str) -> ADEConfig:
    """Parse '5A1+4A2+A5' style text; count defaults to 1, whitespace ignored."""
    counts: dict[tuple[str, int], int] = {}
    pos = 0
    for raw in text.split("+"):
        term = re.sub(r"\s+", "", raw)
        if not term:
            raise ParseError("empty term", pos)
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"malformed term {term!r}", pos)
        mult = int(m.group(1)) if m.group(1) else 1
        letter = m.group(2)
        n = int(m.group(3))
        _check_component(letter, n)
        key = (letter, n)
        counts[key] = counts.get(key, 0) + mult
        pos += len(raw) + 1
    return ADEConfig.of(
        a={n: c for (l, n), c in counts.items() if l == "A"},
        d={n: c for (l, n), c in counts.items() if l == "D"},
        e={n: c for (l, n), c in counts.items() if l == "E"},
    )


def render_config(config: ADEConfig) -> str:
    return config.render()


def m_value(config: ADEConfig) -> Fraction:
    """Orbifold Euler-number deficiency of the configuration.

    Per component this equals (n+1) - 1/|G| for the finite group G of the
    corresponding quotient singularity: |G| = n+1 for A_n, 4(n-2) for D_n,
    and 24, 48, 120 for E_6, E_7, E_8.
    """
    total = Fraction(0)
    for n, c in config.a:
        total += c * (Fraction(n + 1) - Fraction(1, n + 1))
    for n, c in config.d:
        total += c * (Fraction(n + 1) - Fraction(1, 4 * (n - 2)))
    for n, c in config.e:
        order = {6: 24, 7: 48, 8: 120}[n]
        total += c * (Fraction(n + 1) - Fraction(1, order))
    return total


def rank(config: ADEConfig) -> int:
    return config.rank


def component_edges(letter: str, n: int) -> list[tuple[int, int]]:
    """Edges of one component in the canonical 0-based node ordering."""
    if letter == "A":
        return [(s, s + 1) for s in range(n - 1)]
    if letter == "D":
        spine = [(s, s + 1) for s in range(n - 3)]
        return spine + [(n - 3, n - 2), (n - 3, n - 1)]
    if letter == "E":
        spine = [(s, s + 1) for s in range(n - 2)]
        return spine + [(2, n - 1)]
    raise InvalidComponent(f"{letter}{n}")


def component_gram(letter: str, n: int) -> list[list[int]]:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for i, j in component_edges(letter, n):
        g[i][j] = g[j][i] = 1
    return g


@dataclass(frozen=True)
class DynkinGraph:
    """Curve-level view: nodes labelled like 'A3.2.1', edges as index pairs."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    component_slices: tuple[tuple[str, int, int, int], ...]  # (letter, n, start, stop)

    def component_nodes(self) -> list[tuple[str, int, tuple[int, ...]]]:
        return [
            (letter, n, tuple(range(start, stop)))
            for letter, n, start, stop in self.component_slices
        ]


def _component_labels(config: ADEConfig) -> list[str]:
    labels = []
    seen: dict[tuple[str, int], int] = {}
    for letter, n in config.components():
        idx = seen.get((letter, n), 0) + 1
        seen[(letter, n)] = idx
        labels.extend(f"{letter}{n}.{idx}.{s+1}" for s in range(n))
    return labels


def dynkin(config: ADEConfig) -> DynkinGraph:
    labels = _component_labels(config)
    edges = []
    slices = []
    ofs = 0
    for letter, n in config.components():
        edges.extend((ofs + i, ofs + j) for i, j in component_edges(letter, n))
        slices.append((letter, n, ofs, ofs + n))
        ofs += n
    return DynkinGraph(tuple(labels), tuple(edges), tuple(slices))


def gram(config: ADEConfig, labels: tuple[str, ...] | None = None) -> GramLattice:
    blocks = [component_gram(letter, n) for letter, n in config.components()]
    g = direct_sum(blocks)
    return GramLattice(
        gram=tuple(tuple(row) for row in g),
        basis_labels=labels or tuple(_component_labels(config)),
    )


def closed_form_disc(config: ADEConfig) -> tuple[int, ...]:
    """Invariant factors of the discriminant group from the classical table.

    A_n contributes Z_{n+1}; D_n contributes (Z_2)^2 for even n and Z_4 for
    odd n; E_6, E_7, E_8 contribute Z_3, Z_2, nothing.  Must agree with the
    Smith normal form of gram(config).
    """
    orders: list[int] = []
    for n, c in config.a:
        orders.extend([n + 1] * c)
    for n, c in config.d:
        orders.extend(([2, 2] if n % 2 == 0 else [4]) * c)
    for n, c in config.e:
        extra = {6: [3], 7: [2], 8: []}[n]
        orders.extend(extra * c)
    return invariant_factors_from_orders(orders)


def invariant_factors_from_orders(orders: list[int]) -> tuple[int, ...]:
    """Convert a multiset of cyclic orders to the invariant factor chain."""
    primary: dict[int, list[int]] = {}
    for o in orders:
        if o <= 1:
            continue
        rest = o
        p = 2
        while p * p <= rest:
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                primary.setdefault(p, []).append(p**e)
            p += 1
        if rest > 1:
            primary.setdefault(rest, []).append(rest)
    for p in primary:
        primary[p].sort(reverse=True)
    depth = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(depth):
        f = 1
        for p in primary:
            if i < len(primary[p]):
                f *= primary[p][i]
        factors.append(f)
    return tuple(sorted(factors))


@lru_cache(maxsize=None)
def _component_mis(letter: str, n: int) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set of one component graph, with witness nodes."""
    adj = [0] * n
    for i, j in component_edges(letter, n):
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    memo: dict[int, tuple[int, int]] = {}

    def best(mask: int) -> tuple[int, int]:
        if mask == 0:
            return (0, 0)
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        take_size, take_set = best(mask & ~((1 << v) | adj[v]))
        take = (take_size + 1, take_set | (1 << v))
        skip = best(mask & ~(1 << v))
        out = take if take[0] >= skip[0] else skip
        memo[mask] = out
        return out

    size, chosen = best((1 << n) - 1)
    return size, tuple(i for i in range(n) if chosen >> i & 1)


def max_disjoint_curves(config: ADEConfig) -> tuple[int, tuple[str, ...]]:
    """Size of a maximum set of pairwise disjoint curves, plus a witness."""
    graph = dynkin(config)
    total = 0
    witness: list[str] = []
    for letter, n, nodes in graph.component_nodes():
        size, chosen = _component_mis(letter, n)
        total += size
        witness.extend(graph.nodes[nodes[i]] for i in chosen)
    return total, tuple(witness)


def _component_catalog(max_rank: int) -> list[tuple[str, int, Fraction]]:
    """All ADE components of rank <= max_rank, largest m first."""
    items: list[tuple[str, int, Fraction]] = []
    for n in range(1, max_rank + 1):
        items.append(("A", n, Fraction(n + 1) - Fraction(1, n + 1)))
    for n in range(4, max_rank + 1):
        items.append(("D", n, Fraction(n + 1) - Fraction(1, 4 * (n - 2))))
    for n in ADE_E_RANKS:
        if n <= max_rank:
            items.append(("E", n, Fraction(n + 1) - Fraction(1, {6: 24, 7: 48, 8: 120}[n])))
    items.sort(key=lambda t: (-t[2], t[0], -t[1]))
    return items


def enumerate_configs(m_target: Fraction | int | str, max_rank: int) -> list[ADEConfig]:
    """All configurations with m(C) exactly m_target and rank <= max_rank.

    The search is exhaustive: each component contributes m >= 3/2 and the
    densest component per unit of rank is A_1 (3/2 per rank), which bounds
    the tree.  Output sorted lexicographically by (rank, counts).
    """
    m_target = Fraction(m_target)
    if m_target <= 0:
        raise ValueError("m target must be positive")
    catalog = _component_catalog(max_rank)
    density = Fraction(3, 2)  # A_1's m per unit rank, the maximum
    results: list[ADEConfig] = []
    acc: list[tuple[str, int, int]] = []

    def descend(idx: int, rem_m: Fraction, rem_rank: int) -> None:
        if rem_m == 0:
            results.append(_config_from_counts(acc))
            return
        if idx == len(catalog) or rem_m < 0 or rem_m > density * rem_rank:
            return
        letter, n, m_comp = catalog[idx]
        max_count = min(int(rem_m / m_comp), rem_rank // n)
        for count in range(max_count, -1, -1):
            if count:
                acc.append((letter, n, count))
            descend(idx + 1, rem_m - count * m_comp, rem_rank - count * n)
            if count:
                acc.pop()

    descend(0, m_target, max_rank)
    return sorted(results, key=ADEConfig.sort_key)


def _config_from_counts(acc: list[tuple[str, int, int]]) -> ADEConfig:
    return ADEConfig.of(
        a={n: c for l, n, c in acc if l == "A"},
        d={n: c for l, n, c in acc if l == "D"},
        e={n: c for l, n, c in acc if l == "E"},
    )


def classify_dynkin(n_nodes: int, edges: list[tuple[int, int]]) -> ADEConfig:
    """Recognize a disjoint union of ADE diagrams; raises ValueError if not."""
    adj: dict[int, set[int]] = {i: set() for i in range(n_nodes)}
    for i, j in edges:
        if i == j:
            raise ValueError("self loop")
        adj[i].add(j)
        adj[j].add(i)
    seen = set()
    counts: dict[tuple[str, int], int] = {}
    for s in range(n_nodes):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        n = len(comp)
        n_edges = sum(1 for i, j in edges if i in comp and j in comp)
        if n_edges != n - 1:
            raise ValueError("component is not a tree")
        degrees = sorted(len(adj[v]) for v in comp)
        branch = [v for v in comp if len(adj[v]) >= 3]
        if not branch:
            counts[("A", n)] = counts.get(("A", n), 0) + 1
            continue
        if len(branch) > 1 or degrees[-1] > 3:
            raise ValueError("not an ADE diagram")
        b = branch[0]
        arms = []
        for start in adj[b]:
            length = 1
            prev, cur = b, start
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            counts[("D", n)] = counts.get(("D", n), 0) + 1
        elif arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            counts[("E", n)] = counts.get(("E", n), 0) + 1
        else:
            raise ValueError("not an ADE diagram")
    return ADEConfig.of(
        a={n: c for (l, n), c in counts.items() if l == "A"},
        d={n: c for (l, n), c in counts.items() if l == "D"},
        e={n: c for (l, n), c in counts.items() if l == "E"},
    )
