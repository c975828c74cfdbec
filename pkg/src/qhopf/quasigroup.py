"""Loops (quasigroups with identity): finite Cayley tables and lazy oracles.

Finite loops address elements by table index; oracle loops use arbitrary
hashable, totally ordered labels.  Both expose the same handle interface:
``product``, ``identity``, ``inverse``, ``left_divide``, ``right_divide``.
"""

from __future__ import annotations

import json
from itertools import permutations
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (BadShape, NoIdentity, NotAssociative, NotLatinSquare,
                     OracleInconsistent, ParseError, SampleRequired)
from .report import AxiomReport

Element = Hashable


class Quasigroup:
    """Common handle interface."""

    name: str = "Q"
    is_finite: bool = False

    def product(self, u, v):
        raise NotImplementedError

    @property
    def identity(self):
        raise NotImplementedError

    def inverse(self, u):
        raise NotImplementedError

    def left_divide(self, u, w):
        """The unique v with u*v = w."""
        raise NotImplementedError

    def right_divide(self, w, u):
        """The unique v with v*u = w."""
        raise NotImplementedError

    def elements(self) -> list | None:
        return None

    def label(self, u) -> str:
        return str(u)


class FiniteLoop(Quasigroup):
    is_finite = True

    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]], identity_index: int,
                 name: str | None = None):
        self.labels = tuple(str(x) for x in labels)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.identity_index = int(identity_index)
        self.name = name or "loop"
        n = len(self.labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._ldiv = [[0] * n for _ in range(n)]
        self._rdiv = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                w = self.table[u][v]
                self._ldiv[u][w] = v
                self._rdiv[w][v] = u

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteLoop({self.name!r}, order={self.order})"

    @property
    def identity(self) -> int:
        return self.identity_index

    def elements(self) -> list[int]:
        return list(range(self.order))

    def product(self, u: int, v: int) -> int:
        return self.table[u][v]

    def left_divide(self, u: int, w: int) -> int:
        return self._ldiv[u][w]

    def right_divide(self, w: int, u: int) -> int:
        return self._rdiv[w][u]

    def inverse(self, u: int) -> int:
        # right inverse u\e; two-sided for IP loops
        return self._ldiv[u][self.identity_index]

    def label(self, u: int) -> str:
        return self.labels[u]

    def index(self, label: str) -> int:
        return self._index[label]

    def to_text(self) -> str:
        lines = [str(self.order), " ".join(self.labels)]
        lines += [" ".join(self.labels[x] for x in row) for row in self.table]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"labels": list(self.labels), "table": [list(r) for r in self.table],
                           "identity": self.labels[self.identity_index]})


class OracleQuasigroup(Quasigroup):
    """IP loop given by pure functions on (possibly infinitely many) labels.

    Divisions use the inverse property, v = u^-1 w and v = w u^-1, and each
    result is confirmed with one product call.
    """

    def __init__(self, product: Callable, identity, inverse: Callable, name: str = "oracle",
                 sampler: Callable | None = None):
        self._product = product
        self._identity = identity
        self._inverse = inverse
        self.name = name
        self.sampler = sampler

    def __repr__(self) -> str:
        return f"OracleQuasigroup({self.name!r})"

    @property
    def identity(self):
        return self._identity

    def product(self, u, v):
        return self._product(u, v)

    def inverse(self, u):
        return self._inverse(u)

    def left_divide(self, u, w):
        v = self._product(self._inverse(u), w)
        if self._product(u, v) != w:
            raise OracleInconsistent(f"{u!r} * ({u!r}^-1 * {w!r}) != {w!r}")
        return v

    def right_divide(self, w, u):
        v = self._product(w, self._inverse(u))
        if self._product(v, u) != w:
            raise OracleInconsistent(f"({w!r} * {u!r}^-1) * {u!r} != {w!r}")
        return v

    def sample(self, n: int, rng) -> list:
        if self.sampler is None:
            raise SampleRequired(f"{self.name} has no sampler; pass explicit elements")
        return [self.sampler(rng) for _ in range(n)]


def left_divide(q: Quasigroup, u, w):
    return q.left_divide(u, w)


def right_divide(q: Quasigroup, w, u):
    return q.right_divide(w, u)


# -- construction and validation ----------------------------------------------

def from_cayley_table(labels: Sequence[str], table: Sequence[Sequence[int]], identity_label: str,
                      name: str | None = None) -> FiniteLoop:
    """Validate an index table and build a :class:`FiniteLoop`."""
    labels = [str(x) for x in labels]
    n = len(labels)
    if n == 0:
        raise BadShape("empty table")
    if len(set(labels)) != n:
        raise BadShape("duplicate labels")
    if len(table) != n or any(len(row) != n for row in table):
        raise BadShape(f"table must be {n}x{n}")
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            if not isinstance(x, int) or not 0 <= x < n:
                raise BadShape(f"entry ({i}, {j}) = {x!r} out of range")
    for i, row in enumerate(table):
        if len(set(row)) != n:
            raise NotLatinSquare(f"row {i} ({labels[i]}) repeats an entry")
    for j in range(n):
        col = [table[i][j] for i in range(n)]
        if len(set(col)) != n:
            raise NotLatinSquare(f"column {j} ({labels[j]}) repeats an entry")
    if identity_label not in labels:
        raise NoIdentity(f"identity label {identity_label!r} not among the labels")
    e = labels.index(identity_label)
    for u in range(n):
        if table[e][u] != u or table[u][e] != u:
            raise NoIdentity(f"{identity_label!r} is not a two-sided identity (fails at {labels[u]!r})")
    return FiniteLoop(labels, table, e, name=name)


def parse_table_text(text: str, name: str | None = None) -> FiniteLoop:
    lines = [ln for ln in text.splitlines()]
    # keep original numbering for messages; skip trailing blank lines only
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected the order n, got {lines[0].strip()!r}", 1) from None
    if n <= 0:
        raise ParseError("order must be positive", 1)
    if len(lines) < 2:
        raise ParseError("missing label line", 2)
    labels = lines[1].split()
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}", 2)
    if len(set(labels)) != n:
        raise ParseError("duplicate labels", 2)
    index = {lab: i for i, lab in enumerate(labels)}
    table = []
    for r in range(n):
        lineno = r + 3
        if lineno > len(lines):
            raise ParseError(f"missing table row {r}", lineno)
        toks = lines[lineno - 1].split()
        if len(toks) != n:
            raise ParseError(f"row {r} has {len(toks)} entries, expected {n}", lineno)
        try:
            table.append([index[t] for t in toks])
        except KeyError as exc:
            raise ParseError(f"unknown label {exc.args[0]!r}", lineno) from None
    if len(lines) > n + 2 and any(ln.strip() for ln in lines[n + 2:]):
        raise ParseError("trailing content after the table", n + 3)
    return from_cayley_table(labels, table, labels[0], name=name)


def parse_table_json(text: str, name: str | None = None) -> FiniteLoop:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict) or not {"labels", "table", "identity"} <= set(data):
        raise ParseError("JSON table needs keys 'labels', 'table', 'identity'", 1)
    return from_cayley_table(data["labels"], data["table"], str(data["identity"]), name=name)


def load_table(path: str | Path) -> FiniteLoop:
    path = Path(path)
    text = path.read_text()
    name = path.stem
    if text.lstrip().startswith("{"):
        return parse_table_json(text, name=name)
    return parse_table_text(text, name=name)


def loop_from_function(elements: Sequence, mul: Callable, identity, labels: Sequence[str] | None = None,
                       name: str | None = None) -> FiniteLoop:
    elements = list(elements)
    idx = {x: i for i, x in enumerate(elements)}
    table = [[idx[mul(a, b)] for b in elements] for a in elements]
    labels = labels or [str(x) for x in elements]
    return from_cayley_table(labels, table, labels[idx[identity]], name=name)


# -- checks -----------------------------------------------------------------

def check_ip(q: Quasigroup, sample: Iterable | None = None) -> AxiomReport:
    """Check u^-1(uv) = v = (vu)u^-1 over all pairs (finite) or sampled pairs (oracle).

    Also records whether inversion is an involution, which the two laws imply.
    """
    if q.is_finite:
        elems = q.elements()
        rep = AxiomReport()
    else:
        if sample is None:
            raise SampleRequired("oracle quasigroups need an explicit sample")
        elems = list(sample)
        rep = AxiomReport(sampled=True)
    for u in elems:
        ui = q.inverse(u)
        for v in elems:
            rep.check("ip_left", (u, v), q.product(ui, q.product(u, v)), v)
            rep.check("ip_right", (u, v), q.product(q.product(v, u), ui), v)
        rep.check("inverse_involution", (u,), q.inverse(ui), u)
    return rep


def associativity_witness(q: FiniteLoop) -> tuple | None:
    """First triple (u, v, w) with (uv)w != u(vw), or None."""
    m = q.table
    n = q.order
    for u in range(n):
        for v in range(n):
            uv = m[u][v]
            for w in range(n):
                if m[uv][w] != m[u][m[v][w]]:
                    return (u, v, w)
    return None


def is_associative(q: FiniteLoop) -> bool:
    return associativity_witness(q) is None


def is_commutative(q: FiniteLoop) -> bool:
    n = q.order
    return all(q.table[u][v] == q.table[v][u] for u in range(n) for v in range(n))


# -- catalog generators -------------------------------------------------------

def cyclic_group(n: int) -> FiniteLoop:
    labels = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return from_cayley_table(labels, table, "e", name=f"C{n}")


def symmetric_group(n: int) -> FiniteLoop:
    perms = sorted(permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    table = [[idx[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["e" if p == tuple(range(n)) else "".join(map(str, p)) for p in perms]
    return from_cayley_table(labels, table, "e", name=f"S{n}")


def chein_double(g: FiniteLoop) -> FiniteLoop:
    """Chein double M(G, 2) on G u Gx.

    g(hx) = (hg)x,  (gx)h = (gh^-1)x,  (gx)(hx) = h^-1 g.
    """
    w = associativity_witness(g)
    if w is not None:
        raise NotAssociative(f"{g.name} is not a group: witness {tuple(g.label(i) for i in w)}")
    n = g.order
    m = g.table
    inv = [g.inverse(i) for i in range(n)]
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        for b in range(n):
            table[a][b] = m[a][b]
            table[a][n + b] = n + m[b][a]
            table[n + a][b] = n + m[a][inv[b]]
            table[n + a][n + b] = m[inv[b]][a]
    labels = list(g.labels) + [f"{lab}x" for lab in g.labels]
    return from_cayley_table(labels, table, g.labels[g.identity], name=f"M({g.name},2)")


def integer_oracle() -> OracleQuasigroup:
    """The additive group of integers."""
    return OracleQuasigroup(lambda u, v: u + v, 0, lambda u: -u, name="Z",
                            sampler=lambda rng: rng.randint(-50, 50))


def infinite_dihedral_oracle() -> OracleQuasigroup:
    """Affine maps t -> s*t + c of Z (s = +-1), labelled (s, c); nonabelian."""
    def mul(a, b):
        return (a[0] * b[0], a[1] + a[0] * b[1])

    def inv(a):
        return (a[0], -a[0] * a[1])

    return OracleQuasigroup(mul, (1, 0), inv, name="Dinf",
                            sampler=lambda rng: (rng.choice((1, -1)), rng.randint(-20, 20)))


def chein_double_oracle(group: OracleQuasigroup) -> OracleQuasigroup:
    """Chein double of an oracle group; labels (g, 0) for g and (g, 1) for gx."""
    mul, inv = group.product, group.inverse

    def prod(a, b):
        (g, s), (h, t) = a, b
        if not s and not t:
            return (mul(g, h), 0)
        if not s:
            return (mul(h, g), 1)
        if not t:
            return (mul(g, inv(h)), 1)
        return (mul(inv(h), g), 0)

    def inverse(a):
        g, s = a
        return (inv(g), 0) if not s else (g, 1)

    sampler = None
    if group.sampler is not None:
        base = group.sampler
        sampler = lambda rng: (base(rng), rng.randint(0, 1))  # noqa: E731
    return OracleQuasigroup(prod, (group.identity, 0), inverse, name=f"M({group.name},2)",
                            sampler=sampler)
