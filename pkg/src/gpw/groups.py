"""Finite groups given by explicit multiplication tables.

Elements are integer indices into a label tuple.  Cyclic and product groups
get canonical labels; anything else can be supplied as an explicit table.
Every constructor fully validates the table (Latin square, identity,
associativity), so downstream code may assume a genuine group.
"""

from __future__ import annotations

from .errors import NoIdentity, NonAssociativeTable, NotLatinSquare, SchemaError


class FiniteGroup:
    """An immutable finite group with labelled elements.

    ``table[i][j]`` is the index of the product of elements ``i`` and ``j``.
    ``spec`` records how the group was described (used when serializing
    algebra documents); it does not participate in equality.
    """

    def __init__(
        self,
        labels: tuple[str, ...],
        table: tuple[tuple[int, ...], ...],
        identity: int | None = None,
        spec: dict | None = None,
    ):
        labels = tuple(labels)
        table = tuple(tuple(row) for row in table)
        k = len(labels)
        if k == 0:
            raise SchemaError("a group needs at least one element")
        if len(set(labels)) != k:
            raise SchemaError("group labels must be distinct")
        if len(table) != k or any(len(row) != k for row in table):
            raise SchemaError(f"multiplication table must be {k}x{k}")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < k:
                    raise SchemaError(f"table entry {v!r} out of range")

        full = frozenset(range(k))
        for i, row in enumerate(table):
            if frozenset(row) != full:
                raise NotLatinSquare(f"row {labels[i]!r} repeats an element")
        for j in range(k):
            if frozenset(table[i][j] for i in range(k)) != full:
                raise NotLatinSquare(f"column {labels[j]!r} repeats an element")

        if identity is None:
            identity = next(
                (
                    e
                    for e in range(k)
                    if all(table[e][x] == x and table[x][e] == x for x in range(k))
                ),
                None,
            )
            if identity is None:
                raise NoIdentity("table has no two-sided identity element")
        else:
            if not 0 <= identity < k:
                raise SchemaError("declared identity index out of range")
            if any(table[identity][x] != x or table[x][identity] != x for x in range(k)):
                raise NoIdentity(f"declared identity {labels[identity]!r} does not act as one")

        for a in range(k):
            for b in range(k):
                ab = table[a][b]
                for c in range(k):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise NonAssociativeTable(
                            f"({labels[a]}·{labels[b]})·{labels[c]} != "
                            f"{labels[a]}·({labels[b]}·{labels[c]})"
                        )

        self.labels = labels
        self.table = table
        self.identity = identity
        self.spec = spec or {"kind": "table", "labels": list(labels),
                             "table": [[labels[v] for v in row] for row in table],
                             "identity": labels[identity]}
        # a validated Latin square with identity and associativity has
        # two-sided inverses; record them
        self._inv = tuple(
            next(b for b in range(k) if table[a][b] == identity) for a in range(k)
        )
        self._abelian = all(
            table[a][b] == table[b][a] for a in range(k) for b in range(a)
        )

    # -- element operations ----------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def order_of(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            n += 1
        return n

    @property
    def is_abelian(self) -> bool:
        return self._abelian

    def element(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise SchemaError(f"no group element labelled {label!r}") from None

    def label(self, index: int) -> str:
        return self.labels[index]

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and self.labels == other.labels
            and self.table == other.table
            and self.identity == other.identity
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.table, self.identity))

    def __repr__(self) -> str:
        return f"FiniteGroup({list(self.labels)})"


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n with labels 1, g, g2, ..."""
    if n < 1:
        raise SchemaError("cyclic group order must be >= 1")
    labels = tuple("1" if i == 0 else "g" if i == 1 else f"g{i}" for i in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(labels, table, identity=0, spec={"kind": "cyclic", "order": n})


def product_of_cyclics(orders: tuple[int, ...] | list[int]) -> FiniteGroup:
    """Direct product of cyclic groups; elements are labelled by exponent
    tuples such as ``(1,0)``."""
    orders = tuple(int(n) for n in orders)
    if not orders or any(n < 1 for n in orders):
        raise SchemaError("product orders must be positive")
    tuples: list[tuple[int, ...]] = [()]
    for n in orders:
        tuples = [t + (i,) for t in tuples for i in range(n)]
    index = {t: i for i, t in enumerate(tuples)}
    labels = tuple("(" + ",".join(str(c) for c in t) + ")" for t in tuples)
    table = tuple(
        tuple(
            index[tuple((a + b) % n for a, b, n in zip(s, t, orders))]
            for t in tuples
        )
        for s in tuples
    )
    return FiniteGroup(labels, table, identity=0,
                       spec={"kind": "product", "orders": list(orders)})


def from_table(labels, rows, identity_label: str | None = None) -> FiniteGroup:
    """Build a group from a table whose entries are element labels."""
    labels = tuple(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    if len(pos) != len(labels):
        raise SchemaError("group labels must be distinct")
    try:
        table = tuple(tuple(pos[v] for v in row) for row in rows)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"table entry is not a known label: {exc}") from None
    if identity_label is not None and identity_label not in pos:
        raise SchemaError(f"identity label {identity_label!r} unknown")
    identity = pos[identity_label] if identity_label is not None else None
    return FiniteGroup(labels, table, identity=identity)


def build_group(spec: dict) -> FiniteGroup:
    """Construct a group from the description block used in algebra
    documents: ``{"kind": "cyclic", "order": n}``,
    ``{"kind": "product", "orders": [...]}`` or
    ``{"kind": "table", "labels": [...], "table": [[label, ...], ...],
    "identity": label}``."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SchemaError("group block must be an object with a 'kind'")
    kind = spec["kind"]
    if kind == "cyclic":
        if "order" not in spec:
            raise SchemaError("cyclic group block needs an 'order'")
        return cyclic(spec["order"])
    if kind == "product":
        if "orders" not in spec:
            raise SchemaError("product group block needs 'orders'")
        return product_of_cyclics(spec["orders"])
    if kind == "table":
        missing = {"labels", "table"} - spec.keys()
        if missing:
            raise SchemaError(f"table group block missing {sorted(missing)}")
        return from_table(spec["labels"], spec["table"], spec.get("identity"))
    raise SchemaError(f"unknown group kind {kind!r}")


def parse_group_shorthand(text: str) -> FiniteGroup:
    """Parse CLI shorthand like ``c2``, ``c4`` or ``c2xc2``."""
    parts = text.lower().split("x")
    orders = []
    for p in parts:
        if not p.startswith("c") or not p[1:].isdigit():
            raise SchemaError(
                f"cannot parse group {text!r}; expected e.g. 'c2' or 'c2xc2'"
            )
        orders.append(int(p[1:]))
    if len(orders) == 1:
        return cyclic(orders[0])
    return product_of_cyclics(orders)
