"""Support tables for A1 and A2, rendered from the classifier.

Each row is computed by running the classifier on a witness weight that
satisfies the row's condition, and rows whose condition is uniform ("all
lam") are checked for constancy across the search grid.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import product
from typing import Callable

from .modweights import conjugate_to_simple, phi_lambda_p
from .rootsys import build_root_system
from .supports import classify_A2, support_A1
from .weyl import from_word, identity, longest_element

__all__ = ["Row", "TABLES", "build_table", "render_text", "render_json"]

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)

W_A2 = [
    ("e", identity(2)),
    ("s_a", from_word([1], 2)),
    ("s_b", from_word([2], 2)),
    ("s_a s_b", from_word([1, 2], 2)),
    ("s_b s_a", from_word([2, 1], 2)),
    ("w0", longest_element(2)),
]


@dataclass(frozen=True)
class Row:
    w: str
    variety: str
    condition: str


def _grid(p: int):
    bound = 3 * p
    return list(product(range(bound), repeat=2))


def _uniform(w, p: int, pred: Callable = lambda lam: True) -> str:
    labels = {str(classify_A2(w, lam, p).variety) for lam in _grid(p) if pred(lam)}
    if not labels:
        raise LookupError("no witness weight for row")
    if len(labels) != 1:
        raise AssertionError(f"row is not uniform: {sorted(labels)}")
    return labels.pop()


def _I_size(lam, p):
    _, I = conjugate_to_simple(A2, phi_lambda_p(A2, lam, p))
    return len(I)


def steinberg(p: int) -> list[Row]:
    lam = (p - 1, p - 1)
    return [Row(name, str(classify_A2(w, lam, p).variety), "lam=(p-1)rho") for name, w in W_A2]


def table_a1(p: int) -> list[Row]:
    rows = []
    for name, w in (("e", identity(1)), ("s_a", from_word([1], 1))):
        for cond, pred in (("p !| l+1", lambda l: (l + 1) % p), ("p | l+1", lambda l: (l + 1) % p == 0)):
            labels = {str(support_A1(w, l, p)) for l in range(3 * p) if pred(l)}
            assert len(labels) == 1, labels
            rows.append(Row(name, labels.pop(), cond))
    return rows


def table_a2_short(p: int) -> list[Row]:
    """Rows with length(w) != 2; the w0 row is split by the size of I."""
    e, s_a, s_b, *_ = [w for _, w in W_A2]
    w0 = W_A2[-1][1]
    rows = [
        Row("e", _uniform(e, p), "all lam"),
        Row("s_a", _uniform(s_a, p, lambda lam: (lam[0] + 1) % p == 0), "p | l1+1"),
        Row("s_a", _uniform(s_a, p, lambda lam: (lam[0] + 1) % p != 0), "p !| l1+1"),
        Row("s_b", _uniform(s_b, p, lambda lam: (lam[1] + 1) % p == 0), "p | l2+1"),
        Row("s_b", _uniform(s_b, p, lambda lam: (lam[1] + 1) % p != 0), "p !| l2+1"),
    ]
    for size, cond in ((0, "|I|=0"), (1, "|I|=1"), (2, "I=Delta")):
        try:
            label = _uniform(w0, p, lambda lam: _I_size(lam, p) == size)
        except LookupError:
            continue
        rows.append(Row("w0", label, cond))
    return rows


TABLES = {
    "steinberg": steinberg,
    "a1": table_a1,
    "a2": table_a2_short,
    "a2p2": lambda p=2: table_a2_short(2),
}

HEADERS = {
    "steinberg": ("w", "V_B1(H0(w,(p-1)rho))", "lambda"),
    "a1": ("w", "V_B1(H0(w,lambda))", "lambda"),
    "a2": ("w", "V_B1(H0(w,lambda))", "lambda"),
    "a2p2": ("w", "V_B1(H0(w,lambda))", "lambda"),
}


def build_table(name: str, p: int) -> list[Row]:
    if name not in TABLES:
        raise KeyError(name)
    if name == "a2p2":
        return TABLES[name]()
    return TABLES[name](p)


def render_text(name: str, rows: list[Row]) -> str:
    header = HEADERS[name]
    cells = [header] + [(r.w, r.variety, r.condition) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(3)]
    lines = ["  ".join(c[i].ljust(widths[i]) for i in range(3)).rstrip() for c in cells]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    return "\n".join(lines) + "\n"


def render_json(rows: list[Row]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
