"""Text formats: the trigraph line format and graph6.

Trigraph text format (bit-exact round trips after canonical ordering):

    trigraph <n>
    <u> <v> E        # strongly adjacent pair
    <u> <v> S        # switchable pair

Unlisted pairs are strongly antiadjacent.  Lines starting with '#' and blank
lines are ignored.  The serializer writes pairs with u < v in lexicographic
order, so parse -> serialize is the identity on canonically ordered files.

graph6 is the usual printable encoding of a simple graph's upper triangle;
decoding accepts an optional '>>graph6<<' header.
"""

from __future__ import annotations

import os

from .errors import InputError
from .trigraph import STRONG, SWITCHABLE, Trigraph, make_trigraph

_G6_HEADER = ">>graph6<<"


def to_text(T: Trigraph) -> str:
    lines = [f"trigraph {T.n}"]
    for u, v in T.pairs():
        code = T.value(u, v)
        if code == STRONG:
            lines.append(f"{u} {v} E")
        elif code == SWITCHABLE:
            lines.append(f"{u} {v} S")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Trigraph:
    n = None
    entries: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "trigraph":
                raise InputError(f"line {lineno}: expected header 'trigraph <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 3:
            raise InputError(f"line {lineno}: expected '<u> <v> <E|S>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: bad vertex in {line!r}") from None
        if parts[2] == "E":
            code = STRONG
        elif parts[2] == "S":
            code = SWITCHABLE
        else:
            raise InputError(f"line {lineno}: pair code must be E or S, got {parts[2]!r}")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InputError(f"line {lineno}: pair ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"line {lineno}: duplicate pair ({key[0]}, {key[1]})")
        seen.add(key)
        entries.append((u, v, code))
    if n is None:
        raise InputError("missing 'trigraph <n>' header")
    return make_trigraph(n, entries)


def to_graph6(G: Trigraph) -> str:
    if not G.is_graph:
        raise InputError("graph6 can only encode graphs (no switchable pairs)")
    n = G.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise InputError("graph6 vertex count out of supported range")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if G.value(u, v) == STRONG else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [
        chr(sum(b << (5 - i) for i, b in enumerate(bits[k:k + 6])) + 63)
        for k in range(0, len(bits), 6)
    ]
    return prefix + "".join(chunks)


def from_graph6(text: str) -> Trigraph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise InputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise InputError("graph6 string has characters outside the printable range")
    if data[0] == 63:  # '~'
        if len(data) < 4:
            raise InputError("truncated graph6 vertex count")
        if data[1] == 63:
            raise InputError("graph6 vertex count out of supported range")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise InputError(
            f"graph6 length mismatch: n={n} needs {need} payload bytes, got {len(body)}")
    bits = []
    for d in body:
        bits.extend((d >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v, STRONG))
            k += 1
    if any(bits[k:]):
        raise InputError("graph6 padding bits must be zero")
    return make_trigraph(n, edges)


def loads(text: str, fmt: str | None = None) -> Trigraph:
    """Parse trigraph text or graph6; sniffs the format when fmt is None."""
    if fmt == "trigraph":
        return from_text(text)
    if fmt == "graph6":
        return from_graph6(text)
    if fmt is not None:
        raise InputError(f"unknown format {fmt!r}")
    stripped = text.lstrip()
    if stripped.startswith("trigraph") or stripped.startswith("#"):
        return from_text(text)
    return from_graph6(text)


def load(path_or_literal: str, fmt: str | None = None) -> Trigraph:
    """Read a trigraph from a file path, or treat the string as a literal."""
    if os.path.exists(path_or_literal):
        with open(path_or_literal, "r", encoding="ascii") as fh:
            return loads(fh.read(), fmt)
    return loads(path_or_literal, fmt)
