"""Plain-text hypergraph and certificate files.

Hypergraph file::

    # comment
    5 3
    1 2 5
    1 3 5

Certificate file: kind line (``path`` / ``cycle``), vertex line, edge-index
line (1-based positions in the companion hypergraph file).
"""

from __future__ import annotations

from typing import Iterable, Optional

from .hypercore import BergeCertificate, CertificateKind, Hypergraph, HypergraphError, new_hypergraph


class ParseError(ValueError):
    """Malformed input; ``line`` is 1-based, ``kind`` names the failed check."""

    def __init__(self, message: str, line: Optional[int] = None, kind: str = "SyntaxError"):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{kind}: {message}")
        self.line = line
        self.kind = kind


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _ints(line: str, no: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", no) from None


def parse_hypergraph(text: str) -> Hypergraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n r' header")
    no, header = lines[0]
    head = _ints(header, no)
    if len(head) != 2:
        raise ParseError(f"header needs exactly 'n r', got {header!r}", no)
    n, r = head
    edges = []
    edge_lines = []
    for no, line in lines[1:]:
        edges.append(_ints(line, no))
        edge_lines.append(no)
    try:
        return new_hypergraph(n, r, edges)
    except HypergraphError as exc:
        line = edge_lines[exc.edge - 1] if exc.edge else lines[0][0]
        raise ParseError(str(exc), line, type(exc).__name__) from exc


def write_hypergraph(H: Hypergraph, comments: Iterable[str] = ()) -> str:
    """Serialize in stored edge order (vertices ascending within each edge)."""
    out = [f"# {c}" for c in comments]
    out.append(f"{H.n} {H.r}")
    out.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> BergeCertificate:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing certificate kind line")
    no, kind = lines[0]
    if kind not in ("path", "cycle"):
        raise ParseError(f"kind must be 'path' or 'cycle', got {kind!r}", no)
    if len(lines) not in (2, 3):
        raise ParseError("expected a vertex line and an edge-index line", lines[-1][0])
    verts = _ints(lines[1][1], lines[1][0])
    edges = _ints(lines[2][1], lines[2][0]) if len(lines) == 3 else []
    want = len(verts) - 1 if kind == "path" else len(verts)
    if len(edges) != want:
        where = lines[2][0] if len(lines) == 3 else lines[1][0]
        raise ParseError(f"{kind} with {len(verts)} vertices needs {want} edge indices, got {len(edges)}", where)
    return BergeCertificate(CertificateKind(kind), tuple(verts), tuple(edges))


def write_certificate(c: BergeCertificate, comments: Iterable[str] = ()) -> str:
    out = [f"# {x}" for x in comments]
    out.append(c.kind.value)
    out.append(" ".join(map(str, c.vertices)))
    out.append(" ".join(map(str, c.edge_indices)))
    return "\n".join(out) + "\n"
