"""Instance and certificate text formats.

Instance files ("qkdg 1"): a vertex-count line, an optional clique-part
line turning the file into a split digraph, and one line per arc in
ascending order.  Certificate files ("qkcert 1") carry the algorithm
label, the vertex set, per-vertex witness paths, the bound in force, and
a digest of the instance they certify.  Both formats are line-based,
LF-terminated and human-diffable.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .digraph import Digraph, QkCertificate, SplitDigraph, SplitError, VerificationError

INSTANCE_MAGIC = "qkdg 1"
CERTIFICATE_MAGIC = "qkcert 1"


class InstanceParseError(ValueError):
    """An instance file is malformed; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CertificateParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def serialize_instance(obj: Digraph | SplitDigraph, comments: Sequence[str] = ()) -> str:
    """Canonical text form: header, comments, n, optional k line, arcs ascending."""
    graph = obj.graph if isinstance(obj, SplitDigraph) else obj
    lines = [INSTANCE_MAGIC]
    lines += [f"# {c}" for c in comments]
    lines.append(f"n {graph.n}")
    if isinstance(obj, SplitDigraph):
        lines.append(("k " + " ".join(str(v) for v in sorted(obj.clique))).rstrip())
    lines += [f"a {t} {h}" for t, h in sorted(graph.arcs)]
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Digraph | SplitDigraph:
    header_seen = False
    n: int | None = None
    clique: list[int] | None = None
    arcs: list[tuple[int, int]] = []
    seen_arcs: set[tuple[int, int]] = set()
    arcs_started = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != INSTANCE_MAGIC:
                raise InstanceParseError(f"expected header '{INSTANCE_MAGIC}'", lineno)
            header_seen = True
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "n":
            if n is not None:
                raise InstanceParseError("duplicate n line", lineno)
            if len(fields) != 2 or not fields[1].lstrip("-").isdigit():
                raise InstanceParseError("n line must be 'n <count>'", lineno)
            n = int(fields[1])
            if n < 0:
                raise InstanceParseError("vertex count must be nonnegative", lineno)
        elif tag == "k":
            if n is None:
                raise InstanceParseError("k line before n line", lineno)
            if clique is not None:
                raise InstanceParseError("duplicate k line", lineno)
            if arcs_started:
                raise InstanceParseError("k line must precede arc lines", lineno)
            try:
                clique = [int(f) for f in fields[1:]]
            except ValueError:
                raise InstanceParseError("k line indices must be integers", lineno) from None
            if len(set(clique)) != len(clique):
                raise InstanceParseError("duplicate index in k line", lineno)
            for v in clique:
                if not 0 <= v < n:
                    raise InstanceParseError(f"clique index {v} out of range", lineno)
        elif tag == "a":
            if n is None:
                raise InstanceParseError("arc line before n line", lineno)
            arcs_started = True
            try:
                t, h = (int(f) for f in fields[1:])
            except ValueError:
                raise InstanceParseError("arc line must be 'a <tail> <head>'", lineno) from None
            if not (0 <= t < n and 0 <= h < n):
                raise InstanceParseError(f"arc ({t},{h}) endpoint out of range", lineno)
            if t == h:
                raise InstanceParseError(f"loop arc ({t},{t}) not allowed", lineno)
            if (t, h) in seen_arcs:
                raise InstanceParseError(f"duplicate arc ({t},{h})", lineno)
            seen_arcs.add((t, h))
            arcs.append((t, h))
        else:
            raise InstanceParseError(f"unknown directive '{tag}'", lineno)

    last = text.count("\n") + 1
    if not header_seen:
        raise InstanceParseError(f"missing header '{INSTANCE_MAGIC}'", 1)
    if n is None:
        raise InstanceParseError("missing n line", last)
    graph = Digraph(n, arcs)
    if clique is None:
        return graph
    independent = sorted(set(range(n)) - set(clique))
    try:
        return SplitDigraph(graph, clique, independent)
    except SplitError as exc:
        raise InstanceParseError(f"invalid split partition: {exc}", last) from exc


def instance_digest(obj: Digraph | SplitDigraph) -> str:
    payload = serialize_instance(obj).encode("utf-8")
    return "sha256:" + hashlib.sha256(payload).hexdigest()


@dataclass(frozen=True)
class CertificateDocument:
    algorithm: str
    digest: str
    vertices: tuple[int, ...]
    bound: Fraction | None
    verified: bool
    witnesses: Mapping[int, tuple[int, ...]]

    def to_certificate(self) -> QkCertificate:
        return QkCertificate(
            frozenset(self.vertices), dict(self.witnesses), self.algorithm, self.bound
        )


def certificate_document(
    cert: QkCertificate, instance: Digraph | SplitDigraph
) -> CertificateDocument:
    graph = instance.graph if isinstance(instance, SplitDigraph) else instance
    cert.check(graph)
    return CertificateDocument(
        algorithm=cert.algorithm,
        digest=instance_digest(instance),
        vertices=cert.sorted_vertices(),
        bound=cert.bound,
        verified=True,
        witnesses=dict(sorted(cert.witnesses.items())),
    )


def serialize_certificate(doc: CertificateDocument) -> str:
    bound = "null" if doc.bound is None else f"{doc.bound.numerator}/{doc.bound.denominator}"
    lines = [
        CERTIFICATE_MAGIC,
        f"algorithm {doc.algorithm}",
        f"instance {doc.digest}",
        ("set " + " ".join(str(v) for v in doc.vertices)).rstrip(),
        f"bound {bound}",
        f"verified {'true' if doc.verified else 'false'}",
    ]
    for v in sorted(doc.witnesses):
        lines.append("w " + " ".join(str(u) for u in doc.witnesses[v]))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> CertificateDocument:
    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines or lines[0][1] != CERTIFICATE_MAGIC:
        raise CertificateParseError(f"expected header '{CERTIFICATE_MAGIC}'", 1)
    fields: dict[str, str] = {}
    witnesses: dict[int, tuple[int, ...]] = {}
    for no, line in lines[1:]:
        tag, _, rest = line.partition(" ")
        if tag == "w":
            try:
                path = tuple(int(f) for f in rest.split())
            except ValueError:
                raise CertificateParseError("witness entries must be integers", no) from None
            if len(path) < 2:
                raise CertificateParseError("witness path too short", no)
            if path[0] in witnesses:
                raise CertificateParseError(f"duplicate witness for vertex {path[0]}", no)
            witnesses[path[0]] = path
        elif tag in ("algorithm", "instance", "set", "bound", "verified"):
            if tag in fields:
                raise CertificateParseError(f"duplicate {tag} line", no)
            fields[tag] = rest
        else:
            raise CertificateParseError(f"unknown directive '{tag}'", no)
    for required in ("algorithm", "instance", "bound", "verified"):
        if required not in fields:
            raise CertificateParseError(f"missing {required} line", len(text.splitlines()))
    if "set" not in fields:
        fields["set"] = ""
    try:
        vertices = tuple(int(f) for f in fields["set"].split())
    except ValueError:
        raise CertificateParseError("set entries must be integers", 1) from None
    bound_text = fields["bound"]
    if bound_text == "null":
        bound: Fraction | None = None
    else:
        num, _, den = bound_text.partition("/")
        try:
            bound = Fraction(int(num), int(den)) if den else Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise CertificateParseError("bound must be 'p/q' or 'null'", 1) from None
    return CertificateDocument(
        algorithm=fields["algorithm"],
        digest=fields["instance"],
        vertices=vertices,
        bound=bound,
        verified=fields["verified"] == "true",
        witnesses=witnesses,
    )


def check_certificate(doc: CertificateDocument, instance: Digraph | SplitDigraph) -> None:
    """Re-verify a certificate document against its instance (digest included)."""
    if doc.digest != instance_digest(instance):
        raise VerificationError("instance digest mismatch")
    graph = instance.graph if isinstance(instance, SplitDigraph) else instance
    doc.to_certificate().check(graph)


def to_dot(obj: Digraph | SplitDigraph, name: str = "instance") -> str:
    """DOT export; clique vertices are drawn as boxes when a partition is known."""
    graph = obj.graph if isinstance(obj, SplitDigraph) else obj
    lines = [f"digraph {name} {{"]
    if isinstance(obj, SplitDigraph):
        for v in sorted(obj.clique):
            lines.append(f"  {v} [shape=box];")
        for v in sorted(obj.independent):
            lines.append(f"  {v} [shape=circle];")
    else:
        for v in range(graph.n):
            lines.append(f"  {v};")
    for t, h in sorted(graph.arcs):
        lines.append(f"  {t} -> {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"
