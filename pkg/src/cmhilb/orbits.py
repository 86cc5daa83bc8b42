"""Orbit and stabilizer classification for torus-fixed points, monomial
ideal data, and closure graphs.

Monomial convention: the cell in row a, column b of the diagram is the
monomial x^a y^b, so the quotient by the ideal of a partition has the
diagram monomials as a basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    DEFAULT_CAP,
    Partition,
    diagonals,
    enumerate_partitions,
    is_staircase,
    is_steep,
    transpose,
    u_map,
)

HILBERT = "hilbert"
CALOGERO_MOSER = "calogero-moser"

STABILIZERS = ("SL2", "B", "B_minus", "T", "N_T")
ORBIT_MODELS = ("point", "P1", "SL2_mod_T", "SL2_mod_NT")


@dataclass(frozen=True)
class MonomialIdeal:
    """Torus-fixed ideal of a partition shape in two variables.

    generators: minimal exponent pairs (a, b) outside the diagram.
    graded_dims: dimensions of the degree-k pieces for small k; beyond the
    stored range the degree-k piece is the full space of dimension k + 1.
    """

    shape: Partition
    generators: tuple
    graded_dims: tuple

    def graded_dim(self, k: int) -> int:
        if k < len(self.graded_dims):
            return self.graded_dims[k]
        return k + 1

    def generator_strings(self) -> tuple:
        def mono(a, b):
            xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
            ys = "" if b == 0 else ("y" if b == 1 else f"y^{b}")
            return " ".join(t for t in (xs, ys) if t) or "1"

        return tuple(mono(a, b) for a, b in self.generators)

    def to_json_obj(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "generators": [list(g) for g in self.generators],
            "graded_dims": list(self.graded_dims),
        }


@dataclass(frozen=True)
class OrbitReport:
    """Classification of the orbit through one torus-fixed point."""

    space: str
    partition: Partition
    stabilizer: str
    orbit_model: str
    closed: bool
    boundary: Partition | None = None
    partner: Partition | None = None

    def __post_init__(self):
        if self.space not in (HILBERT, CALOGERO_MOSER):
            raise ValueError(f"unknown space {self.space!r}")
        if self.stabilizer not in STABILIZERS:
            raise ValueError(f"unknown stabilizer {self.stabilizer!r}")
        if self.orbit_model not in ORBIT_MODELS:
            raise ValueError(f"unknown orbit model {self.orbit_model!r}")
        if (self.stabilizer == "SL2") != (self.orbit_model == "point"):
            raise ValueError("stabilizer SL2 and model point must occur together")
        if (self.boundary is not None) != (self.space == HILBERT and not self.closed):
            raise ValueError("boundary is recorded exactly for non-closed Hilbert orbits")

    def to_json_obj(self) -> dict:
        out = {
            "space": self.space,
            "partition": self.partition.to_json(),
            "stabilizer": self.stabilizer,
            "orbit_model": self.orbit_model,
            "closed": self.closed,
        }
        if self.boundary is not None:
            out["boundary"] = {"partition": self.boundary.to_json(), "model": "P1"}
        if self.partner is not None:
            out["partner"] = self.partner.to_json()
        if self.space == CALOGERO_MOSER:
            out["orbit_id"] = str(min(self.partition, transpose(self.partition),
                                      key=lambda p: p.parts))
        return out


def monomial_ideal(lam: Partition) -> MonomialIdeal:
    """The codimension-n torus-fixed ideal labeled by lam."""
    parts = lam.parts
    ell = len(parts)
    gens = []
    for a in range(ell + 1):
        width = parts[a] if a < ell else 0
        if a == 0 or width < parts[a - 1]:
            gens.append((a, width))
    d = diagonals(lam)
    dims = tuple(
        sum(1 for a in range(k + 1) if not (a < ell and k - a < parts[a]))
        for k in range(len(d) + 2)
    )
    return MonomialIdeal(shape=lam, generators=tuple(gens), graded_dims=dims)


def is_borel_stable(lam: Partition) -> bool:
    """Stability of the monomial ideal under the derivation sending
    x^a y^b to b * x^(a+1) y^(b-1).

    Cell form: every out-of-diagram cell (a, b) with b >= 1 must have
    (a+1, b-1) out of the diagram too.  Outside the scanned window both
    cells are automatically out, so the scan is finite.
    """
    parts = lam.parts
    ell = len(parts)
    width = parts[0] if parts else 0

    def inside(a, b):
        return a < ell and b < parts[a]

    for a in range(ell + 1):
        for b in range(1, width + 2):
            if not inside(a, b) and inside(a + 1, b - 1):
                return False
    return True


def hilb_orbit(lam: Partition) -> OrbitReport:
    """Stabilizer and closure data for the orbit in the Hilbert scheme."""
    lamt = transpose(lam)
    if is_staircase(lam):
        return OrbitReport(HILBERT, lam, "SL2", "point", True)
    if is_steep(lam):
        return OrbitReport(HILBERT, lam, "B", "P1", True)
    if is_steep(lamt):
        return OrbitReport(HILBERT, lam, "B_minus", "P1", True)
    if lam == lamt:
        return OrbitReport(HILBERT, lam, "N_T", "SL2_mod_NT", False, boundary=u_map(lam))
    return OrbitReport(HILBERT, lam, "T", "SL2_mod_T", False, boundary=u_map(lam))


def cm_orbit(lam: Partition) -> OrbitReport:
    """Stabilizer data for the orbit in the Calogero-Moser space; these
    orbits are always closed."""
    lamt = transpose(lam)
    if is_staircase(lam):
        return OrbitReport(CALOGERO_MOSER, lam, "SL2", "point", True)
    if lam == lamt:
        return OrbitReport(CALOGERO_MOSER, lam, "N_T", "SL2_mod_NT", True)
    return OrbitReport(CALOGERO_MOSER, lam, "T", "SL2_mod_T", True, partner=lamt)


@dataclass(frozen=True)
class ClosureGraph:
    """Directed closure graph over all partitions of n in one space."""

    space: str
    n: int
    nodes: tuple
    edges: tuple

    def to_text(self) -> str:
        return "\n".join(f"{src} -> {dst}" for src, dst in self.edges)

    def to_json_obj(self) -> dict:
        return {
            "space": self.space,
            "n": self.n,
            "nodes": [node.to_json_obj() for node in self.nodes],
            "edges": [[src.to_json(), dst.to_json()] for src, dst in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph closure {"]
        for node in self.nodes:
            shape = "doublecircle" if node.closed else "circle"
            lines.append(f'  "{node.partition}" [shape={shape}];')
        for src, dst in self.edges:
            lines.append(f'  "{src}" -> "{dst}";')
        lines.append("}")
        return "\n".join(lines)


def closure_graph(n: int, space: str, cap: int = DEFAULT_CAP) -> ClosureGraph:
    """Nodes are orbit reports for all partitions of n; in the Hilbert
    scheme each non-closed orbit sends an edge to its boundary partition,
    while every Calogero-Moser orbit is closed and the graph has no edges.
    """
    if space not in (HILBERT, CALOGERO_MOSER):
        raise ValueError(f"unknown space {space!r}")
    parts = enumerate_partitions(n, cap)
    if space == HILBERT:
        nodes = tuple(hilb_orbit(lam) for lam in parts)
        edges = tuple(
            (node.partition, node.boundary) for node in nodes if not node.closed
        )
    else:
        nodes = tuple(cm_orbit(lam) for lam in parts)
        edges = ()
    return ClosureGraph(space=space, n=n, nodes=nodes, edges=edges)
