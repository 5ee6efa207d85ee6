"""Order complexes of finite posets and their exact integral homology.

The complex of a poset has the nonempty chains as simplices.  Homology is
computed from integer boundary matrices via Smith normal form, so Betti
numbers and torsion coefficients are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .poset import FinitePoset
from .snf import smith_invariant_factors


@dataclass(frozen=True)
class HomologySummary:
    """Betti numbers b0..b_dim and invariant-factor torsion per degree."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def __str__(self):
        rows = []
        for d, (b, t) in enumerate(zip(self.betti, self.torsion)):
            parts = [f"Z^{b}" if b != 1 else "Z"] if b else []
            parts += [f"Z/{q}" for q in t]
            rows.append(f"H{d} = " + (" + ".join(parts) if parts else "0"))
        return "\n".join(rows)


class SimplicialComplex:
    """Finite abstract simplicial complex on vertices 0..n-1.

    Faces are stored as sorted vertex tuples in a set, closed under taking
    nonempty subsets; every vertex occurs as a 0-face.
    """

    def __init__(self, n_vertices: int, faces):
        faces = frozenset(tuple(sorted(f)) for f in faces)
        seen = set()
        for f in faces:
            if not f:
                raise ValueError("faces must be nonempty")
            seen.update(f)
            for i in range(len(f)):
                sub = f[:i] + f[i + 1 :]
                if sub and sub not in faces:
                    raise ValueError(f"face set not closed under subsets at {f}")
        if seen != set(range(n_vertices)):
            raise ValueError("every vertex must appear as a 0-face")
        self.n_vertices = n_vertices
        self.faces = faces
        self.dim = max(len(f) for f in faces) - 1

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return sorted(f for f in self.faces if len(f) == d + 1)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension, 0..dim."""
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector))

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n_vertices == other.n_vertices
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.n_vertices, self.faces))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n_vertices}, f={self.f_vector})"


def order_complex(p: FinitePoset) -> SimplicialComplex:
    """Complex whose simplices are the nonempty chains of p."""
    return SimplicialComplex(p.n, (tuple(sorted(c)) for c in p.chains()))


def euler_characteristic(p: FinitePoset) -> int:
    """Alternating chain sum: each nonempty chain C contributes (-1)^(#C+1)."""
    return sum((-1) ** (len(c) + 1) for c in p.chains())


def f_vector(k: SimplicialComplex) -> tuple[int, ...]:
    return k.f_vector


def boundary_matrix(k: SimplicialComplex, d: int) -> list[list[int]]:
    """Integer matrix of the boundary map C_d -> C_{d-1} (d >= 1)."""
    rows = {f: i for i, f in enumerate(k.faces_of_dim(d - 1))}
    cols = k.faces_of_dim(d)
    mat = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1 :]
            mat[rows[sub]][j] = (-1) ** i
    return mat


def homology(k: SimplicialComplex) -> HomologySummary:
    """Integral simplicial homology: exact Betti numbers and torsion."""
    dim = k.dim
    factors = {d: smith_invariant_factors(boundary_matrix(k, d)) for d in range(1, dim + 1)}
    ranks = {d: len(factors.get(d, [])) for d in range(dim + 2)}
    betti = tuple(k.f_vector[d] - ranks[d] - ranks[d + 1] for d in range(dim + 1))
    torsion = tuple(
        tuple(q for q in factors.get(d + 1, []) if q > 1) for d in range(dim + 1)
    )
    return HomologySummary(betti, torsion)


def betti_numbers(p: FinitePoset) -> tuple[int, ...]:
    """Betti numbers of the order complex of p."""
    return homology(order_complex(p)).betti


def faces_text(k: SimplicialComplex) -> str:
    """Plain export: one face per line, space-separated vertex indices."""
    lines = sorted(k.faces, key=lambda f: (len(f), f))
    return "\n".join(" ".join(str(v) for v in f) for f in lines) + "\n"
