"""Link, deletion, star, join, cone, suspension and induced subcomplexes."""

from typing import Iterable, Tuple

from ..exceptions import DomainError
from .simplicial import SimplicialComplex, face_mask, from_facets, make_face, mask_face


def _require_vertex(complex_: SimplicialComplex, v: int) -> int:
    bit = 1 << v
    if not complex_.vertex_mask & bit:
        raise DomainError(f"Vertex {v} is not a vertex of the complex")
    return bit


def link(complex_: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Return the link of ``face``: faces disjoint from it whose union with it is a face.

    Raises:
        DomainError: If ``face`` is not a face of the complex
    """
    sigma = face_mask(make_face(face))
    containing = [m for m in complex_.facet_masks if m & sigma == sigma]
    if not containing:
        raise DomainError(f"{list(mask_face(sigma))} is not a face of the complex")
    return from_facets(mask_face(m & ~sigma) for m in containing)


def deletion(complex_: SimplicialComplex, v: int) -> SimplicialComplex:
    """Return the faces of the complex that avoid ``v``."""
    bit = _require_vertex(complex_, v)
    return from_facets(mask_face(m & ~bit) for m in complex_.facet_masks)


def star(complex_: SimplicialComplex, v: int) -> SimplicialComplex:
    """Return the subcomplex generated by the facets through ``v``."""
    bit = _require_vertex(complex_, v)
    return from_facets(mask_face(m) for m in complex_.facet_masks if m & bit)


def join(left: SimplicialComplex, right: SimplicialComplex) -> SimplicialComplex:
    """Return the join; facets are unions of one facet from each side.

    Raises:
        DomainError: If either side is void or the vertex sets meet
    """
    if left.is_void or right.is_void:
        raise DomainError("The join with the void complex is undefined")
    if left.vertex_mask & right.vertex_mask:
        raise DomainError("Join operands must have disjoint vertex sets")
    return from_facets(
        mask_face(a | b) for a in left.facet_masks for b in right.facet_masks
    )


def cone(complex_: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Return the cone over the complex with the given apex."""
    return join(complex_, from_facets([[apex]]))


def suspension(complex_: SimplicialComplex, fresh: Tuple[int, int]) -> SimplicialComplex:
    """Return the join with the two fresh points; the suspension of ``{∅}`` is S^0.

    Raises:
        DomainError: If the complex is void or a fresh vertex is already used
    """
    v, w = fresh
    if v == w:
        raise DomainError("Suspension needs two distinct fresh vertices")
    if complex_.is_void:
        raise DomainError("The suspension of the void complex is undefined")
    if complex_.vertex_mask & face_mask((v, w)):
        raise DomainError(f"Fresh vertices {v}, {w} collide with the vertex set")
    return join(complex_, from_facets([[v], [w]]))


def induced_subcomplex(complex_: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Return the faces contained in ``vertices``; Irrelevant when none of them is a vertex."""
    if complex_.is_void:
        return complex_
    window = face_mask(make_face(vertices))
    return from_facets(mask_face(m & window) for m in complex_.facet_masks)
