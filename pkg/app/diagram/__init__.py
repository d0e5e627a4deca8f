from app.diagram.link import (
    CubeEdge,
    LinkDiagram,
    Resolution,
    build_diagram,
    cube_edges,
    cube_vertices,
    linking_matrix,
    mirror,
    normalized_pd,
    orientation_resolution,
    oriented_signs,
    parse_pd,
    resolve,
)
from app.diagram.pd import PDCode, read_pd
from app.diagram.planar import CirclePlacement, circle_placements, trace_faces

__all__ = [
    "CirclePlacement",
    "CubeEdge",
    "LinkDiagram",
    "PDCode",
    "Resolution",
    "build_diagram",
    "circle_placements",
    "cube_edges",
    "cube_vertices",
    "linking_matrix",
    "mirror",
    "normalized_pd",
    "orientation_resolution",
    "oriented_signs",
    "parse_pd",
    "read_pd",
    "resolve",
    "trace_faces",
]
