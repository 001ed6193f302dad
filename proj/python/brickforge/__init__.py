"""Structural matching theory on small multigraphs."""

from ._core import (
    Graph,
    GraphError,
    __version__,
    atlas,
    atlas_names,
    brick_count,
    canonical_label,
    classify,
    decompose,
    edge_report,
    forcing_edges,
    from_graph6,
    from_json,
    generate,
    identify,
    is_base_of,
    is_extremal,
    is_isomorphic,
    perfect_matchings,
    to_graph6,
    to_json,
    verify,
    y_to_delta,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
