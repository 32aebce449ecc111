"""Input coercion for the estimator API."""

from __future__ import annotations

import numpy as np

from .graph import DisconnectedGraphError, Graph, is_connected, parse_edge_list


def check_graph(X, require_connected: bool = True) -> Graph:
    """Accept a :class:`Graph`, edge-list text, a construction spec string, or a
    square symmetric 0/1 adjacency matrix (dense or scipy sparse)."""
    if isinstance(X, Graph):
        g = X
    elif isinstance(X, str):
        g = _graph_from_text(X)
    else:
        if hasattr(X, "toarray"):
            X = X.toarray()
        A = np.asarray(X)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
        if not np.isin(A, (0, 1)).all():
            raise ValueError("adjacency matrix entries must be 0 or 1")
        if (A != A.T).any():
            raise ValueError("adjacency matrix must be symmetric")
        if np.diag(A).any():
            raise ValueError("adjacency matrix has self-loops")
        iu, ju = np.nonzero(np.triu(A, 1))
        g = Graph.from_edges(A.shape[0], zip(iu.tolist(), ju.tolist()))
    if require_connected and not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")
    return g


def _graph_from_text(text: str) -> Graph:
    stripped = text.strip()
    if stripped and stripped[0].isalpha():
        from .dsl import eval_spec

        return eval_spec(stripped).graph
    return parse_edge_list(text)


def check_landmarks(landmarks, n: int) -> tuple[int, ...]:
    """Sorted, de-duplicated landmark ids; raises on ids outside ``[0, n)``."""
    arr = np.asarray(list(landmarks), dtype=np.int64).ravel()
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError(f"landmarks must lie in [0, {n})")
    return tuple(sorted(set(arr.tolist())))


def check_object_ids(X, n_objects: int) -> np.ndarray:
    arr = np.asarray(X)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError("expected a 1-D array of object ids")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("object ids must be integers")
    arr = arr.astype(np.intp)
    if arr.size and (arr.min() < 0 or arr.max() >= n_objects):
        raise ValueError(f"object ids must lie in [0, {n_objects})")
    return arr
