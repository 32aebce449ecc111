"""scikit-learn style wrapper: ``fit`` finds an optimal landmark set, ``transform``
embeds vertices (or edges) as their distance vectors to it, ``predict`` maps
distance vectors back to the unique object that produced them."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import all_pairs_distances
from .resolver import Kind, exact_dimension, is_generator
from .validation import check_graph, check_landmarks, check_object_ids


class ResolvingSet(TransformerMixin, BaseEstimator):
    """Minimum metric (``kind="vertex"``) or edge metric (``kind="edge"``) generator.

    Parameters
    ----------
    kind : {"vertex", "edge"}
    use_bounds : bool
        Start the search from the structural lower bound.
    budget : int or None
        Search node budget; when exhausted the fit keeps the best witness and
        ``certified_`` is False.
    threads : int
    deterministic : bool
    landmarks : sequence of int or None
        Skip the search and use these landmarks (validated on fit).

    Attributes
    ----------
    landmarks_ : tuple of int
    dimension_ : int
    certified_ : bool
    result_ : SolveResult or None
    graph_ : Graph
    """

    def __init__(self, kind="vertex", use_bounds=True, budget=None, threads=1,
                 deterministic=True, landmarks=None):
        self.kind = kind
        self.use_bounds = use_bounds
        self.budget = budget
        self.threads = threads
        self.deterministic = deterministic
        self.landmarks = landmarks

    def fit(self, X, y=None):
        g = check_graph(X)
        kind = Kind.coerce(self.kind)
        d = all_pairs_distances(g)
        if self.landmarks is not None:
            landmarks = check_landmarks(self.landmarks, g.n)
            check = is_generator(g, d, landmarks, kind)
            if not check:
                raise ValueError(f"landmarks do not resolve objects {check.pair}")
            self.result_ = None
            self.landmarks_ = landmarks
            self.certified_ = False
        else:
            result = exact_dimension(g, kind, use_bounds=self.use_bounds, budget=self.budget,
                                     threads=self.threads, deterministic=self.deterministic, d=d)
            self.result_ = result
            self.landmarks_ = result.witness
            self.certified_ = result.certified
        self.dimension_ = len(self.landmarks_)
        self.graph_ = g
        rows = d.array if kind is Kind.VERTEX else d.edge_columns()
        self.embedding_ = np.asarray(rows[:, list(self.landmarks_)], dtype=np.int64)
        self.n_objects_ = self.embedding_.shape[0]
        self._lookup = {tuple(r): i for i, r in enumerate(self.embedding_.tolist())}
        return self

    def transform(self, X):
        """Distance vectors of the given object ids (vertex ids, or edge indices)."""
        check_is_fitted(self, "embedding_")
        return self.embedding_[check_object_ids(X, self.n_objects_)]

    def fit_transform(self, X, y=None):
        """Fit on the graph ``X`` and embed all of its objects."""
        return self.fit(X).embedding_.copy()

    def predict(self, X):
        """Object id for each distance vector, -1 where no object matches."""
        check_is_fitted(self, "embedding_")
        arr = np.atleast_2d(np.asarray(X, dtype=np.int64))
        if arr.shape[1] != self.dimension_:
            raise ValueError(f"expected vectors of length {self.dimension_}, got {arr.shape[1]}")
        return np.array([self._lookup.get(tuple(r), -1) for r in arr.tolist()], dtype=np.intp)
