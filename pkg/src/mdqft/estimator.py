"""scikit-learn estimator wrapping the quantum transform pipeline.

Each sample (row of X) is one flattened d-dimensional complex array in
encoding order (dimension 1 fastest). This makes the transform usable
inside sklearn Pipelines, e.g. as a spectral feature extractor.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .encoding import ArrayLayout, MdArray, ScaleConvention
from .errors import ValidationError
from .pipeline import transform_array


class QftTransformer(TransformerMixin, BaseEstimator):
    """Multidimensional Fourier transform of row-encoded arrays.

    Parameters
    ----------
    dims : sequence of int, optional
        Dimension sizes (N_1, ..., N_d), each a power of two >= 2. If None,
        each row is treated as a 1-D array of length n_features.
    convention : {"classical", "unitary", "raw"}
        Output scale. "classical" matches the unnormalized DFT of the raw
        row values; "unitary" keeps the norm of the input row; "raw" returns
        unit-norm amplitudes.
    no_swap : bool
        Build the swap-elided circuits; results are identical, the gate
        count is lower.

    Attributes
    ----------
    layout_ : ArrayLayout
        Validated dimension layout.
    n_features_in_ : int
        Row width, equal to the product of dims.
    """

    def __init__(self, dims=None, *, convention="classical", no_swap=False):
        self.dims = dims
        self.convention = convention
        self.no_swap = no_swap

    def _check_batch(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.complex128)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.ndim != 2:
            raise ValidationError(f"X must be 2-D (n_samples, n_features), got shape {X.shape}")
        if not np.all(np.isfinite(X.real)) or not np.all(np.isfinite(X.imag)):
            raise ValidationError("X contains non-finite entries")
        return X

    def _convention(self) -> ScaleConvention:
        try:
            return ScaleConvention(str(self.convention).lower())
        except ValueError as exc:
            raise ValidationError(
                f"convention must be one of {[c.value for c in ScaleConvention]}, "
                f"got {self.convention!r}"
            ) from exc

    def fit(self, X, y=None):
        """Validate the layout against the data; nothing is learned."""
        X = self._check_batch(X)
        dims = tuple(self.dims) if self.dims is not None else (X.shape[1],)
        self._convention()
        self.layout_ = ArrayLayout(dims)
        if self.layout_.total_elements != X.shape[1]:
            raise ValidationError(
                f"rows of length {X.shape[1]} do not match dims {dims} "
                f"({self.layout_.total_elements} elements)"
            )
        self.n_features_in_ = X.shape[1]
        return self

    def _run(self, X, inverse: bool) -> np.ndarray:
        check_is_fitted(self, "layout_")
        X = self._check_batch(X)
        if X.shape[1] != self.n_features_in_:
            raise ValidationError(
                f"X has {X.shape[1]} features, fitted for {self.n_features_in_}"
            )
        convention = self._convention()
        out = np.empty_like(X)
        for row in range(X.shape[0]):
            result = transform_array(
                MdArray(self.layout_, X[row]),
                convention=convention,
                inverse=inverse,
                no_swap=self.no_swap,
            )
            out[row] = result.data
        return out

    def transform(self, X) -> np.ndarray:
        """Fourier-transform every row; returns complex (n_samples, M)."""
        return self._run(X, inverse=False)

    def inverse_transform(self, X) -> np.ndarray:
        """Undo transform(); exact inverse in every convention."""
        return self._run(X, inverse=True)
