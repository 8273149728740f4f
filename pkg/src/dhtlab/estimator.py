"""Estimator-style adapter so the transform drops into ML pipelines.

Rows of X are treated as independent signals of equal length; fitting
just builds the operator matrices for that length.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .matrixform import build_forward_matrix, build_inverse_matrix

__all__ = ["HilbertTransformer"]


class HilbertTransformer(TransformerMixin, BaseEstimator):
    """Row-wise finite discrete Hilbert transform.

    fit(X) fixes the signal length from X's column count and builds the
    forward and inverse operator matrices.  transform applies the forward
    operator to every row; inverse_transform applies the inverse operator.

    Attributes
    ----------
    n_features_in_ : int
        Signal length fixed at fit time.
    forward_matrix_ : ndarray of shape (n, n)
    inverse_matrix_ : ndarray of shape (n, n)
    """

    def fit(self, X, y=None):
        X = check_array(X, dtype=np.float64)
        self.n_features_in_ = X.shape[1]
        self.forward_matrix_ = build_forward_matrix(self.n_features_in_).entries
        self.inverse_matrix_ = build_inverse_matrix(self.n_features_in_).entries
        return self

    def _apply(self, X, matrix_attr):
        check_is_fitted(self, "forward_matrix_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but this transformer was fitted "
                f"with {self.n_features_in_}"
            )
        return X @ getattr(self, matrix_attr).T

    def transform(self, X):
        return self._apply(X, "forward_matrix_")

    def inverse_transform(self, X):
        return self._apply(X, "inverse_matrix_")
