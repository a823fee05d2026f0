"""scikit-learn style front end.

``ZebraMobility`` turns a batch of mechanisms into a census feature matrix
(``transform``) or their mobilities (``predict``), so the analysis can sit
inside pipelines and model-selection tools.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .analysis import MobilityReport, analyze, analyze_counts
from .model import Mechanism, ValidatedMechanism, validate
from .textfmt import CountsRecord, parse, parse_file

FEATURES = ("B", "G", "W", "Nw", "Jf", "L")


def check_mechanisms(X) -> list[ValidatedMechanism | CountsRecord]:
    """Coerce a batch into validated mechanisms or counts records.

    Accepts ``Mechanism``, ``ValidatedMechanism`` and ``CountsRecord``
    objects, paths to ``.mech`` files, and raw ``.mech`` source strings.
    A single item is not a batch; wrap it in a list.
    """
    if isinstance(X, (str, bytes, Mechanism, ValidatedMechanism, CountsRecord, os.PathLike)):
        raise TypeError("expected a sequence of mechanisms, got a single item")
    out: list[ValidatedMechanism | CountsRecord] = []
    for item in X:
        if isinstance(item, os.PathLike):
            item = parse_file(item)
        elif isinstance(item, str):
            item = parse_file(item) if item.endswith(".mech") and Path(item).is_file() else parse(item)
        if isinstance(item, Mechanism):
            item = validate(item)
        if not isinstance(item, (ValidatedMechanism, CountsRecord)):
            raise TypeError(f"cannot analyse object of type {type(item).__name__}")
        out.append(item)
    if not out:
        raise ValueError("empty batch")
    return out


class ZebraMobility(TransformerMixin, BaseEstimator):
    """Zebra-crossing mobility as an estimator.

    Parameters
    ----------
    merge_parallel : bool, default=True
        Count structurally parallel link pairs as one white patch.
    weight_platforms : bool, default=True
        Give multi-leg platforms of spatial manipulators ``legs - 1`` weight.

    The estimator learns nothing; ``fit`` only validates its input.
    """

    def __init__(self, merge_parallel: bool = True, weight_platforms: bool = True):
        self.merge_parallel = merge_parallel
        self.weight_platforms = weight_platforms

    def fit(self, X, y=None):
        check_mechanisms(X)
        self.feature_names_out_ = np.array(FEATURES, dtype=object)
        return self

    def _reports(self, X) -> list[MobilityReport]:
        check_is_fitted(self)
        out = []
        for item in check_mechanisms(X):
            if isinstance(item, CountsRecord):
                out.append(analyze_counts(item))
            else:
                out.append(analyze(item, merge=self.merge_parallel, platform_weights=self.weight_platforms))
        return out

    def transform(self, X) -> np.ndarray:
        rows = []
        for r in self._reports(X):
            c = r.counts
            rows.append([c.black, c.grey, c.white, c.white_between, c.ground_joints, r.loops])
        return np.asarray(rows, dtype=np.int64)

    def predict(self, X) -> np.ndarray:
        return np.asarray([r.mobility for r in self._reports(X)], dtype=np.int64)

    def score(self, X, y) -> float:
        """Fraction of mechanisms whose predicted mobility equals ``y``."""
        return float(np.mean(self.predict(X) == np.asarray(y)))

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self)
        return self.feature_names_out_.copy()
