"""scikit-learn wrappers around the type scan and the group determination."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .fp_poly import FactorType
from .galois_id import determine, scan
from .tables import SUPPORTED_DEGREES, table
from .validation import check_mode, check_polynomials, check_prime_limit


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def factor_types_of_degree(n: int) -> list[FactorType]:
    """Every factorization type a squarefree degree-n polynomial can have."""
    return sorted(FactorType(p) for p in _partitions(n))


class FactorTypeVectorizer(TransformerMixin, BaseEstimator):
    """Map polynomials to factorization-type frequencies over primes up to ``prime_limit``.

    ``fit`` fixes the feature vocabulary: all types of every degree seen.
    Columns are counts, or frequencies among unskipped primes when
    ``normalize`` is set.
    """

    def __init__(self, prime_limit=1000, normalize=True, n_jobs=1):
        self.prime_limit = prime_limit
        self.normalize = normalize
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        check_prime_limit(self.prime_limit)
        polys = check_polynomials(X)
        degrees = sorted({c.degree for c in polys})
        if degrees[0] < 1:
            raise ValueError("constant polynomials have no factorization type")
        self.degrees_ = degrees
        self.types_ = [t for n in degrees for t in factor_types_of_degree(n)]
        self.n_features_out_ = len(self.types_)
        return self

    def transform(self, X):
        check_is_fitted(self, "types_")
        polys = check_polynomials(X)
        column = {t: j for j, t in enumerate(self.types_)}
        out = np.zeros((len(polys), len(self.types_)), dtype=float)
        for i, c in enumerate(polys):
            if c.degree not in self.degrees_:
                raise ValueError(f"degree {c.degree} was not seen during fit")
            if not c.is_monic():
                raise ValueError(f"{c} is not monic")
            counts = scan(c, self.prime_limit, n_jobs=self.n_jobs).counts
            total = sum(counts.values())
            for t, k in counts.items():
                out[i, column[t]] = k / total if self.normalize and total else k
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "types_")
        return np.array([repr(t) for t in self.types_], dtype=object)


class GaloisGroupClassifier(ClassifierMixin, BaseEstimator):
    """Predict the Galois group name of monic irreducible polynomials of degree 3-5.

    Nothing is learned from data; ``fit`` only validates input and records the
    label set. Inputs whose verdict is not conclusive are labelled
    ``inconclusive_label``.
    """

    def __init__(self, prime_limit=1000, mode="strict", disc_refinement=True,
                 early_exit=True, inconclusive_label="?"):
        self.prime_limit = prime_limit
        self.mode = mode
        self.disc_refinement = disc_refinement
        self.early_exit = early_exit
        self.inconclusive_label = inconclusive_label

    def fit(self, X, y=None):
        check_prime_limit(self.prime_limit)
        check_mode(self.mode)
        polys = check_polynomials(X)
        if y is not None and len(y) != len(polys):
            raise ValueError(f"X has {len(polys)} samples but y has {len(y)}")
        bad = sorted({c.degree for c in polys} - set(SUPPORTED_DEGREES))
        if bad:
            raise ValueError(f"unsupported degrees {bad}")
        self.classes_ = np.array(sorted({row.name for n in SUPPORTED_DEGREES for row in table(n)}),
                                 dtype=object)
        return self

    def reports(self, X):
        """Full determination reports, one per polynomial."""
        check_is_fitted(self, "classes_")
        return [
            determine(c, self.prime_limit, mode=self.mode, disc_refinement=self.disc_refinement,
                      early_exit=self.early_exit)
            for c in check_polynomials(X)
        ]

    def predict(self, X):
        out = [r.verdict.group or self.inconclusive_label for r in self.reports(X)]
        return np.array(out, dtype=object)

    def predict_candidates(self, X):
        return [r.candidates for r in self.reports(X)]
