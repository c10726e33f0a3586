"""From-scratch classifiers behind one train/predict contract.

All four learners are deterministic functions of (X, y, config): KNN stores
the training data verbatim; the decision tree grows CART-style on Gini gain
with midpoint thresholds; LDA uses class means, a shrinkage-regularized
pooled covariance, and class priors; the linear SVM trains one-vs-rest
hinge-loss separators by full-batch subgradient descent with step
``1/(c_reg * t)`` at epoch ``t``.

Models serialize to a versioned line-oriented text format with reals
rendered to 17 significant digits, so a round-trip is prediction-exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .labels import FormatLabel

_MAGIC = "numctx-model v1"
# splits with float-noise-level gain are treated as no gain at all
_MIN_GAIN = 1e-12


class Algorithm(str, Enum):
    KNN = "knn"
    DecisionTree = "dt"
    LDA = "lda"
    LinearSVM = "svm"


class ModelFormatError(ValueError):
    """Raised when a serialized model blob cannot be parsed."""


@dataclass(frozen=True)
class TrainConfig:
    algorithm: Algorithm
    k: int = 1
    max_depth: int | None = 16
    min_leaf: int = 1
    shrinkage: float = 1e-4
    c_reg: float = 1.0
    epochs: int = 200
    seed: int = 42

    def __post_init__(self) -> None:
        if self.algorithm == Algorithm.KNN and self.k not in (1, 3):
            raise ValueError(f"k must be 1 or 3, got {self.k}")
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError(f"max_depth must be >= 1 or None, got {self.max_depth}")
        if self.min_leaf < 1:
            raise ValueError(f"min_leaf must be >= 1, got {self.min_leaf}")
        if self.shrinkage < 0:
            raise ValueError(f"shrinkage must be >= 0, got {self.shrinkage}")
        if self.c_reg <= 0:
            raise ValueError(f"c_reg must be > 0, got {self.c_reg}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")


@dataclass
class KnnModel:
    dim: int
    k: int
    points: np.ndarray
    labels: np.ndarray
    algorithm: Algorithm = field(default=Algorithm.KNN, init=False)


class TreeNode:
    """Internal split (feature, threshold, children) or leaf (label)."""

    __slots__ = ("feature", "threshold", "left", "right", "label")

    def __init__(
        self,
        feature: int | None = None,
        threshold: float | None = None,
        left: "TreeNode | None" = None,
        right: "TreeNode | None" = None,
        label: int | None = None,
    ):
        self.feature = feature
        self.threshold = threshold
        self.left = left
        self.right = right
        self.label = label

    @property
    def is_leaf(self) -> bool:
        return self.label is not None


@dataclass
class TreeModel:
    dim: int
    root: TreeNode
    algorithm: Algorithm = field(default=Algorithm.DecisionTree, init=False)


@dataclass
class LdaModel:
    dim: int
    class_ids: np.ndarray  # ascending label values present in training
    means: np.ndarray  # (n_classes, dim)
    inv_covariance: np.ndarray  # (dim, dim)
    log_priors: np.ndarray  # (n_classes,)
    algorithm: Algorithm = field(default=Algorithm.LDA, init=False)

    def scores(self, X: np.ndarray) -> np.ndarray:
        coef = self.means @ self.inv_covariance  # (n_classes, dim)
        intercept = -0.5 * np.einsum("ij,ij->i", coef, self.means) + self.log_priors
        return X @ coef.T + intercept


@dataclass
class SvmModel:
    dim: int
    class_ids: np.ndarray
    weights: np.ndarray  # (n_classes, dim)
    biases: np.ndarray  # (n_classes,)
    algorithm: Algorithm = field(default=Algorithm.LinearSVM, init=False)

    def scores(self, X: np.ndarray) -> np.ndarray:
        return X @ self.weights.T + self.biases


TrainedModel = KnnModel | TreeModel | LdaModel | SvmModel


def _as_matrix(X) -> np.ndarray:
    M = np.asarray(X, dtype=np.float64)
    if M.ndim != 2:
        raise ValueError(f"X must be a 2-D array of feature vectors, got ndim={M.ndim}")
    return M


def _check_dim(model: TrainedModel, width: int) -> None:
    if width != model.dim:
        raise ValueError(f"feature dimension {width} does not match model dimension {model.dim}")


def train(X, y, cfg: TrainConfig) -> TrainedModel:
    """Fit the configured algorithm on (X, y); deterministic given cfg."""
    M = _as_matrix(X)
    labels = np.asarray([int(v) for v in y], dtype=np.int64)
    if len(M) == 0:
        raise ValueError("training set is empty")
    if len(M) != len(labels):
        raise ValueError(f"got {len(M)} vectors but {len(labels)} labels")

    if cfg.algorithm == Algorithm.KNN:
        return KnnModel(dim=M.shape[1], k=cfg.k, points=M.copy(), labels=labels.copy())
    if cfg.algorithm == Algorithm.DecisionTree:
        root = _grow_tree(M, labels, depth=0, max_depth=cfg.max_depth, min_leaf=cfg.min_leaf)
        return TreeModel(dim=M.shape[1], root=root)
    if cfg.algorithm == Algorithm.LDA:
        return _train_lda(M, labels, cfg.shrinkage)
    if cfg.algorithm == Algorithm.LinearSVM:
        return _train_svm(M, labels, cfg.c_reg, cfg.epochs)
    raise ValueError(f"unknown algorithm {cfg.algorithm!r}")


def predict(model: TrainedModel, x) -> FormatLabel:
    """Classify a single feature vector."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"x must be a 1-D vector, got ndim={v.ndim}")
    _check_dim(model, v.shape[0])
    return FormatLabel(int(predict_batch(model, v.reshape(1, -1))[0]))


def predict_batch(model: TrainedModel, X) -> np.ndarray:
    """Classify many vectors at once; returns an int64 array of label values."""
    M = _as_matrix(X)
    _check_dim(model, M.shape[1])
    if isinstance(model, KnnModel):
        return np.array([_knn_predict_one(model, row) for row in M], dtype=np.int64)
    if isinstance(model, TreeModel):
        return np.array([_tree_descend(model.root, row) for row in M], dtype=np.int64)
    scores = model.scores(M)
    # argmax takes the first maximum; class_ids ascend, so ties resolve to
    # the lowest label value
    return model.class_ids[np.argmax(scores, axis=1)]


# --- KNN ---------------------------------------------------------------


def _knn_predict_one(model: KnnModel, x: np.ndarray) -> int:
    d = np.sqrt(((model.points - x) ** 2).sum(axis=1))
    k = min(model.k, len(d))
    # stable sort: equal distances resolve to the lower training index
    nearest = np.argsort(d, kind="stable")[:k]
    votes: dict[int, int] = {}
    summed: dict[int, float] = {}
    for i in nearest:
        lab = int(model.labels[i])
        votes[lab] = votes.get(lab, 0) + 1
        summed[lab] = summed.get(lab, 0.0) + float(d[i])
    best_count = max(votes.values())
    tied = [lab for lab, n in votes.items() if n == best_count]
    tied.sort(key=lambda lab: (summed[lab], lab))
    return tied[0]


# --- decision tree -------------------------------------------------------


def _gini(counts: np.ndarray, total: int) -> float:
    return 1.0 - float(((counts / total) ** 2).sum())


def _majority(labels: np.ndarray) -> int:
    values, counts = np.unique(labels, return_counts=True)
    # np.unique sorts ascending, argmax takes the first max: count ties
    # resolve to the lowest label value
    return int(values[np.argmax(counts)])


def _best_split(M: np.ndarray, labels: np.ndarray, min_leaf: int):
    """Best (feature, threshold, gain) by Gini gain.

    Candidates are midpoints between consecutive distinct values; ties keep
    the lowest feature index, then the lowest threshold.
    """
    n = len(labels)
    classes, y = np.unique(labels, return_inverse=True)
    n_classes = len(classes)
    parent = _gini(np.bincount(y, minlength=n_classes), n)

    best_gain = 0.0
    best_feature = None
    best_threshold = None
    for feature in range(M.shape[1]):
        col = M[:, feature]
        order = np.argsort(col, kind="stable")
        sorted_vals = col[order]
        sorted_y = y[order]

        change = np.nonzero(sorted_vals[:-1] != sorted_vals[1:])[0]
        if len(change) == 0:
            continue
        one_hot = np.zeros((n, n_classes), dtype=np.float64)
        one_hot[np.arange(n), sorted_y] = 1.0
        cum = np.cumsum(one_hot, axis=0)

        left_counts = cum[change]
        total_counts = cum[-1]
        right_counts = total_counts - left_counts
        n_left = (change + 1).astype(np.float64)
        n_right = n - n_left

        valid = (n_left >= min_leaf) & (n_right >= min_leaf)
        if not valid.any():
            continue
        gini_left = 1.0 - ((left_counts / n_left[:, None]) ** 2).sum(axis=1)
        gini_right = 1.0 - ((right_counts / n_right[:, None]) ** 2).sum(axis=1)
        child = (n_left * gini_left + n_right * gini_right) / n
        gains = np.where(valid, parent - child, -np.inf)

        pos = int(np.argmax(gains))  # first max = lowest threshold
        gain = float(gains[pos])
        # strict > keeps the lowest feature index on exact gain ties
        if gain > best_gain:
            best_gain = gain
            best_feature = feature
            i = change[pos]
            best_threshold = float((sorted_vals[i] + sorted_vals[i + 1]) / 2.0)
    return best_feature, best_threshold, best_gain


def _grow_tree(M: np.ndarray, labels: np.ndarray, depth: int, max_depth: int | None, min_leaf: int) -> TreeNode:
    if len(np.unique(labels)) == 1:
        return TreeNode(label=int(labels[0]))
    if max_depth is not None and depth >= max_depth:
        return TreeNode(label=_majority(labels))
    feature, threshold, gain = _best_split(M, labels, min_leaf)
    if feature is None or gain <= _MIN_GAIN:
        return TreeNode(label=_majority(labels))
    mask = M[:, feature] <= threshold
    left = _grow_tree(M[mask], labels[mask], depth + 1, max_depth, min_leaf)
    right = _grow_tree(M[~mask], labels[~mask], depth + 1, max_depth, min_leaf)
    return TreeNode(feature=feature, threshold=threshold, left=left, right=right)


def _tree_descend(node: TreeNode, x: np.ndarray) -> int:
    while not node.is_leaf:
        node = node.left if x[node.feature] <= node.threshold else node.right
    return node.label


# --- LDA -----------------------------------------------------------------


def _train_lda(M: np.ndarray, labels: np.ndarray, shrinkage: float) -> LdaModel:
    class_ids = np.unique(labels)
    if len(class_ids) < 2:
        raise ValueError("LDA requires at least 2 classes in the training data")
    n, dim = M.shape
    means = np.vstack([M[labels == c].mean(axis=0) for c in class_ids])
    centered = M - means[np.searchsorted(class_ids, labels)]
    scatter = centered.T @ centered
    denom = n - len(class_ids)
    pooled = scatter / denom if denom > 0 else np.zeros((dim, dim))
    trace = float(np.trace(pooled))
    # shrink toward a scaled identity; a zero covariance falls back to the
    # plain identity so the regularizer never vanishes with it
    scale = trace / dim if trace > 0 else 1.0
    covariance = pooled + shrinkage * scale * np.eye(dim)
    try:
        np.linalg.cholesky(covariance)
    except np.linalg.LinAlgError:
        raise ValueError(
            "pooled covariance is singular even after shrinkage; increase the shrinkage value"
        ) from None
    inv_covariance = np.linalg.inv(covariance)
    log_priors = np.log(np.array([(labels == c).sum() for c in class_ids], dtype=np.float64) / n)
    return LdaModel(
        dim=dim,
        class_ids=class_ids.astype(np.int64),
        means=means,
        inv_covariance=inv_covariance,
        log_priors=log_priors,
    )


# --- linear SVM ----------------------------------------------------------


def _train_svm(M: np.ndarray, labels: np.ndarray, c_reg: float, epochs: int) -> SvmModel:
    class_ids = np.unique(labels)
    n, dim = M.shape
    weights = np.zeros((len(class_ids), dim))
    biases = np.zeros(len(class_ids))
    for row, c in enumerate(class_ids):
        t_vec = np.where(labels == c, 1.0, -1.0)
        w = np.zeros(dim)
        b = 0.0
        for t in range(1, epochs + 1):
            eta = 1.0 / (c_reg * t)
            margins = t_vec * (M @ w + b)
            violating = margins < 1.0
            grad_w = c_reg * w - (t_vec[violating, None] * M[violating]).sum(axis=0) / n
            grad_b = -t_vec[violating].sum() / n
            w = w - eta * grad_w
            b = b - eta * grad_b
        weights[row] = w
        biases[row] = b
    return SvmModel(dim=dim, class_ids=class_ids.astype(np.int64), weights=weights, biases=biases)


# --- serialization -------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_vec(v: np.ndarray) -> str:
    return " ".join(_fmt(x) for x in v)


def serialize(model: TrainedModel) -> str:
    """Render a model as a versioned, platform-independent text blob."""
    lines = [_MAGIC, f"algorithm {model.algorithm.value}", f"dim {model.dim}"]
    if isinstance(model, KnnModel):
        lines.append(f"k {model.k}")
        lines.append(f"n {len(model.labels)}")
        for lab, row in zip(model.labels, model.points):
            lines.append(f"point {int(lab)} {_fmt_vec(row)}")
    elif isinstance(model, TreeModel):
        node_lines: list[str] = []

        def emit(node: TreeNode) -> None:
            if node.is_leaf:
                node_lines.append(f"leaf {node.label}")
            else:
                node_lines.append(f"split {node.feature} {_fmt(node.threshold)}")
                emit(node.left)
                emit(node.right)

        emit(model.root)
        lines.append(f"nodes {len(node_lines)}")
        lines.extend(node_lines)
    elif isinstance(model, LdaModel):
        lines.append(f"classes {' '.join(str(int(c)) for c in model.class_ids)}")
        lines.append(f"logpriors {_fmt_vec(model.log_priors)}")
        for c, mean in zip(model.class_ids, model.means):
            lines.append(f"mean {int(c)} {_fmt_vec(mean)}")
        for row in model.inv_covariance:
            lines.append(f"icov {_fmt_vec(row)}")
    elif isinstance(model, SvmModel):
        lines.append(f"classes {' '.join(str(int(c)) for c in model.class_ids)}")
        for c, w, b in zip(model.class_ids, model.weights, model.biases):
            lines.append(f"weights {int(c)} {_fmt_vec(w)}")
            lines.append(f"bias {int(c)} {_fmt(b)}")
    else:
        raise ValueError(f"cannot serialize {type(model).__name__}")
    lines.append("end")
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, blob: str):
        self.lines = blob.splitlines()
        self.pos = 0

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise ModelFormatError("unexpected end of model blob")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect_key(self, key: str) -> list[str]:
        line = self.next()
        parts = line.split(" ")
        if parts[0] != key:
            raise ModelFormatError(f"expected {key!r} line, got {line!r}")
        return parts[1:]


def _parse_floats(parts: list[str], count: int, what: str) -> np.ndarray:
    if len(parts) != count:
        raise ModelFormatError(f"{what}: expected {count} values, got {len(parts)}")
    try:
        return np.array([float(x) for x in parts], dtype=np.float64)
    except ValueError as exc:
        raise ModelFormatError(f"{what}: bad float ({exc})") from None


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ModelFormatError(f"{what}: bad integer {text!r}") from None


def deserialize(blob: str) -> TrainedModel:
    """Parse a serialized model; raises ModelFormatError on any damage."""
    reader = _Reader(blob)
    if reader.next() != _MAGIC:
        raise ModelFormatError(f"bad magic line, expected {_MAGIC!r}")
    (algo_name,) = reader.expect_key("algorithm")
    try:
        algorithm = Algorithm(algo_name)
    except ValueError:
        raise ModelFormatError(f"unknown algorithm {algo_name!r}") from None
    (dim_s,) = reader.expect_key("dim")
    dim = _parse_int(dim_s, "dim")

    if algorithm == Algorithm.KNN:
        (k_s,) = reader.expect_key("k")
        (n_s,) = reader.expect_key("n")
        k, n = _parse_int(k_s, "k"), _parse_int(n_s, "n")
        points = np.zeros((n, dim))
        labels = np.zeros(n, dtype=np.int64)
        for i in range(n):
            parts = reader.expect_key("point")
            labels[i] = _parse_int(parts[0], "point label")
            points[i] = _parse_floats(parts[1:], dim, "point vector")
        model: TrainedModel = KnnModel(dim=dim, k=k, points=points, labels=labels)
    elif algorithm == Algorithm.DecisionTree:
        (count_s,) = reader.expect_key("nodes")
        count = _parse_int(count_s, "nodes")
        consumed = 0

        def parse_node() -> TreeNode:
            nonlocal consumed
            consumed += 1
            parts = reader.next().split(" ")
            if parts[0] == "leaf" and len(parts) == 2:
                return TreeNode(label=_parse_int(parts[1], "leaf label"))
            if parts[0] == "split" and len(parts) == 3:
                feature = _parse_int(parts[1], "split feature")
                threshold = float(_parse_floats([parts[2]], 1, "split threshold")[0])
                left = parse_node()
                right = parse_node()
                return TreeNode(feature=feature, threshold=threshold, left=left, right=right)
            raise ModelFormatError(f"bad tree node line {' '.join(parts)!r}")

        root = parse_node()
        if consumed != count:
            raise ModelFormatError(f"tree section declares {count} nodes but holds {consumed}")
        model = TreeModel(dim=dim, root=root)
    elif algorithm == Algorithm.LDA:
        class_parts = reader.expect_key("classes")
        class_ids = np.array([_parse_int(c, "class id") for c in class_parts], dtype=np.int64)
        log_priors = _parse_floats(reader.expect_key("logpriors"), len(class_ids), "logpriors")
        means = np.zeros((len(class_ids), dim))
        for i, c in enumerate(class_ids):
            parts = reader.expect_key("mean")
            if _parse_int(parts[0], "mean class") != int(c):
                raise ModelFormatError("mean lines out of order with classes line")
            means[i] = _parse_floats(parts[1:], dim, "mean vector")
        icov = np.zeros((dim, dim))
        for i in range(dim):
            icov[i] = _parse_floats(reader.expect_key("icov"), dim, "icov row")
        model = LdaModel(
            dim=dim, class_ids=class_ids, means=means, inv_covariance=icov, log_priors=log_priors
        )
    elif algorithm == Algorithm.LinearSVM:
        class_parts = reader.expect_key("classes")
        class_ids = np.array([_parse_int(c, "class id") for c in class_parts], dtype=np.int64)
        weights = np.zeros((len(class_ids), dim))
        biases = np.zeros(len(class_ids))
        for i, c in enumerate(class_ids):
            parts = reader.expect_key("weights")
            if _parse_int(parts[0], "weights class") != int(c):
                raise ModelFormatError("weights lines out of order with classes line")
            weights[i] = _parse_floats(parts[1:], dim, "weights vector")
            parts = reader.expect_key("bias")
            if _parse_int(parts[0], "bias class") != int(c):
                raise ModelFormatError("bias lines out of order with classes line")
            biases[i] = float(_parse_floats(parts[1:], 1, "bias value")[0])
        model = SvmModel(dim=dim, class_ids=class_ids, weights=weights, biases=biases)
    else:  # pragma: no cover - Algorithm is a closed enum
        raise ModelFormatError(f"unhandled algorithm {algorithm}")

    if reader.next() != "end":
        raise ModelFormatError("missing 'end' terminator")
    return model
