"""Two-hidden-layer sigmoid network trained by mini-batch gradient descent.

The architecture is fixed: inputs -> 6 sigmoid -> 6 sigmoid -> 1 sigmoid,
trained on mean binary cross-entropy.
"""

import numpy as np

from ..errors import ValidationError
from ..rng import as_stream
from ._common import Classifier, check_query, check_xy, freeze

HIDDEN = (6, 6)
_EPS = 1e-12


def sigmoid(z):
    return np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))), np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))


def init_params(n_inputs, rng, hidden=HIDDEN):
    sizes = (n_inputs,) + tuple(hidden) + (1,)
    params = []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
        bound = 1.0 / np.sqrt(fan_in)
        W = rng.uniform(-bound, bound, size=(fan_in, fan_out))
        b = rng.uniform(-bound, bound, size=fan_out)
        params.append((W, b))
    return params


def forward(params, X):
    acts = [X]
    a = X
    for W, b in params:
        a = sigmoid(a @ W + b)
        acts.append(a)
    return acts


def loss(params, X, y):
    p = forward(params, X)[-1][:, 0]
    p = np.clip(p, _EPS, 1.0 - _EPS)
    return float(-np.mean(y * np.log(p) + (1.0 - y) * np.log(1.0 - p)))


def gradients(params, X, y):
    """Backpropagated gradients of :func:`loss`, as ``[(dW, db), ...]``."""
    acts = forward(params, X)
    n = X.shape[0]
    # sigmoid output with cross-entropy: dL/dz = p - y
    delta = (acts[-1][:, 0] - y)[:, None] / n
    grads = []
    for layer in range(len(params) - 1, -1, -1):
        W, _ = params[layer]
        a_prev = acts[layer]
        grads.append((a_prev.T @ delta, delta.sum(axis=0)))
        if layer:
            delta = (delta @ W.T) * a_prev * (1.0 - a_prev)
    return grads[::-1]


class MLPClassifier(Classifier):
    kind = "MLP"

    def __init__(self, epochs=500, learning_rate=0.1, batch_size=32):
        if epochs < 1 or learning_rate <= 0 or batch_size < 1:
            raise ValidationError("epochs, learning_rate and batch_size must be positive")
        self.epochs = int(epochs)
        self.learning_rate = float(learning_rate)
        self.batch_size = int(batch_size)

    def fit(self, X, y, rng=None):
        X, y = check_xy(X, y)
        rng = as_stream(0 if rng is None else rng)
        yf = y.astype(float)
        params = init_params(X.shape[1], rng)
        n = X.shape[0]
        lr = self.learning_rate
        for _ in range(self.epochs):
            order = rng.permutation(n)
            for start in range(0, n, self.batch_size):
                rows = order[start:start + self.batch_size]
                grads = gradients(params, X[rows], yf[rows])
                params = [(W - lr * gW, b - lr * gb) for (W, b), (gW, gb) in zip(params, grads)]
        for W, b in params:
            freeze(W, b)
        self.params_ = tuple(params)
        self.n_features_ = X.shape[1]
        return self

    def predict_scores(self, X):
        X = check_query(X, self.n_features_)
        return forward(self.params_, X)[-1][:, 0]

    def predict(self, X):
        return (self.predict_scores(X) > 0.5).astype(np.int64)


def fit_mlp(train, epochs=500, learning_rate=0.1, rng=None, batch_size=32):
    return MLPClassifier(epochs, learning_rate, batch_size).fit(train.features, train.labels, rng)
