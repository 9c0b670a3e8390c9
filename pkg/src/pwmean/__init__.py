"""Multivariate means of positive definite matrices, centred on the
parameterized Wasserstein mean, with numerical checks of its inequalities."""

__version__ = "0.1.0"
