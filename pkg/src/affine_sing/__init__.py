"""Exact certification of singular vectors in V^k(sl_n), their Zhu images,
and the Cartan polynomials that classify highest weights."""

__version__ = "0.1.0"
