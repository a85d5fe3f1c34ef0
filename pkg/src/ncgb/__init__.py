"""Exact noncommutative Groebner bases and envelopes of anti-Jordan triple systems."""

from .arith import GR, I, ONE, ZERO, GaussianRational, parse_scalar, render_scalar
from .freealg import Alphabet, NcPoly, parse_poly, render_poly, render_word
from .groebner import DegreeBoundExceeded, RewriteSystem, complete, normal_form, normal_words
from .ajts import TripleSystem, check_axioms, envelope_relations, matrix_ajts, zero_system
from .envelope import AlgElement, EnvelopeAlgebra, InfiniteEnvelope, build_envelope, envelope_of
from .center import center_basis, is_central, nullspace
from .decomp import matrix_units, representation, wedderburn_summary

__version__ = "0.1.0"
