"""Exact link and web invariants with checkerboard state models.

Modules: ``exact`` (numbers and polynomials), ``links`` (PD diagrams),
``kauffman`` (skein evaluation), ``webs`` (B2 web reduction), ``graphs``
(PG(2,4), S(3,6,22), Higman-Sims), ``models`` (state sums), ``suite`` and
``cli``.
"""

from .errors import ResourceLimitError
from .exact import BiLaurent, Frac, GoldenNumber, LaurentPoly, TAU, parse_golden, parse_laurent
from .kauffman import bracket, kauffman, specialize_kauffman
from .links import LinkDiagram, checkerboard, corpus, parse_pd
from .webs import Web, evaluate_link_b2, parse_web, reduce_web

__version__ = "0.1.0"
